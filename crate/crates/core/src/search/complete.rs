use thiserror::Error;

use crate::perm::Permutation;
use crate::table::GroupTable;

/// Why a single modified row does not extend to a group table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("row has {found} entries, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("row {0} is the identity row")]
    IdentityRow(usize),
    /// The row is not one cycle through all elements; the candidate is not a
    /// left translation by a generator.
    #[error("row is not a full cycle (cycle type {0:?})")]
    NotPCycle(Vec<usize>),
    #[error("row maps the identity to {found}, expected {h}")]
    RowMismatch { h: usize, found: usize },
}

/// Builds the group in which left translation by `h` is `sigma`.
///
/// When `sigma` is a single cycle through all `n` points, `h` generates a
/// cyclic group whose elements are `sigma^k(e)` and whose rows are `sigma^k`,
/// so the whole table is forced. The identity `e` of `base` is kept.
pub fn complete_from_row(
    base: &GroupTable,
    h: usize,
    sigma: &Permutation,
) -> Result<GroupTable, CompletionError> {
    let n = base.order();
    if sigma.len() != n {
        return Err(CompletionError::OrderMismatch { expected: n, found: sigma.len() });
    }
    let e = base.identity();
    if h == e {
        return Err(CompletionError::IdentityRow(h));
    }
    if !sigma.is_full_cycle() {
        return Err(CompletionError::NotPCycle(sigma.cycle_type()));
    }
    if sigma.apply(e) != h {
        return Err(CompletionError::RowMismatch { h, found: sigma.apply(e) });
    }

    // powers[k] = sigma^k(e)
    let mut powers = Vec::with_capacity(n);
    let mut x = e;
    for _ in 0..n {
        powers.push(x);
        x = sigma.apply(x);
    }
    let mut cells = vec![0; n * n];
    for j in 0..n {
        for k in 0..n {
            cells[powers[j] * n + powers[k]] = powers[(j + k) % n];
        }
    }
    Ok(GroupTable::from_cells(n, cells).expect("a full cycle generates a cyclic group"))
}
