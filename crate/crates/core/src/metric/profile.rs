use serde::Serialize;

use super::MetricError;
use crate::table::GroupTable;

/// Cell-by-cell comparison of two operations on the same set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceProfile {
    /// Number of cells where the operations differ.
    pub total: usize,
    /// `row[g]` counts the columns where row `g` differs.
    pub row: Vec<usize>,
    /// Smallest row distance over non-identity rows; present only when both
    /// operations share their identity.
    pub m: Option<usize>,
    /// Rows on which the operations agree completely, ascending.
    pub agreement: Vec<usize>,
    pub identities: (usize, usize),
}

impl DistanceProfile {
    pub fn identities_coincide(&self) -> bool {
        self.identities.0 == self.identities.1
    }

    /// Rows with `d(g) = k`.
    pub fn rows_with(&self, k: usize) -> Vec<usize> {
        (0..self.row.len()).filter(|&g| self.row[g] == k).collect()
    }
}

pub fn dist(a: &GroupTable, b: &GroupTable) -> Result<DistanceProfile, MetricError> {
    let n = a.order();
    if n != b.order() {
        return Err(MetricError::OrderMismatch { left: n, right: b.order() });
    }
    let row: Vec<usize> = (0..n)
        .map(|g| a.row(g).iter().zip(b.row(g)).filter(|(x, y)| x != y).count())
        .collect();
    let total = row.iter().sum();
    let identities = (a.identity(), b.identity());
    let m = if identities.0 == identities.1 {
        (0..n).filter(|&g| g != identities.0).map(|g| row[g]).min()
    } else {
        None
    };
    let agreement = (0..n).filter(|&g| row[g] == 0).collect();
    Ok(DistanceProfile { total, row, m, agreement, identities })
}

/// Number of pairs `(x, y)` of `domain` with `f(x∘y) != f(x)∗f(y)`, where
/// `∗` is the operation of `codomain`. `f` need not be injective.
pub fn hom_distance(
    f: &[usize],
    domain: &GroupTable,
    codomain: &GroupTable,
) -> Result<usize, MetricError> {
    let n = domain.order();
    if f.len() != n {
        return Err(MetricError::MapLength { expected: n, found: f.len() });
    }
    let k = codomain.order();
    if let Some((x, &value)) = f.iter().enumerate().find(|(_, &v)| v >= k) {
        return Err(MetricError::ImageOutOfRange { x, value, n: k });
    }
    let mut count = 0;
    for x in 0..n {
        let fx = f[x];
        for y in 0..n {
            if f[domain.op(x, y)] != codomain.op(fx, f[y]) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Rows with `d(g) < n/3`, strictly.
pub fn light_set(a: &GroupTable, b: &GroupTable) -> Result<Vec<usize>, MetricError> {
    let profile = dist(a, b)?;
    let n = a.order();
    Ok((0..n).filter(|&g| 3 * profile.row[g] < n).collect())
}
