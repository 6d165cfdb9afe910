//! Validated Cayley tables on the element set `{0, …, n-1}`.

use serde::Serialize;
use thiserror::Error;

use crate::perm::Permutation;

/// Reasons a square array fails to be a group operation table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("cell ({row}, {col}) holds {value}, outside 0..{n}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("not a Latin square: {line} {index} repeats {value}")]
    NotLatin { line: Line, index: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Line::Row => "row",
            Line::Column => "column",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
}

/// A group operation on `0..n`. `cells[a * n + b]` is `a∘b`.
///
/// Values of this type always satisfy the group axioms; the only ways to
/// obtain one are validation, the catalog constructors and transport.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupTable {
    n: usize,
    cells: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates a row-major table: square shape, Latin property, unique
    /// two-sided identity, then the cubic associativity check.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, ValidationError> {
        let n = rows.len();
        if n == 0 {
            return Err(ValidationError::Empty);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(ValidationError::NotSquare { row, len: entries.len(), n });
            }
            cells.extend_from_slice(entries);
        }
        Self::from_cells(n, cells)
    }

    /// Same as [`GroupTable::from_rows`] for a flat row-major buffer of
    /// length `n * n`.
    pub fn from_cells(n: usize, cells: Vec<usize>) -> Result<Self, ValidationError> {
        if n == 0 {
            return Err(ValidationError::Empty);
        }
        if cells.len() != n * n {
            return Err(ValidationError::NotSquare { row: cells.len() / n, len: cells.len() % n, n });
        }
        for (i, &value) in cells.iter().enumerate() {
            if value >= n {
                return Err(ValidationError::EntryOutOfRange { row: i / n, col: i % n, value, n });
            }
        }
        check_latin(n, &cells)?;
        let identity = find_identity(n, &cells).ok_or(ValidationError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                let ab = cells[a * n + b];
                for c in 0..n {
                    if cells[ab * n + c] != cells[a * n + cells[b * n + c]] {
                        return Err(ValidationError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(Self { n, cells, identity })
    }

    /// Skips validation. Callers must already know the cells form a group
    /// with the given identity.
    pub(crate) fn from_trusted(n: usize, cells: Vec<usize>, identity: usize) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        debug_assert_eq!(find_identity(n, &cells), Some(identity));
        Self { n, cells, identity }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `a∘b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    #[inline]
    pub fn row(&self, a: usize) -> &[usize] {
        &self.cells[a * self.n..(a + 1) * self.n]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.n)
    }

    /// Left translation `x ↦ g∘x` as a permutation.
    pub fn left_translation(&self, g: usize) -> Permutation {
        Permutation::from_images(self.row(g).to_vec()).expect("rows of a group table are permutations")
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.row(a)
            .iter()
            .position(|&x| x == self.identity)
            .expect("every row contains the identity")
    }

    /// `g∘g∘…∘g` with `k` factors; the identity for `k = 0`.
    pub fn power(&self, g: usize, k: usize) -> usize {
        let mut acc = self.identity;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.op(acc, base);
            }
            base = self.op(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// The table of `a∗b = f(f⁻¹(a)∘f⁻¹(b))`, which makes `f` an isomorphism
    /// from `self` onto the result.
    pub fn transport(&self, f: &Permutation) -> Result<GroupTable, TableError> {
        let n = self.n;
        if f.len() != n {
            return Err(TableError::OrderMismatch { left: n, right: f.len() });
        }
        let mut cells = vec![0; n * n];
        for a in 0..n {
            let fa = f.apply(a);
            for b in 0..n {
                cells[fa * n + f.apply(b)] = f.apply(self.op(a, b));
            }
        }
        Ok(Self::from_trusted(n, cells, f.apply(self.identity)))
    }
}

fn check_latin(n: usize, cells: &[usize]) -> Result<(), ValidationError> {
    let mut seen = vec![false; n];
    for row in 0..n {
        seen.fill(false);
        for col in 0..n {
            let value = cells[row * n + col];
            if std::mem::replace(&mut seen[value], true) {
                return Err(ValidationError::NotLatin { line: Line::Row, index: row, value });
            }
        }
    }
    for col in 0..n {
        seen.fill(false);
        for row in 0..n {
            let value = cells[row * n + col];
            if std::mem::replace(&mut seen[value], true) {
                return Err(ValidationError::NotLatin { line: Line::Column, index: col, value });
            }
        }
    }
    Ok(())
}

fn find_identity(n: usize, cells: &[usize]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| cells[e * n + x] == x && cells[x * n + e] == x))
}
