use itertools::Itertools;
use serde::Serialize;

use super::SearchError;
use crate::metric::is_prime;
use crate::perm::Permutation;
use crate::table::GroupTable;

/// Slot maps applied within a row: entry `j` of column `h^{i_j}` is replaced
/// by the original entry of column `h^{i_{r[j]}}`.
///
/// Four changed entries are always the double transposition pairing first
/// with third and second with fourth. Three changed entries form a 3-cycle;
/// both orientations are enumerated.
const DOUBLE_TRANSPOSITION: [usize; 4] = [2, 3, 0, 1];
const THREE_CYCLES: [[usize; 3]; 2] = [[1, 2, 0], [2, 0, 1]];

/// One candidate modification of row `h` of `Z_p`: `m` cells at columns
/// `h^{i_0}, …, h^{i_{m-1}}` with `0 < i_0 < … < i_{m-1} < p` are
/// rearranged according to `rearrangement`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PatternMod {
    #[serde(skip)]
    pub p: usize,
    pub h: usize,
    pub m: usize,
    pub positions: Vec<usize>,
    pub rearrangement: Vec<usize>,
}

impl PatternMod {
    /// Columns `h^{i_j}` of the modified cells, in position order.
    pub fn columns(&self, base: &GroupTable) -> Vec<usize> {
        self.positions.iter().map(|&i| base.power(self.h, i)).collect()
    }

    /// The new left translation by `h`: the base row with the chosen cells
    /// rearranged.
    pub fn modified_row(&self, base: &GroupTable) -> Permutation {
        let cols = self.columns(base);
        let row = base.row(self.h);
        let mut image = row.to_vec();
        for (j, &r) in self.rearrangement.iter().enumerate() {
            image[cols[j]] = row[cols[r]];
        }
        Permutation::from_images(image).expect("rearranging a row keeps it a permutation")
    }
}

fn rearrangements(m: usize) -> Result<Vec<Vec<usize>>, SearchError> {
    match m {
        3 => Ok(THREE_CYCLES.iter().map(|c| c.to_vec()).collect()),
        4 => Ok(vec![DOUBLE_TRANSPOSITION.to_vec()]),
        _ => Err(SearchError::UnsupportedM(m)),
    }
}

/// All patterns on the fixed row `h = 1`, in lexicographic order of
/// positions and then rearrangement.
pub fn enumerate_patterns(
    p: usize,
    m: usize,
) -> Result<impl Iterator<Item = PatternMod>, SearchError> {
    enumerate_patterns_for_row(p, m, 1)
}

/// All patterns on row `h`. Exponents are taken with respect to `h`, so the
/// columns depend on the base table only through the powers of `h`.
pub fn enumerate_patterns_for_row(
    p: usize,
    m: usize,
    h: usize,
) -> Result<impl Iterator<Item = PatternMod>, SearchError> {
    if !is_prime(p) {
        return Err(SearchError::NotPrime(p));
    }
    let shapes = rearrangements(m)?;
    if h == 0 || h >= p {
        return Err(SearchError::BadRow { h, p });
    }
    Ok((1..p).combinations(m).flat_map(move |positions| {
        shapes.clone().into_iter().map(move |rearrangement| PatternMod {
            p,
            h,
            m,
            positions: positions.clone(),
            rearrangement,
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kind::{make_group, GroupKind};

    #[test]
    fn counts() {
        assert_eq!(enumerate_patterns(11, 4).unwrap().count(), 210);
        assert_eq!(enumerate_patterns(29, 3).unwrap().count(), 6552);
        assert_eq!(enumerate_patterns(19, 4).unwrap().count(), 3060);
    }

    #[test]
    fn positions_are_positive_and_increasing() {
        for m in [3, 4] {
            for pat in enumerate_patterns(13, m).unwrap() {
                assert!(pat.positions[0] > 0);
                assert!(pat.positions.windows(2).all(|w| w[0] < w[1]));
                assert!(pat.rearrangement.iter().enumerate().all(|(j, &r)| j != r));
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<PatternMod> = enumerate_patterns(11, 3).unwrap().collect();
        let keys: Vec<_> = all.iter().map(|p| (p.positions.clone(), p.rearrangement.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn errors() {
        assert!(matches!(enumerate_patterns(11, 5), Err(SearchError::UnsupportedM(5))));
        assert!(matches!(enumerate_patterns(12, 4), Err(SearchError::NotPrime(12))));
        assert!(matches!(enumerate_patterns_for_row(11, 4, 0), Err(SearchError::BadRow { .. })));
    }

    #[test]
    fn z5_double_transposition_row() {
        let z5 = make_group(&GroupKind::Cyclic(5));
        let pat = PatternMod { p: 5, h: 1, m: 4, positions: vec![1, 2, 3, 4], rearrangement: DOUBLE_TRANSPOSITION.to_vec() };
        assert_eq!(pat.modified_row(&z5).images(), &[1, 4, 0, 2, 3]);
    }

    #[test]
    fn columns_follow_powers_of_h() {
        let z11 = make_group(&GroupKind::Cyclic(11));
        let pat = enumerate_patterns_for_row(11, 3, 3).unwrap().next().unwrap();
        assert_eq!(pat.positions, vec![1, 2, 3]);
        assert_eq!(pat.columns(&z11), vec![3, 6, 9]);
    }
}
