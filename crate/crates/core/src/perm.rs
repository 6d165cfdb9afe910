//! Permutations of the element set `{0, …, n-1}`.
//!
//! Composition follows function notation: `f.compose(&g)` maps `x` to
//! `f(g(x))`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("image {value} at position {position} is outside 0..{n}")]
    OutOfRange { position: usize, value: usize, n: usize },
    #[error("element {value} appears twice")]
    Repeated { value: usize },
    #[error("permutation sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
}

/// A bijection of `0..n`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    /// Builds a permutation from one-line notation, rejecting anything that
    /// is not a bijection.
    pub fn from_images(image: Vec<usize>) -> Result<Self, PermutationError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for (position, &value) in image.iter().enumerate() {
            if value >= n {
                return Err(PermutationError::OutOfRange { position, value, n });
            }
            if seen[value] {
                return Err(PermutationError::Repeated { value });
            }
            seen[value] = true;
        }
        Ok(Self { image })
    }

    /// Builds a permutation of `0..n` from disjoint cycles. Each cycle
    /// `[a, b, c]` sends `a -> b -> c -> a`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermutationError> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (position, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(PermutationError::OutOfRange { position, value: x, n });
                }
                if used[x] {
                    return Err(PermutationError::Repeated { value: x });
                }
                used[x] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                image[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { image })
    }

    /// The transposition swapping `a` and `b`.
    ///
    /// # Panics
    /// Panics if `a` or `b` is not below `n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a < n && b < n, "transposition ({a} {b}) outside 0..{n}");
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Self { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn into_images(self) -> Vec<usize> {
        self.image
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Self { image: inv }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, PermutationError> {
        if self.len() != other.len() {
            return Err(PermutationError::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Self {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.image[x] == x).collect()
    }

    /// Number of moved points.
    pub fn support_len(&self) -> usize {
        self.len() - self.fixed_points().len()
    }

    /// Non-trivial cycles, each starting at its smallest element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.extend(std::iter::repeat(1).take(self.fixed_points().len()));
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// True when the permutation is one cycle through all `n` points.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return false;
        }
        let mut x = self.image[0];
        let mut steps = 1;
        while x != 0 {
            x = self.image[x];
            steps += 1;
        }
        steps == n
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cycles_and_sign() {
        let p = Permutation::from_cycles(8, &[vec![2, 3], vec![5, 7, 6]]).unwrap();
        assert_eq!(p.cycles(), vec![vec![2, 3], vec![5, 7, 6]]);
        assert_eq!(p.to_string(), "(2 3)(5 7 6)");
        assert_eq!(p.sign(), -1);
        assert_eq!(p.cycle_type(), vec![3, 2, 1, 1, 1]);
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(PermutationError::Repeated { value: 0 })
        );
        assert!(matches!(
            Permutation::from_images(vec![0, 3, 1]),
            Err(PermutationError::OutOfRange { value: 3, .. })
        ));
        assert!(Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn full_cycle_detection() {
        assert!(Permutation::from_images(vec![1, 4, 0, 2, 3]).unwrap().is_full_cycle());
        assert!(!Permutation::transposition(5, 1, 2).is_full_cycle());
        assert!(Permutation::identity(1).is_full_cycle());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..10).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_composes_to_identity(p in arb_perm()) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }

        #[test]
        fn cycles_round_trip_and_sign_is_multiplicative(p in arb_perm()) {
            let q = Permutation::from_cycles(p.len(), &p.cycles()).unwrap();
            prop_assert_eq!(&q, &p);
            let sq = p.compose(&p).unwrap();
            prop_assert_eq!(sq.sign(), 1);
        }
    }
}
