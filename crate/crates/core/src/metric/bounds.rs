//! Closed-form stability values and the lower bounds used to rule out
//! near neighbours of prime-order cyclic groups without search.
//!
//! Several bounds hold only in an either/or form: a pair of groups is either
//! at distance at least `δ₀` or at distance at least the bound. For odd `n`
//! we have `δ₀ = 6n - 18`, which is exactly the exclusion threshold, so
//! either branch excludes the pair once a bound reaches the threshold.

use itertools::Itertools;
use serde::Serialize;

use super::MetricError;
use crate::iso::is_dihedral_twice_odd;
use crate::table::GroupTable;

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn ceil_div(a: usize, b: usize) -> i64 {
    a.div_ceil(b) as i64
}

/// `6n - 18` for odd `n`, `6n - 20` for dihedral groups of twice odd order,
/// `6n - 24` otherwise.
pub fn delta0(t: &GroupTable) -> Result<usize, MetricError> {
    let n = t.order();
    if n < 5 {
        return Err(MetricError::OrderTooSmall { n, min: 5 });
    }
    Ok(if n % 2 == 1 {
        6 * n - 18
    } else if is_dihedral_twice_odd(t) {
        6 * n - 20
    } else {
        6 * n - 24
    })
}

/// `6p - 18`, the distance every candidate neighbour of `Z_p` must reach.
pub fn prime_threshold(p: usize) -> i64 {
    6 * p as i64 - 18
}

/// At least `⌈n/4⌉` rows have distance `≥ ⌈n/3⌉` unless the pair is
/// already at distance `≥ δ₀`; the remaining non-identity rows contribute
/// at least `m` each.
pub fn estim1_bound(n: usize, m: usize) -> i64 {
    let (n4, n3) = (ceil_div(n, 4), ceil_div(n, 3));
    let (n, m) = (n as i64, m as i64);
    n4 * n3 + (n - n4 - 1) * m
}

/// Bounds from an `l`-element set `Y` of disagreeing columns of a minimal
/// row `h` with `Y ∩ h∘Y = ∅`: every `y ∈ Y` pairs rows `y` and `h∘y` with
/// joint distance at least `n - m`.
///
/// The first value charges `m` to every other non-identity row. The second
/// additionally uses the heavy rows of [`estim1_bound`] and is only defined
/// when `⌈n/4⌉ >= 2l`.
pub fn estim2_bounds(n: usize, m: usize, l: usize) -> (i64, Option<i64>) {
    let (n4, n3) = (ceil_div(n, 4), ceil_div(n, 3));
    let (n, m, l) = (n as i64, m as i64, l as i64);
    let first = l * (n - m) + (n - 2 * l - 1) * m;
    let second = (n4 - 2 * l >= 0).then(|| l * (n - m) + (n4 - 2 * l) * n3 + (n - n4 - 1) * m);
    (first, second)
}

/// Size of a disjoint set `Y` that always exists among the disagreeing
/// columns of a row with distance `m` in a prime-order pair.
///
/// For `m = 4` the value 3 fails exactly when the disagreeing exponents come
/// in two adjacent pairs; that configuration is settled separately (the
/// neighbour is then a transposition transport, which costs at least `δ₀`).
pub fn guaranteed_subset_size(m: usize) -> Option<usize> {
    match m {
        3 => Some(2),
        4 | 5 => Some(3),
        _ => None,
    }
}

/// A largest `Y ⊆ disagree` with `Y ∩ {h∘y : y ∈ Y} = ∅`, found by
/// exhaustive search over subsets, largest first; ties go to the
/// lexicographically first subset in input order.
pub fn max_disjoint_subset(t: &GroupTable, h: usize, disagree: &[usize]) -> Vec<usize> {
    for size in (1..=disagree.len()).rev() {
        for subset in disagree.iter().copied().combinations(size) {
            if subset.iter().all(|&y| !subset.contains(&t.op(h, y))) {
                return subset;
            }
        }
    }
    Vec::new()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedBound {
    pub name: &'static str,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub order: usize,
    pub m: usize,
    pub bounds: Vec<NamedBound>,
    pub best: i64,
    pub threshold: i64,
    pub excluded: bool,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<i64> {
        self.bounds.iter().find(|b| b.name == name).map(|b| b.value)
    }
}

/// Every applicable lower bound on the distance between `Z_p` and a
/// distinct group whose smallest non-identity row distance is `m`.
///
/// * `row_floor`: each of the `p - 1` non-identity rows differs in at least
///   `m` places.
/// * `heavy_rows`: [`estim1_bound`].
/// * `disjoint_subset` and `disjoint_subset_heavy_rows`: the two values of
///   [`estim2_bounds`] with `l` from [`guaranteed_subset_size`].
///
/// For `m = 3` with `l = 2` the second of these is the expression
/// `5p - 9 + (⌈p/4⌉ - 4)⌈p/3⌉ - 3⌈p/4⌉`.
pub fn analytic_lower_bound(p: usize, m: usize) -> Result<BoundReport, MetricError> {
    if !is_prime(p) {
        return Err(MetricError::NotPrime(p));
    }
    if p <= 7 {
        return Err(MetricError::OrderTooSmall { n: p, min: 11 });
    }
    if m < 3 {
        return Err(MetricError::MTooSmall(m));
    }
    let mut bounds = vec![
        NamedBound { name: "row_floor", value: (m * (p - 1)) as i64 },
        NamedBound { name: "heavy_rows", value: estim1_bound(p, m) },
    ];
    if let Some(l) = guaranteed_subset_size(m) {
        let (first, second) = estim2_bounds(p, m, l);
        bounds.push(NamedBound { name: "disjoint_subset", value: first });
        if let Some(second) = second {
            bounds.push(NamedBound { name: "disjoint_subset_heavy_rows", value: second });
        }
    }
    let best = bounds.iter().map(|b| b.value).max().expect("at least one bound");
    let threshold = prime_threshold(p);
    Ok(BoundReport { order: p, m, bounds, best, threshold, excluded: best >= threshold })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kind::{make_group, GroupKind};

    #[test]
    fn delta0_branches() {
        assert_eq!(delta0(&make_group(&GroupKind::Cyclic(7))).unwrap(), 24);
        assert_eq!(delta0(&make_group(&GroupKind::Dihedral(5))).unwrap(), 40);
        assert_eq!(delta0(&make_group(&GroupKind::Cyclic(8))).unwrap(), 24);
        assert_eq!(delta0(&make_group(&GroupKind::Dihedral(3))).unwrap(), 16);
        assert_eq!(delta0(&make_group(&GroupKind::Cyclic(10))).unwrap(), 36);
        assert_eq!(
            delta0(&make_group(&GroupKind::Cyclic(4))),
            Err(MetricError::OrderTooSmall { n: 4, min: 5 })
        );
    }

    #[test]
    fn estim1_values() {
        assert_eq!(estim1_bound(11, 3), 33);
        assert_eq!(estim1_bound(13, 4), 52);
        assert_eq!(estim1_bound(31, 3), 154);
    }

    #[test]
    fn estim2_values() {
        assert_eq!(estim2_bounds(13, 5, 3), (54, None));
        assert_eq!(estim2_bounds(13, 5, 3).0, 8 * 13 - 50);
        assert_eq!(estim2_bounds(19, 4, 3).0, 93);
        assert_eq!(estim2_bounds(19, 4, 3).0, 7 * 19 - 40);
        for n in 5..40 {
            for m in 0..6 {
                assert_eq!(estim2_bounds(n, m, 0).0, ((n - 1) * m) as i64);
            }
        }
        // Proviso boundary: ⌈21/4⌉ = 6 = 2·3.
        assert!(estim2_bounds(21, 4, 3).1.is_some());
        assert!(estim2_bounds(19, 4, 3).1.is_none());
    }

    #[test]
    fn second_estimate_with_two_disjoint_columns_matches_closed_form() {
        for p in [37usize, 41, 43, 101, 997] {
            let (n4, n3) = (p.div_ceil(4) as i64, p.div_ceil(3) as i64);
            let closed = 5 * p as i64 - 9 + (n4 - 4) * n3 - 3 * n4;
            assert_eq!(estim2_bounds(p, 3, 2).1, Some(closed), "p = {p}");
        }
    }

    #[test]
    fn analytic_examples() {
        let r = analytic_lower_bound(13, 5).unwrap();
        assert_eq!(r.best, 60);
        assert_eq!(r.threshold, 60);
        assert!(r.excluded);
        assert_eq!(r.get("row_floor"), Some(60));
        assert_eq!(r.get("disjoint_subset"), Some(54));

        let r = analytic_lower_bound(37, 3).unwrap();
        assert_eq!(r.get("disjoint_subset_heavy_rows"), Some(224));
        assert_eq!(r.threshold, 204);
        assert!(r.excluded);

        let r = analytic_lower_bound(11, 4).unwrap();
        assert_eq!(r.get("disjoint_subset"), Some(37));
        assert_eq!(r.threshold, 48);
        assert!(!r.excluded);
    }

    #[test]
    fn analytic_errors() {
        assert_eq!(analytic_lower_bound(15, 3), Err(MetricError::NotPrime(15)));
        assert_eq!(analytic_lower_bound(7, 3), Err(MetricError::OrderTooSmall { n: 7, min: 11 }));
        assert_eq!(analytic_lower_bound(11, 2), Err(MetricError::MTooSmall(2)));
    }

    #[test]
    fn six_or_more_is_excluded_by_row_floor_alone() {
        for p in [11, 13, 17, 19, 23, 29, 31, 101] {
            for m in 6..10 {
                let r = analytic_lower_bound(p, m).unwrap();
                assert!(r.get("row_floor").unwrap() >= r.threshold);
                assert!(r.excluded);
            }
        }
    }

    #[test]
    fn disjoint_subsets() {
        let z11 = make_group(&GroupKind::Cyclic(11));
        assert_eq!(max_disjoint_subset(&z11, 1, &[1, 2, 5, 6]), vec![1, 5]);
        assert_eq!(max_disjoint_subset(&z11, 1, &[1, 2, 3, 4, 5]), vec![1, 3, 5]);
        assert_eq!(max_disjoint_subset(&z11, 1, &[4]), vec![4]);
        assert_eq!(max_disjoint_subset(&z11, 1, &[]), Vec::<usize>::new());
        // Generic four positions admit three disjoint columns.
        assert_eq!(max_disjoint_subset(&z11, 1, &[1, 3, 4, 8]).len(), 3);
    }

    #[test]
    fn five_positions_always_admit_even_indexed_choice() {
        // Exponents 0 < i0 < … < i4 < p along the powers of h = 3 in Z_13.
        let t = make_group(&GroupKind::Cyclic(13));
        let h = 3;
        for exps in (1..13).combinations(5) {
            let cols: Vec<usize> = exps.iter().map(|&i| t.power(h, i)).collect();
            let y = [cols[0], cols[2], cols[4]];
            assert!(y.iter().all(|&c| !y.contains(&t.op(h, c))), "{exps:?}");
            assert!(max_disjoint_subset(&t, h, &cols).len() >= 3);
        }
    }

    #[test]
    fn four_positions_fail_only_for_two_adjacent_pairs() {
        let t = make_group(&GroupKind::Cyclic(11));
        for exps in (1..11usize).combinations(4) {
            let cols: Vec<usize> = exps.iter().map(|&i| t.power(1, i)).collect();
            let special = exps[1] == exps[0] + 1 && exps[3] == exps[2] + 1;
            let size = max_disjoint_subset(&t, 1, &cols).len();
            assert_eq!(size < 3, special, "{exps:?}");
        }
    }

    #[test]
    fn primes() {
        let small: Vec<usize> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(10007));
    }
}
