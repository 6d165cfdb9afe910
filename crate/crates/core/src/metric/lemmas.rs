//! Structural facts that every pair of group operations on a common set
//! satisfies. A non-empty result on valid tables means a bug somewhere.

use serde::Serialize;

use super::profile::dist;
use super::MetricError;
use crate::iso::find_isomorphism;
use crate::metric::is_prime;
use crate::table::GroupTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "lemma", rename_all = "snake_case")]
pub enum LemmaViolation {
    /// `a∘b != a∗b` but `d(a) + d(b) + d(a∘b) < n`.
    GoodRow { a: usize, b: usize, sum: usize, n: usize },
    /// Two distinct rows of a Latin square never differ in one place.
    RowDistanceOne { g: usize },
    /// At odd order, left translations are even, so they cannot differ by a
    /// transposition.
    RowDistanceTwoAtOddOrder { g: usize },
    /// The agreement set is not closed under the operation.
    AgreementNotClosed { x: usize, y: usize },
    /// Identities coincide but the agreement set is not a subgroup.
    AgreementNotSubgroup { missing: usize },
    /// Isomorphic operations with `n > 7` and distance at most `6n - 18` must
    /// share their identity.
    IdentitiesDiffer { first: usize, second: usize, total: usize },
}

pub fn check_lemmas(a: &GroupTable, b: &GroupTable) -> Result<Vec<LemmaViolation>, MetricError> {
    let profile = dist(a, b)?;
    let n = a.order();
    let d = &profile.row;
    let mut out = Vec::new();

    for x in 0..n {
        for y in 0..n {
            let xy = a.op(x, y);
            if xy != b.op(x, y) {
                let sum = d[x] + d[y] + d[xy];
                if sum < n {
                    out.push(LemmaViolation::GoodRow { a: x, b: y, sum, n });
                }
            }
        }
    }

    for g in 0..n {
        match d[g] {
            1 => out.push(LemmaViolation::RowDistanceOne { g }),
            2 if n % 2 == 1 => out.push(LemmaViolation::RowDistanceTwoAtOddOrder { g }),
            _ => {}
        }
    }

    let h = &profile.agreement;
    let mut in_h = vec![false; n];
    h.iter().for_each(|&g| in_h[g] = true);
    'closure: for &x in h {
        for &y in h {
            if !in_h[a.op(x, y)] {
                out.push(LemmaViolation::AgreementNotClosed { x, y });
                break 'closure;
            }
        }
    }
    if profile.identities_coincide() {
        let e = a.identity();
        if !in_h[e] {
            out.push(LemmaViolation::AgreementNotSubgroup { missing: e });
        } else if let Some(&x) = h.iter().find(|&&x| !in_h[a.inverse(x)]) {
            out.push(LemmaViolation::AgreementNotSubgroup { missing: a.inverse(x) });
        }
    } else if n > 7 && profile.total as i64 <= 6 * n as i64 - 18 {
        let isomorphic = is_prime(n)
            || find_isomorphism(a, b, usize::MAX)
                .expect("uncapped search cannot fail")
                .is_some();
        if isomorphic {
            out.push(LemmaViolation::IdentitiesDiffer {
                first: profile.identities.0,
                second: profile.identities.1,
                total: profile.total,
            });
        }
    }
    Ok(out)
}
