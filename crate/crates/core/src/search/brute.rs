//! Exact stability values at small orders by enumerating every group
//! operation on `{0, …, n-1}`.
//!
//! Every group table of order `n` is a relabelling of exactly one catalog
//! group, so the tables are the transports of the catalog groups by all
//! `n!` permutations, with duplicates removed. Distance is invariant under
//! simultaneous relabelling of both tables, so the minimum over all pairs
//! equals the minimum over pairs whose first table is a canonical catalog
//! table.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use super::SearchError;
use crate::kind::{groups_of_order, make_group, GroupKind};
use crate::metric::{dist, is_prime};
use crate::perm::Permutation;
use crate::table::GroupTable;

/// Default brute-force order cap.
pub const DEFAULT_BRUTE_CAP: usize = 8;
/// Orders at or above this need [`BruteLimits::allow_slow`].
pub const SLOW_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BruteScope {
    /// Any distinct group table (`δ`).
    All,
    /// Distinct tables isomorphic to the base (`μ`).
    IsomorphicOnly,
    /// Tables not isomorphic to the base (`ν`).
    NonisomorphicOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteLimits {
    pub max_order: usize,
    pub allow_slow: bool,
}

impl Default for BruteLimits {
    fn default() -> Self {
        Self { max_order: DEFAULT_BRUTE_CAP, allow_slow: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteResult {
    pub n: usize,
    pub scope: BruteScope,
    pub value: usize,
    pub base_kind: GroupKind,
    pub base: GroupTable,
    pub nearest: GroupTable,
    pub nearest_kind: GroupKind,
    /// Distinct tables compared against the base(s).
    pub tables_compared: usize,
}

/// Every distinct table isomorphic to `kind`, in the order first produced
/// by lexicographic permutations.
pub fn all_labelings(kind: &GroupKind) -> Vec<GroupTable> {
    let base = make_group(kind);
    let n = base.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for images in (0..n).permutations(n) {
        let f = Permutation::from_images(images).expect("itertools yields permutations");
        let t = base.transport(&f).expect("same order");
        if seen.insert(t.cells().to_vec()) {
            out.push(t);
        }
    }
    out
}

fn check_limits(n: usize, limits: BruteLimits) -> Result<Vec<GroupKind>, SearchError> {
    if n > limits.max_order {
        return Err(SearchError::OrderTooLarge { n, cap: limits.max_order });
    }
    let kinds = groups_of_order(n).ok_or(SearchError::OrderTooLarge { n, cap: SLOW_ORDER })?;
    if n >= SLOW_ORDER && !limits.allow_slow {
        return Err(SearchError::SlowOrderRequiresFlag { n });
    }
    Ok(kinds)
}

/// `δ`, `μ` or `ν` of the canonical table of `kind`.
pub fn brute_stability(
    kind: &GroupKind,
    scope: BruteScope,
    limits: BruteLimits,
) -> Result<BruteResult, SearchError> {
    let n = kind.order();
    let kinds = check_limits(n, limits)?;
    let base = make_group(kind);
    let own_class = kinds
        .iter()
        .position(|k| crate::iso::find_isomorphism(&make_group(k), &base, n).ok().flatten().is_some())
        .expect("catalog covers every group of this order");
    stability_against(&base, kind, own_class, &kinds, scope)
}

fn stability_against(
    base: &GroupTable,
    base_kind: &GroupKind,
    own_class: usize,
    kinds: &[GroupKind],
    scope: BruteScope,
) -> Result<BruteResult, SearchError> {
    let n = base.order();
    if scope == BruteScope::NonisomorphicOnly && kinds.len() == 1 {
        return Err(if is_prime(n) {
            SearchError::NuUndefinedForPrime { n }
        } else {
            SearchError::NoCandidate { n }
        });
    }
    let mut best: Option<(usize, GroupTable, GroupKind)> = None;
    let mut compared = 0;
    for (class, kind) in kinds.iter().enumerate() {
        let wanted = match scope {
            BruteScope::All => true,
            BruteScope::IsomorphicOnly => class == own_class,
            BruteScope::NonisomorphicOnly => class != own_class,
        };
        if !wanted {
            continue;
        }
        for t in all_labelings(kind) {
            if t == *base {
                continue;
            }
            compared += 1;
            let d = dist(base, &t).expect("same order").total;
            if best.as_ref().is_none_or(|(current, _, _)| d < *current) {
                best = Some((d, t, kind.clone()));
            }
        }
    }
    let (value, nearest, nearest_kind) = best.ok_or(SearchError::NoCandidate { n })?;
    Ok(BruteResult {
        n,
        scope,
        value,
        base_kind: base_kind.clone(),
        base: base.clone(),
        nearest,
        nearest_kind,
        tables_compared: compared,
    })
}

/// Minimum over all groups of order `n` of their `δ`, `μ` or `ν`, that is,
/// the smallest distance between two distinct group tables of order `n`
/// in the requested relation. For prime `n` this is `δ(Z_n)`.
pub fn brute_delta(n: usize, scope: BruteScope, limits: BruteLimits) -> Result<BruteResult, SearchError> {
    if n == 0 {
        return Err(SearchError::NoCandidate { n });
    }
    let kinds = check_limits(n, limits)?;
    if scope == BruteScope::NonisomorphicOnly && is_prime(n) {
        return Err(SearchError::NuUndefinedForPrime { n });
    }
    let mut best: Option<BruteResult> = None;
    let mut compared = 0;
    for (class, kind) in kinds.iter().enumerate() {
        let base = make_group(kind);
        let result = match stability_against(&base, kind, class, &kinds, scope) {
            Ok(r) => r,
            Err(SearchError::NoCandidate { .. }) => continue,
            Err(e) => return Err(e),
        };
        compared += result.tables_compared;
        if best.as_ref().is_none_or(|b| result.value < b.value) {
            best = Some(result);
        }
    }
    let mut best = best.ok_or(SearchError::NoCandidate { n })?;
    best.tables_compared = compared;
    Ok(best)
}
