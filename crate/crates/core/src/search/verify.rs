use rayon::prelude::*;
use serde::Serialize;

use super::complete::complete_from_row;
use super::pattern::{enumerate_patterns_for_row, PatternMod};
use super::SearchError;
use crate::kind::{make_group, GroupKind};
use crate::metric::{analytic_lower_bound, dist, is_prime, min_transposition_mf, prime_threshold, BoundReport};
use crate::perm::Permutation;
use crate::table::GroupTable;

/// Smallest and largest primes the pattern search covers. Below the range
/// the stability value differs; above it every `m` is excluded analytically.
pub const SEARCH_MIN_PRIME: usize = 11;
pub const SEARCH_MAX_PRIME: usize = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowScope {
    /// Only `h = 1`.
    FixedH1,
    /// Every non-identity row.
    AllRows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MCase {
    pub m: usize,
    pub candidates_enumerated: usize,
    pub candidates_completing_to_group: usize,
    pub min_distance_found: Option<usize>,
    pub witness: Option<PatternMod>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    /// `min(transposition m_f, searched minimum)`.
    pub delta: usize,
    pub transposition_mf: usize,
    pub transposition_witness: Permutation,
    /// Every searched minimum reaches `6p - 18` and the transposition
    /// attains it.
    pub theorem_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub p: usize,
    pub rows_searched: RowScope,
    pub threshold: i64,
    pub m_cases: Vec<MCase>,
    pub analytic_exclusions: Vec<BoundReport>,
    pub conclusion: Conclusion,
}

/// A completed search candidate.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub pattern: PatternMod,
    pub table: GroupTable,
    pub distance: usize,
}

fn patterns(p: usize, m: usize, scope: RowScope) -> Result<Vec<PatternMod>, SearchError> {
    let rows: Vec<usize> = match scope {
        RowScope::FixedH1 => vec![1],
        RowScope::AllRows => (1..p).collect(),
    };
    let mut out = Vec::new();
    for h in rows {
        out.extend(enumerate_patterns_for_row(p, m, h)?);
    }
    Ok(out)
}

/// Every pattern on `Z_p` that completes to a group table, in enumeration
/// order, with its distance from `Z_p`.
pub fn completed_candidates(p: usize, m: usize, scope: RowScope) -> Result<Vec<Candidate>, SearchError> {
    let base = make_group(&GroupKind::Cyclic(p));
    let pats = patterns(p, m, scope)?;
    Ok(pats
        .into_par_iter()
        .filter_map(|pattern| {
            let table = complete_from_row(&base, pattern.h, &pattern.modified_row(&base)).ok()?;
            let distance = dist(&base, &table).expect("same order").total;
            Some(Candidate { pattern, table, distance })
        })
        .collect())
}

fn search_m(base: &GroupTable, p: usize, m: usize, scope: RowScope) -> Result<MCase, SearchError> {
    let pats = patterns(p, m, scope)?;
    // (distance, enumeration index); the minimum is schedule independent.
    let (completing, best) = pats
        .par_iter()
        .enumerate()
        .map(|(idx, pattern)| {
            match complete_from_row(base, pattern.h, &pattern.modified_row(base)) {
                Ok(table) => (1usize, Some((dist(base, &table).expect("same order").total, idx))),
                Err(_) => (0, None),
            }
        })
        .reduce(
            || (0, None),
            |(c1, b1), (c2, b2)| {
                let best = match (b1, b2) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, None) => x,
                    (None, y) => y,
                };
                (c1 + c2, best)
            },
        );
    Ok(MCase {
        m,
        candidates_enumerated: pats.len(),
        candidates_completing_to_group: completing,
        min_distance_found: best.map(|(d, _)| d),
        witness: best.map(|(_, idx)| pats[idx].clone()),
    })
}

/// Exhaustively checks that no group on the elements of `Z_p` lies closer
/// than `6p - 18`, for `11 <= p <= 31`.
///
/// A nearest neighbour shares the identity and its smallest non-identity
/// row distance `m` is at least 3. Values of `m` whose analytic bound
/// reaches `6p - 18` are recorded as exclusions; for the rest every single
/// row modification compatible with both left translations being full
/// cycles is completed and measured. Runs on the current rayon pool.
pub fn prime_stability_verify(p: usize, all_rows: bool) -> Result<VerificationReport, SearchError> {
    if !is_prime(p) {
        return Err(SearchError::NotPrime(p));
    }
    if !(SEARCH_MIN_PRIME..=SEARCH_MAX_PRIME).contains(&p) {
        return Err(SearchError::OutOfVerifiedRange { p });
    }
    let scope = if all_rows { RowScope::AllRows } else { RowScope::FixedH1 };
    let base = make_group(&GroupKind::Cyclic(p));
    let threshold = prime_threshold(p);

    let mut m_cases = Vec::new();
    let mut analytic_exclusions = Vec::new();
    for m in [3, 4] {
        let report = analytic_lower_bound(p, m)?;
        if report.excluded {
            analytic_exclusions.push(report);
        } else {
            m_cases.push(search_m(&base, p, m, scope)?);
        }
    }
    analytic_exclusions.push(analytic_lower_bound(p, 5)?);
    analytic_exclusions.push(analytic_lower_bound(p, 6)?);

    let (transposition_mf, transposition_witness) = min_transposition_mf(&base)?;
    let searched_min = m_cases.iter().filter_map(|c| c.min_distance_found).min();
    let delta = searched_min.map_or(transposition_mf, |s| s.min(transposition_mf));
    let theorem_holds = transposition_mf as i64 == threshold
        && m_cases
            .iter()
            .all(|c| c.min_distance_found.is_none_or(|d| d as i64 >= threshold))
        && analytic_exclusions.iter().all(|r| r.excluded);

    Ok(VerificationReport {
        p,
        rows_searched: scope,
        threshold,
        m_cases,
        analytic_exclusions,
        conclusion: Conclusion { delta, transposition_mf, transposition_witness, theorem_holds },
    })
}
