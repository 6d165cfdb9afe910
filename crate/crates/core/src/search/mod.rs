//! Exhaustive engines: the single-row pattern search over `Z_p` and
//! brute-force stability values at small orders.

mod brute;
mod complete;
mod pattern;
mod verify;

use thiserror::Error;

pub use brute::{
    all_labelings, brute_delta, brute_stability, BruteLimits, BruteResult, BruteScope, DEFAULT_BRUTE_CAP,
    SLOW_ORDER,
};
pub use complete::{complete_from_row, CompletionError};
pub use pattern::{enumerate_patterns, enumerate_patterns_for_row, PatternMod};
pub use verify::{
    completed_candidates, prime_stability_verify, Candidate, Conclusion, MCase, RowScope, VerificationReport,
    SEARCH_MAX_PRIME, SEARCH_MIN_PRIME,
};

use crate::metric::MetricError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("pattern search supports m = 3 or 4, got {0}")]
    UnsupportedM(usize),
    #[error("row {h} is not a non-identity element of Z_{p}")]
    BadRow { h: usize, p: usize },
    #[error("p = {p} is outside the searched range 11..=31")]
    OutOfVerifiedRange { p: usize },
    #[error("order {n} exceeds the brute-force cap {cap}")]
    OrderTooLarge { n: usize, cap: usize },
    #[error("order {n} is slow; pass allow_slow to run it")]
    SlowOrderRequiresFlag { n: usize },
    #[error("ν is undefined at prime order {n}")]
    NuUndefinedForPrime { n: usize },
    #[error("no candidate table of order {n} in the requested scope")]
    NoCandidate { n: usize },
    #[error(transparent)]
    Metric(#[from] MetricError),
}
