//! Distances between group operations on a common set and the quantities
//! derived from them.

mod bounds;
mod lemmas;
mod profile;
mod reconstruct;

use thiserror::Error;

pub use bounds::{
    analytic_lower_bound, delta0, estim1_bound, estim2_bounds, guaranteed_subset_size, is_prime,
    max_disjoint_subset, prime_threshold, BoundReport, NamedBound,
};
pub use lemmas::{check_lemmas, LemmaViolation};
pub use profile::{dist, hom_distance, light_set, DistanceProfile};
pub use reconstruct::{min_transposition_mf, reconstruct_isomorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("map has {found} entries, expected {expected}")]
    MapLength { expected: usize, found: usize },
    #[error("image {value} of {x} is outside 0..{n}")]
    ImageOutOfRange { x: usize, value: usize, n: usize },
    #[error("order {n} is below the minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("minimum row distance {0} is impossible (must be at least 3)")]
    MTooSmall(usize),
    #[error("light set has {light} of {n} elements; need more than 3n/4")]
    HypothesisNotMet { light: usize, n: usize },
    #[error("factorizations disagree at {g}: {first} vs {second}")]
    InconsistentFactorizations { g: usize, first: usize, second: usize },
    #[error("reconstructed map is not an isomorphism fixing the light set: {0}")]
    ReconstructionFailed(String),
}
