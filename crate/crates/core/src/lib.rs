//! Hamming distances between Cayley tables of finite groups, and exact
//! verification of Cayley stability for cyclic groups of prime order.
//!
//! Two group operations `∘` and `∗` on the same set `{0, …, n-1}` are at
//! distance `k` when their tables differ in `k` cells. The Cayley stability
//! `δ(G)` of a group is the distance to the nearest different group
//! operation; for `Z_p` with prime `p > 7` it equals `6p - 18`.
//!
//! * [`table`], [`perm`], [`kind`], [`iso`] and [`format`] represent,
//!   construct, compare and serialise tables.
//! * [`metric`] computes distances, per-row profiles, homomorphism defects,
//!   the closed-form `δ₀` and analytic lower bounds.
//! * [`search`] runs the single-row pattern search for `11 <= p <= 31` and
//!   brute-force stability values for orders up to 8.

pub mod format;
pub mod iso;
pub mod kind;
pub mod metric;
pub mod perm;
pub mod search;
pub mod table;

pub use iso::{are_isomorphic, find_isomorphism, is_dihedral_twice_odd};
pub use kind::{make_group, GroupKind};
pub use perm::Permutation;
pub use table::{GroupTable, ValidationError};
