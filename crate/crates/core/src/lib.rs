//! Exact-arithmetic toolkit for lattice simplices.
//!
//! Everything here is integer or rational arithmetic with no floating
//! point: dilation and interior lattice-point counts, delta-vectors
//! computed by two independent routes (inverting the counting sequence,
//! and the degree distribution of the half-open parallelepiped), evaluation
//! of the counting polynomial at any integer, the classical prefix/suffix
//! and trailing-sum inequalities, and constructions that realize every
//! realizable flat delta-vector `(1, 0^k, a, ..., a, 0^l)`.
//!
//! The [`verify`] module builds polytope pairs and families whose counting
//! functions agree up to prescribed dilations and then diverge, and checks
//! those claims by direct counting.
//!
//! The `flatdelta` binary exposes all of this as subcommands; see the
//! crate README for the JSON formats and exit codes.

pub mod counting;
pub mod ehrhart;
pub mod error;
pub mod flat;
pub mod json;
pub mod linalg;
pub mod polytope;
pub mod verify;

pub use counting::{box_points, count_interior_points, count_lattice_points, BoxPoint, CountBudget};
pub use ehrhart::{
    delta_by_counting, delta_from_box, delta_from_counts, DeltaVector, FlatPattern,
};
pub use error::{Error, Result};
pub use flat::{
    balanced_profile, balanced_simplex, full_support_profile, full_support_simplex, is_realizable,
    realize, Recipe, RecipeKind,
};
pub use polytope::Simplex;
pub use verify::{agreement_pair, level_family, verify_family, verify_pair, VerificationReport};
