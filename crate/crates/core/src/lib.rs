//! Deciding `[a,b]`-factor existence, constructing the extremal families
//! that forbid such factors, computing the closed-form edge and spectral
//! extremal values, and verifying every bound exhaustively at desk scale.
//!
//! The crate is organized around six concerns:
//!
//! - [`graph`] / [`bipartite`] / [`partition`]: bitmask graph types and the
//!   named constructions (threshold extremal graphs, the double nested
//!   bipartite family, near-complete bipartite graphs).
//! - [`canon`] / [`graph6`]: canonical forms, isomorphism, serialization.
//! - [`factor`] / [`flow`] / [`folkman`]: three mutually checking
//!   `[a,b]`-factor backends (pruned backtracking, feasible flow with lower
//!   bounds, subset-criterion search).
//! - [`spectral`] / [`biquadratic`]: power-iteration spectral radii,
//!   equitable quotient matrices, and the closed-form quartics of the
//!   double nested family.
//! - [`extremal`]: the edge and spectral extremal values with exact
//!   integer case selection.
//! - [`enumerate`] / [`hamilton`] / [`mod@verify`]: exhaustive enumeration
//!   and the end-to-end verification harness.

#![forbid(unsafe_code)]

pub mod bipartite;
pub mod biquadratic;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod factor;
pub mod flow;
pub mod folkman;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod partition;
pub mod scalar;
pub mod spectral;
pub mod verify;

pub use bipartite::{double_nested, near_complete_bipartite, BipartiteGraph};
pub use biquadratic::{largest_root, phi1, phi2, phi3, Biquadratic};
pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use enumerate::{enumerate_bipartite, enumerate_cocktail, enumerate_graphs, EnumCaps};
pub use error::{Error, Result};
pub use extremal::{
    bipartite_order_spectral, bipartite_order_turan, bipartite_parts_spectral,
    bipartite_parts_turan, f_ab, spectral_turan_factor, turan_factor, Bound, ExtremalAnswer,
    ExtremalGraph, SpectralBound,
};
pub use factor::{has_factor, has_factor_with_budget, has_k_factor, FactorWitness};
pub use flow::has_factor_bipartite_flow;
pub use folkman::{ff_violation, CriterionViolation};
pub use graph::{edge_spectral_extremal, threshold_extremal, Graph};
pub use graph6::{from_graph6, to_graph6};
pub use hamilton::{has_hamilton_cycle, has_hamilton_path};
pub use partition::VertexPartition;
pub use scalar::Scalar;
pub use spectral::{
    check_bipartite_bound, check_edge_bound, quotient_matrix, quotient_spectral_radius,
    spectral_radius, QuotientMatrix, SpectralResult, DEFAULT_TOL,
};
pub use verify::{verify, Target, VerificationReport, Verdict};

/// Default floating-point scalar used by the concrete APIs.
pub type Real = f64;
/// Spectral result at the default precision.
pub type RealSpectralResult = SpectralResult<Real>;
/// Quotient matrix at the default precision.
pub type RealQuotientMatrix = QuotientMatrix<Real>;
