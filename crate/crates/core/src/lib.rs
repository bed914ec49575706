//! Exact homological algebra for DG polynomial algebras `A(t1, ..., tn)`:
//! differentials, cohomology, resolutions of the trivial module and the
//! invariants built from them, each with a checkable certificate.

pub mod cohomology;
pub mod commalg;
pub mod dg;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod resolution;
pub mod scalar;

/// Version stamped into every serialized report.
pub const SCHEMA_VERSION: u32 = 1;

pub use cohomology::{cohomology_dims, extract_presentation, Cohomology, CohomologyReport, GradedPresentation};
pub use commalg::{buchberger, depth_interval, minimal_free_resolution_of_k, BettiTable, DepthInterval, QuotientRing};
pub use dg::{build_differential, classify, AlgebraSpec, ClassTag, ClassificationResult, Differential};
pub use error::{Error, ParseError, Result};
pub use linalg::SparseMatrix;
pub use poly::{monomials_of_degree, substitute, LinearChange, Monomial, Polynomial};
pub use report::{assemble_report, dg_krull_certificate, verify_claims, BoundsConfig, ClaimRow, Interval, InvariantReport, Verdict};
pub use resolution::{
    cone_length_bounds, dg_free_class, eilenberg_moore, killing_cycles_resolution, ConeLengthBounds, Method, SemifreeResolution,
};
pub use scalar::Scalar;
