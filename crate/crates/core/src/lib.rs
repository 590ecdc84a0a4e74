//! Exact-arithmetic workbench for homological algebra over rings of
//! differential operators.
//!
//! The crate provides, bottom up:
//!
//! * [`ore`] — rationals, prime fields, univariate polynomials and rational
//!   functions, and normal-ordered differential operators in one variable
//!   (the rational Weyl algebra, a left and right Euclidean domain).
//! * [`linalg`] — exact kernels, solvability, injectivity/surjectivity and
//!   diagonal forms for matrices of operators, with row-vector/left-module
//!   conventions fixed once for the whole crate.
//! * [`chain`] — bounded non-negatively graded chain complexes of free
//!   modules, discs and spheres, the generating sets of (trivial)
//!   cofibrations, homology, mapping cones, morphism classification and
//!   finite sequential colimits.
//! * [`lifting`] — the lifting-problem solver against cell-structured maps,
//!   right-lifting-property test suites and the one-stage disc-gluing
//!   factorization into a trivial cofibration followed by a fibration.
//! * [`dga`] — free graded symmetric algebras over the operator ring:
//!   canonical words with Koszul signs, the derivation action, induced
//!   differentials, morphism extension, the free/forgetful adjunction and
//!   the symmetrization operator on tensors.
//! * [`sullivan`] — relative Sullivan algebras and the explicit functorial
//!   factorization of an algebra morphism through a disc-generated
//!   extension, with lowering/minimality/homotopy/acyclicity certificates.
//! * [`textio`] — the text formats used by the command line front end.
//! * [`report`] — deterministic, diffable report documents.
//! * [`samples`] — seeded generators of random operators, complexes, maps
//!   and presentations, shared by the test suites and `verify`.

pub mod chain;
pub mod dga;
pub mod lifting;
pub mod linalg;
pub mod ore;
pub mod report;
pub mod samples;
pub mod sullivan;
pub mod textio;

/// Crate version recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
