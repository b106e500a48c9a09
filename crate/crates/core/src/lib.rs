//! Minimal flat Lorentzian surfaces in Lorentzian complex space forms:
//! indefinite Hermitian algebra, curvature of the model spaces, pointwise
//! extrinsic geometry from finite differences, residual checks of the
//! structure equations and closed-form constructions of the known families.

pub mod algebra;
pub mod ambient;
pub mod calculus;
pub mod cli;
pub mod diff;
pub mod error;
pub mod families;
pub mod grid;
pub mod immersion;
pub mod quadrature;
pub mod report;
pub mod verifier;

pub use algebra::{hermitian_form, j_apply, real_inner, ComplexVector, SignatureForm};
pub use ambient::{curvature, AmbientKind, AmbientSpace};
pub use calculus::FramePoint;
pub use grid::GridSpec;
pub use immersion::{Domain, Immersion};
pub use report::ResidualReport;
