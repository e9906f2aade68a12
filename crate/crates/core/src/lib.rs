//! Exact computation of maximum likelihood degrees of algebraic statistical
//! models.
//!
//! The crate computes the number of complex critical points of a likelihood
//! product `f_1^{u_1} ... f_n^{u_n}` along three independent routes:
//!
//! * generating-function coefficients for dense models with generic
//!   coefficients ([`formulas::generic_ml_degree`]),
//! * alternating mixed-volume sums over Newton polytopes for sparse/toric
//!   models ([`formulas::toric_ml_degree`]),
//! * bounded-region counts of hyperplane arrangements for linear models
//!   ([`arrangement`]).
//!
//! An independent oracle ([`oracle`]) solves the critical equations exactly
//! at desk scale (one or two parameters) and cross-checks the formulas.
//!
//! All computation is over exact rationals; the only numerics are certified
//! interval enclosures of polynomial roots.

pub mod arrangement;
pub mod error;
pub mod exactmath;
pub mod formulas;
pub mod model;
pub mod oracle;
pub mod polytope;
pub mod rational;

pub use error::Error;
pub use rational::Rat;

pub type Result<T> = std::result::Result<T, Error>;
