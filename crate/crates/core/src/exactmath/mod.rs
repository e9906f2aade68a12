//! Exact arithmetic substrate: big-rational scalars, univariate and sparse
//! multivariate polynomials, fraction-free resultants, Sturm real-root
//! counting, truncated integer power series, and certified complex root
//! enclosures.

pub mod bareiss;
pub mod bivar;
pub mod interval;
pub mod multipoly;
pub mod roots;
pub mod series;
pub mod sturm;
pub mod unipoly;

pub use bivar::{bivar_gcd, resultant, subresultant_linear};
pub use interval::{ComplexBox, Interval};
pub use multipoly::MultiPoly;
pub use roots::{complex_roots_numeric, CertifiedRoot};
pub use series::IntSeries;
pub use sturm::real_root_count;
pub use unipoly::UniPoly;
