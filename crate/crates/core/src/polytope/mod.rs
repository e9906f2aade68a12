//! Lattice polytopes with exact integer vertices: convex hulls, Minkowski
//! sums, lattice-normalized (mixed) volumes, faces, normal fans, and facet
//! offsets. Geometry is supported in ambient dimension 1 through 3.

pub mod fan;
pub mod hull;
pub mod lattice;
pub mod mixedvol;

pub use fan::{facet_offsets, normal_fan, FacetOffsets, Fan};
pub use hull::{convex_hull, minkowski_sum, Facet, LatticePolytope};
pub use mixedvol::mixed_volume;
