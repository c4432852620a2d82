//! Exact integer-lattice machinery.
//!
//! Slope comparisons use 128-bit cross products; floating point never decides
//! combinatorial structure.

mod counting;
mod enumerate;
mod polygon;
mod vector;

pub use counting::{
    count_lattice_points, count_primitive_points, homogeneous_sum, ConvexRegion, CountEstimate, Disk,
    HomogeneousSum, PointSet, RealPolygon, StarRegion, PRIMITIVE_DENSITY,
};
pub use enumerate::{primitive_vectors_in, primitive_vectors_in_disk, MAX_RADIUS};
pub use polygon::{
    increasing_slope_construct, lattice_hull, Construction, EdgeSetJson, LatticePolygon, Merge, PolygonJson,
};
pub use vector::{slope_cmp, slope_order, LatticeVector};
