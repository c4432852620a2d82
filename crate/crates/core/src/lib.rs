//! Minimal-perimeter convex lattice polygons for arbitrary planar norms.
//!
//! The crate is organised bottom-up:
//!
//! - [`geometry`]: unit bodies `D`, gauges `‖·‖_D`, radial-function quadrature.
//! - [`lattice`]: exact integer vectors, primitive-vector enumeration, lattice
//!   point counting and the increasing-slope construction.
//! - [`minimizer`]: exact, greedy and shape-guided low-perimeter `n`-gons.
//! - [`variational`]: the radial variational problem, its three-parameter
//!   solution family, the limit shape `C`, the constant `α(D)` and the limit
//!   polygon `P`.
//! - [`analysis`]: convergence experiments, Hausdorff distances and SVG output.

pub mod analysis;
pub mod error;
pub mod geometry;
pub mod lattice;
pub mod minimizer;
pub mod variational;

pub use error::Error;
pub use geometry::{ConvexBody, RadialFunction, Vec2};
pub use lattice::{LatticePolygon, LatticeVector};
pub use minimizer::{Method, MinimizerResult};
pub use variational::{LimitPolygon, VpSolution};
