//! The radial variational problem
//!
//! ```text
//! minimize ∫ r³/r₀   subject to   ∫ r³ u = 0,   ½ ∫ r² = 1,
//! ```
//!
//! whose solution is `1/r = a/r₀ + b cos t + c sin t`. The solution is the
//! radial function of the limit shape `C`, and `α(D) = (π/(3√6)) ∫ r³/r₀`.

mod alpha;
mod limit;
mod solve;

pub use alpha::{alpha_two_ways, is_circle_limit, circle_residual, AlphaPair};
pub use limit::{limit_polygon, LimitPolygon};
pub use solve::{solve_vp, solve_vp_from, NewtonOptions, VpSolution};

use std::f64::consts::PI;

use crate::error::VpError;
use crate::geometry::RadialFunction;

/// `π/(3√6)`, the factor turning the objective into `α(D)`.
pub fn alpha_factor() -> f64 {
    PI / (3.0 * 6f64.sqrt())
}

/// `∫ r³/r₀` by the periodic rectangle rule.
pub fn vp_objective(r: &RadialFunction, r0: &RadialFunction) -> Result<f64, VpError> {
    if r.len() != r0.len() {
        return Err(VpError::GridMismatch(r.len(), r0.len()));
    }
    let h = r.step();
    Ok(h * r
        .samples()
        .iter()
        .zip(r0.samples())
        .map(|(r, r0)| r * r * r / r0)
        .sum::<f64>())
}

/// `(∫ r³ cos t, ∫ r³ sin t, ½∫ r² − 1)`.
pub fn constraint_residuals(r: &RadialFunction) -> [f64; 3] {
    let m = r.centroid_moment();
    [m.x, m.y, r.area() - 1.0]
}
