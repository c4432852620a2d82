use rayon::prelude::*;

use super::vector::{slope_cmp, LatticeVector};
use crate::error::LatticeError;
use crate::geometry::Vec2;

/// Memory guard on the scanned box.
pub const MAX_RADIUS: f64 = 1e6;

/// Every primitive vector `z` with `region(z)` true, for a region inside the
/// disk of radius `radius_bound`. Sorted by slope, then by length.
///
/// Rows of the box `[−⌈R⌉, ⌈R⌉]²` are scanned in parallel; the final sort
/// makes the output independent of scheduling.
pub fn primitive_vectors_in(
    region: impl Fn(Vec2) -> bool + Sync,
    radius_bound: f64,
) -> Result<Vec<LatticeVector>, LatticeError> {
    if !(radius_bound.is_finite() && radius_bound >= 0.0) {
        return Err(LatticeError::InvalidRadius(radius_bound));
    }
    if radius_bound > MAX_RADIUS {
        return Err(LatticeError::RadiusTooLarge(radius_bound));
    }
    let r = radius_bound.ceil() as i64;
    let mut out: Vec<LatticeVector> = (-r..=r)
        .into_par_iter()
        .flat_map_iter(|y| {
            let region = &region;
            (-r..=r).filter_map(move |x| {
                let z = LatticeVector::new(x, y);
                (z.is_primitive() && region(z.to_vec2())).then_some(z)
            })
        })
        .collect();
    out.sort_by(|a, b| slope_cmp(*a, *b));
    Ok(out)
}

/// Primitive vectors in the closed Euclidean disk of radius `radius`.
pub fn primitive_vectors_in_disk(radius: f64) -> Result<Vec<LatticeVector>, LatticeError> {
    let r2 = radius * radius;
    primitive_vectors_in(|z| z.norm_squared() <= r2 * (1.0 + 1e-12), radius)
}
