//! Unit bodies, their (possibly asymmetric) gauges, and radial-function calculus.
//!
//! Angles are measured anticlockwise from the positive x-axis and reduced to
//! `[0, 2π)`.

mod body;
mod radial;

use std::f64::consts::TAU;

pub use body::{BodySpec, ConvexBody};
pub use radial::RadialFunction;

pub type Vec2 = nalgebra::Vector2<f64>;

/// Default number of angular grid points.
pub const DEFAULT_GRID: usize = 2048;

/// `u(t) = (cos t, sin t)`.
#[inline]
pub fn unit(t: f64) -> Vec2 {
    let (s, c) = t.sin_cos();
    Vec2::new(c, s)
}

/// Polar angle in `[0, 2π)`.
#[inline]
pub fn angle_of(x: Vec2) -> f64 {
    let a = x.y.atan2(x.x);
    if a < 0.0 {
        let b = a + TAU;
        if b >= TAU {
            0.0
        } else {
            b
        }
    } else {
        a
    }
}

#[inline]
pub fn cross(a: Vec2, b: Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Signed area of a closed polyline (positive when anticlockwise).
pub fn polygon_area(points: &[Vec2]) -> f64 {
    let n = points.len();
    0.5 * (0..n).map(|i| cross(points[i], points[(i + 1) % n])).sum::<f64>()
}
