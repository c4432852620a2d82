use serde::{Deserialize, Serialize};

use super::VpSolution;
use crate::error::VpError;
use crate::geometry::{cross, unit, Vec2};

/// The curve `P(t) = ∫_{C(t)} z dz` sampled at the grid angles, translated so
/// that its leftmost point (lowest among ties) is the origin.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitPolygon {
    pub boundary: Vec<Vec2>,
    /// Offset added to the raw curve.
    pub translation: Vec2,
    /// Discrete turning is one-signed.
    pub convex: bool,
}

impl LimitPolygon {
    pub fn area(&self) -> f64 {
        crate::geometry::polygon_area(&self.boundary)
    }
}

/// `P(t) = ∫₀ᵗ (r(s)³/3) u(s) ds`, the polar reduction of the sector integral,
/// by the cumulative trapezoid rule.
pub fn limit_polygon(sol: &VpSolution) -> Result<LimitPolygon, VpError> {
    let r = &sol.r;
    let n = r.len();
    let h = r.step();
    let f: Vec<Vec2> = r
        .samples()
        .iter()
        .enumerate()
        .map(|(j, &rj)| unit(r.angle(j)) * (rj * rj * rj / 3.0))
        .collect();
    let mut pts = Vec::with_capacity(n);
    let mut at = Vec2::zeros();
    for j in 0..n {
        pts.push(at);
        at += (f[j] + f[(j + 1) % n]) * (0.5 * h);
    }
    let gap = at.norm();
    if gap > 1e-6 {
        return Err(VpError::NotClosed(gap));
    }
    let anchor = *pts
        .iter()
        .min_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)))
        .expect("non-empty grid");
    for p in &mut pts {
        *p -= anchor;
    }
    let scale = pts.iter().map(|p| p.norm()).fold(0.0, f64::max);
    let convex = (0..n).all(|j| {
        let e1 = pts[(j + 1) % n] - pts[j];
        let e2 = pts[(j + 2) % n] - pts[(j + 1) % n];
        cross(e1, e2) >= -1e-12 * scale * scale
    });
    Ok(LimitPolygon {
        boundary: pts,
        translation: -anchor,
        convex,
    })
}
