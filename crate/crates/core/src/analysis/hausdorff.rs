use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;
use crate::geometry::{polygon_area, Vec2};

/// Minimum number of boundary samples accepted by [`hausdorff`].
pub const MIN_SAMPLES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HausdorffDistance {
    pub distance: f64,
    /// Half the longest sampling gap: the distance between the sampled curves
    /// can differ from the distance between the true boundaries by at most this.
    pub gap_bound: f64,
}

fn point_segment(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((p - a).dot(&ab) / len2).clamp(0.0, 1.0)
    };
    (p - (a + ab * t)).norm()
}

/// `max_{p ∈ a} dist(p, polyline b)`.
fn directed(a: &[Vec2], b: &[Vec2]) -> f64 {
    let m = b.len();
    a.iter()
        .map(|&p| {
            (0..m)
                .map(|j| point_segment(p, b[j], b[(j + 1) % m]))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

fn max_gap(a: &[Vec2]) -> f64 {
    let n = a.len();
    (0..n).map(|i| (a[(i + 1) % n] - a[i]).norm()).fold(0.0, f64::max)
}

/// Symmetric Hausdorff distance between two closed boundaries, measured from
/// the samples of each to the polyline through the other.
pub fn hausdorff(a: &[Vec2], b: &[Vec2]) -> Result<HausdorffDistance, AnalysisError> {
    for s in [a, b] {
        if s.len() < MIN_SAMPLES {
            return Err(AnalysisError::TooFewSamples(s.len()));
        }
    }
    Ok(HausdorffDistance {
        distance: directed(a, b).max(directed(b, a)),
        gap_bound: 0.5 * max_gap(a).max(max_gap(b)),
    })
}

/// Inserts points along each edge so that no gap exceeds `max_gap` and there
/// are at least [`MIN_SAMPLES`] points.
pub fn densify(points: &[Vec2], max_gap: f64) -> Vec<Vec2> {
    let n = points.len();
    let perimeter: f64 = (0..n).map(|i| (points[(i + 1) % n] - points[i]).norm()).sum();
    let gap = max_gap.min(perimeter / MIN_SAMPLES as f64);
    let mut out = Vec::new();
    for i in 0..n {
        let (a, b) = (points[i], points[(i + 1) % n]);
        let k = ((b - a).norm() / gap).ceil().max(1.0) as usize;
        out.extend((0..k).map(|s| a + (b - a) * (s as f64 / k as f64)));
    }
    out
}

/// Scales about the origin to unit enclosed area.
pub fn normalize_area(points: &[Vec2]) -> Vec<Vec2> {
    let s = polygon_area(points).abs().powf(-0.5);
    points.iter().map(|p| p * s).collect()
}

/// Translates so the leftmost point (lowest among ties) is the origin.
pub fn min_x_normalized(points: &[Vec2]) -> Vec<Vec2> {
    let anchor = *points
        .iter()
        .min_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)))
        .expect("non-empty boundary");
    points.iter().map(|p| p - anchor).collect()
}

/// Largest distance between two boundary points.
pub fn diameter(points: &[Vec2]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            d = d.max((p - q).norm());
        }
    }
    d
}
