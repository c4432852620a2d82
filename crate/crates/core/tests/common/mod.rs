#![allow(dead_code)]

use std::f64::consts::TAU;

use minperim::geometry::{unit, ConvexBody, Vec2};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Anticlockwise convex hull (monotone chain), collinear points removed.
pub fn hull(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    let turn = |a: Vec2, b: Vec2, c: Vec2| (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    let mut lower: Vec<Vec2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Random convex polygon body containing the origin: hull of `k` points at
/// random angles and radii in `[0.4, 1.6]`.
pub fn random_polygon_body(rng: &mut impl Rng, k: usize) -> ConvexBody {
    loop {
        let pts: Vec<Vec2> = (0..k)
            .map(|_| unit(rng.gen_range(0.0..TAU)) * rng.gen_range(0.4..1.6))
            .collect();
        if let Ok(b) = ConvexBody::polygon(hull(&pts)) {
            return b;
        }
    }
}

/// Random centrally symmetric polygon body.
pub fn random_symmetric_polygon_body(rng: &mut impl Rng, k: usize) -> ConvexBody {
    loop {
        let half: Vec<Vec2> = (0..k)
            .map(|_| unit(rng.gen_range(0.0..TAU)) * rng.gen_range(0.4..1.6))
            .collect();
        let pts: Vec<Vec2> = half.iter().flat_map(|&p| [p, -p]).collect();
        if let Ok(b) = ConvexBody::polygon(hull(&pts)) {
            return b;
        }
    }
}

/// Random ellipse with a focus at the origin.
pub fn random_ellipse_focus(rng: &mut impl Rng) -> ConvexBody {
    let e = unit(rng.gen_range(0.0..TAU)) * rng.gen_range(0.0..0.8);
    ConvexBody::ellipse_focus(rng.gen_range(0.3..3.0), e).unwrap()
}

/// The asymmetric quadrilateral used throughout the convergence tests.
pub fn quadrilateral() -> ConvexBody {
    ConvexBody::polygon(vec![
        Vec2::new(1.0, -0.35),
        Vec2::new(0.45, 0.9),
        Vec2::new(-0.7, 0.4),
        Vec2::new(-0.3, -0.75),
    ])
    .unwrap()
}

pub fn report(id: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "{} criterion {id} ({name}): {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}
