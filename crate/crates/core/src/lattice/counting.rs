//! Lattice and primitive point counts in convex regions, with the classical
//! error bounds `2L` and `3L log L` reported next to the exact counts.

use std::f64::consts::{PI, TAU};
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use serde::Serialize;

use super::vector::LatticeVector;
use crate::error::LatticeError;
use crate::geometry::{angle_of, cross, polygon_area, unit, Vec2};

/// Density of primitive vectors, `6/π²`.
pub const PRIMITIVE_DENSITY: f64 = 6.0 / (PI * PI);

/// Boundary slack for floating-point membership tests.
const EPS: f64 = 1e-9;

/// A compact convex region that can be scanned column by column.
pub trait ConvexRegion {
    /// `[x_min, x_max]`.
    fn x_range(&self) -> (f64, f64);
    /// Closed vertical slice `{y : (x, y) ∈ K}`, or `None` if empty.
    fn column(&self, x: f64) -> Option<(f64, f64)>;
    fn area(&self) -> f64;
    /// Euclidean perimeter `L`.
    fn perimeter(&self) -> f64;
}

/// A region containing the origin in its interior, described in polar form.
pub trait StarRegion: ConvexRegion {
    /// Distance from the origin to the boundary in direction `u(t)`.
    fn radial(&self, t: f64) -> f64;
    /// Angles where `radial` is not smooth.
    fn breakpoints(&self) -> Vec<f64> {
        Vec::new()
    }
}

/// Convex polygon with real vertices in anticlockwise order.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPolygon {
    vertices: Vec<Vec2>,
}

impl RealPolygon {
    /// Accepts an anticlockwise convex vertex list (collinear vertices allowed).
    pub fn new(vertices: Vec<Vec2>) -> Result<Self, LatticeError> {
        let n = vertices.len();
        if n < 3 || polygon_area(&vertices) <= 0.0 {
            return Err(LatticeError::NotConvex("degenerate or clockwise polygon".into()));
        }
        for i in 0..n {
            let a = vertices[(i + 1) % n] - vertices[i];
            let b = vertices[(i + 2) % n] - vertices[(i + 1) % n];
            if cross(a, b) < -1e-12 * a.norm() * b.norm() {
                return Err(LatticeError::NotConvex(format!("right turn at vertex {}", (i + 1) % n)));
            }
        }
        Ok(Self { vertices })
    }

    pub fn from_lattice(vertices: &[LatticeVector]) -> Result<Self, LatticeError> {
        Self::new(vertices.iter().map(|v| v.to_vec2()).collect())
    }

    /// Convex hull of arbitrary points.
    pub fn hull(points: &[Vec2]) -> Result<Self, LatticeError> {
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup();
        let mut hull: Vec<Vec2> = Vec::with_capacity(2 * pts.len());
        for pass in 0..2 {
            let start = hull.len();
            let seq: Vec<Vec2> = if pass == 0 {
                pts.clone()
            } else {
                pts.iter().rev().copied().collect()
            };
            for p in seq {
                while hull.len() >= start + 2
                    && cross(hull[hull.len() - 1] - hull[hull.len() - 2], p - hull[hull.len() - 1]) <= 0.0
                {
                    hull.pop();
                }
                hull.push(p);
            }
            hull.pop();
        }
        Self::new(hull)
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    fn edges(&self) -> impl Iterator<Item = (Vec2, Vec2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

impl ConvexRegion for RealPolygon {
    fn x_range(&self) -> (f64, f64) {
        self.vertices
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v.x), hi.max(v.x)))
    }

    fn column(&self, x: f64) -> Option<(f64, f64)> {
        let (x0, x1) = self.x_range();
        if x < x0 - EPS || x > x1 + EPS {
            return None;
        }
        let x = x.clamp(x0, x1);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (a, b) in self.edges() {
            let (ax, bx) = (a.x.min(b.x), a.x.max(b.x));
            if x < ax || x > bx {
                continue;
            }
            if a.x == b.x {
                lo = lo.min(a.y.min(b.y));
                hi = hi.max(a.y.max(b.y));
            } else {
                let y = a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
                lo = lo.min(y);
                hi = hi.max(y);
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn area(&self) -> f64 {
        polygon_area(&self.vertices)
    }

    fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| (b - a).norm()).sum()
    }
}

impl StarRegion for RealPolygon {
    fn radial(&self, t: f64) -> f64 {
        let u = unit(t);
        self.edges()
            .filter_map(|(a, b)| {
                let e = b - a;
                let normal = Vec2::new(e.y, -e.x);
                let s = normal.dot(&u);
                (s > 0.0).then(|| normal.dot(&a) / s)
            })
            .fold(f64::INFINITY, f64::min)
    }

    fn breakpoints(&self) -> Vec<f64> {
        self.vertices.iter().map(|v| angle_of(*v)).collect()
    }
}

/// Closed Euclidean disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub center: Vec2,
    pub radius: f64,
}

impl Disk {
    pub fn centered(radius: f64) -> Self {
        Self {
            center: Vec2::zeros(),
            radius,
        }
    }
}

impl ConvexRegion for Disk {
    fn x_range(&self) -> (f64, f64) {
        (self.center.x - self.radius, self.center.x + self.radius)
    }

    fn column(&self, x: f64) -> Option<(f64, f64)> {
        let dx = x - self.center.x;
        let h2 = self.radius * self.radius - dx * dx;
        if h2 < -EPS {
            return None;
        }
        let h = h2.max(0.0).sqrt();
        Some((self.center.y - h, self.center.y + h))
    }

    fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    fn perimeter(&self) -> f64 {
        TAU * self.radius
    }
}

impl StarRegion for Disk {
    fn radial(&self, t: f64) -> f64 {
        let u = unit(t);
        let b = u.dot(&self.center);
        let c = self.center.norm_squared() - self.radius * self.radius;
        b + (b * b - c).max(0.0).sqrt()
    }
}

/// Exact count with the matching asymptotic estimate and error bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CountEstimate {
    pub count: u64,
    pub estimate: f64,
    pub bound: f64,
    /// Euclidean perimeter `L` of the region.
    pub perimeter: f64,
}

impl CountEstimate {
    /// `|count − estimate| ≤ bound`.
    pub fn within_bound(&self) -> bool {
        (self.count as f64 - self.estimate).abs() <= self.bound
    }

    /// The bounds are stated for `L > 3`.
    pub fn bound_applies(&self) -> bool {
        self.perimeter > 3.0
    }
}

/// Calls `visit(x, y)` for every integer point of the closed region.
fn scan(region: &impl ConvexRegion, mut visit: impl FnMut(i64, i64)) {
    let (x0, x1) = region.x_range();
    let (xa, xb) = ((x0 - EPS).ceil() as i64, (x1 + EPS).floor() as i64);
    for x in xa..=xb {
        if let Some((lo, hi)) = region.column(x as f64) {
            let (ya, yb) = ((lo - EPS).ceil() as i64, (hi + EPS).floor() as i64);
            for y in ya..=yb {
                visit(x, y);
            }
        }
    }
}

/// `|K ∩ Z²|` by scanlines, with estimate `Area K` and bound `2L`.
pub fn count_lattice_points(region: &impl ConvexRegion) -> CountEstimate {
    let mut count = 0u64;
    scan(region, |_, _| count += 1);
    let l = region.perimeter();
    CountEstimate {
        count,
        estimate: region.area(),
        bound: 2.0 * l,
        perimeter: l,
    }
}

/// `|K ∩ P|` by scanlines, with estimate `(6/π²) Area K` and bound `3L ln L`.
pub fn count_primitive_points(region: &impl ConvexRegion) -> CountEstimate {
    let mut count = 0u64;
    scan(region, |x, y| {
        if LatticeVector::new(x, y).is_primitive() {
            count += 1;
        }
    });
    let l = region.perimeter();
    CountEstimate {
        count,
        estimate: PRIMITIVE_DENSITY * region.area(),
        bound: 3.0 * l * l.ln(),
        perimeter: l,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointSet {
    Lattice,
    Primitive,
}

/// `Σ f(z)` over a point set in a region, against the integral estimate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HomogeneousSum {
    pub sum: f64,
    /// `∫_K f`.
    pub integral: f64,
    /// `∫_K f` for lattice points, `(6/π²) ∫_K f` for primitive points.
    pub estimate: f64,
    /// `2ML` for lattice points, `3ML ln L` for primitive points.
    pub bound: f64,
    /// `M = max_K |f|`.
    pub max_abs: f64,
    pub perimeter: f64,
}

impl HomogeneousSum {
    pub fn within_bound(&self) -> bool {
        (self.sum - self.estimate).abs() <= self.bound
    }
}

/// Angular panels used for polar quadrature.
const POLAR_PANELS: usize = 4096;

/// `∫_K f` for positively 1-homogeneous `f`, via the polar identity
/// `∫_K f = ∫₀^{2π} f(u(t)) ρ(t)³/3 dt`, together with `max_K |f|`.
///
/// The angle range is split at the region's breakpoints and into uniform
/// panels, each integrated with 4-point Gauss–Legendre.
fn polar_integral(region: &impl StarRegion, f: &impl Fn(Vec2) -> f64) -> (f64, f64) {
    let mut cuts: Vec<f64> = (0..=POLAR_PANELS).map(|k| TAU * k as f64 / POLAR_PANELS as f64).collect();
    cuts.extend(region.breakpoints());
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    let rule = GaussLegendre::new(NonZeroUsize::new(4).unwrap());
    let mut integral = 0.0;
    let mut max_abs: f64 = 0.0;
    for w in cuts.windows(2) {
        integral += rule.integrate(w[0], w[1], |t| {
            let rho = region.radial(t);
            f(unit(t)) * rho * rho * rho / 3.0
        });
        let rho = region.radial(w[0]);
        max_abs = max_abs.max(f(unit(w[0]) * rho).abs());
    }
    (integral, max_abs)
}

fn check_homogeneous(f: &impl Fn(Vec2) -> f64) -> Result<(), LatticeError> {
    for k in 0..8 {
        let x = unit(0.37 + k as f64 * TAU / 8.0) * (1.0 + 0.25 * k as f64);
        let fx = f(x);
        for lambda in [0.0, 0.5, 2.0, 3.5] {
            let lhs = f(x * lambda);
            if (lhs - lambda * fx).abs() > 1e-9 * (1.0 + lambda * fx.abs()) {
                return Err(LatticeError::NotHomogeneous { x: x.x, y: x.y });
            }
        }
    }
    Ok(())
}

/// `Σ_{z ∈ K ∩ S} f(z)` for `S` the lattice or the primitive vectors, with the
/// integral comparison value and error bound.
///
/// `f` must be positively 1-homogeneous; this is spot-checked.
pub fn homogeneous_sum(
    points: PointSet,
    region: &impl StarRegion,
    f: impl Fn(Vec2) -> f64,
) -> Result<HomogeneousSum, LatticeError> {
    check_homogeneous(&f)?;
    if !(region.radial(0.0) > 0.0 && region.column(0.0).is_some_and(|(lo, hi)| lo < 0.0 && hi > 0.0)) {
        return Err(LatticeError::NotStarShaped);
    }
    let mut sum = 0.0;
    scan(region, |x, y| {
        let z = LatticeVector::new(x, y);
        if points == PointSet::Lattice || z.is_primitive() {
            sum += f(z.to_vec2());
        }
    });
    let (integral, max_abs) = polar_integral(region, &f);
    let l = region.perimeter();
    let (estimate, bound) = match points {
        PointSet::Lattice => (integral, 2.0 * max_abs * l),
        PointSet::Primitive => (PRIMITIVE_DENSITY * integral, 3.0 * max_abs * l * l.ln()),
    };
    Ok(HomogeneousSum {
        sum,
        integral,
        estimate,
        bound,
        max_abs,
        perimeter: l,
    })
}
