//! Low-perimeter convex lattice `n`-gons: the exact minimizer for small `n`,
//! the greedy shortest-vector construction and the shape-guided construction.

mod construct;
mod exact;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::geometry::{angle_of, ConvexBody, RadialFunction, Vec2};
use crate::lattice::{primitive_vectors_in, slope_cmp, LatticePolygon, LatticeVector};

pub use construct::{greedy_polygon, shape_guided_polygon, Trim};
pub use exact::{exact_minimizer, DEFAULT_BUDGET, MAX_EXACT_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Greedy,
    ShapeGuided,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Greedy => "greedy",
            Method::ShapeGuided => "shape_guided",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Method::Exact),
            "greedy" => Ok(Method::Greedy),
            "shape_guided" | "shape-guided" => Ok(Method::ShapeGuided),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// A constructed lattice polygon and its `D`-perimeter.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimizerResult {
    /// Normalized: the vertex of minimal x (then minimal y) is at the origin.
    pub polygon: LatticePolygon,
    pub perimeter: f64,
    pub n: usize,
    pub method: Method,
    /// The closing vector `z₀ = −Σ zᵢ` of the greedy and shape-guided
    /// constructions; `None` when it vanishes or for exact results.
    pub special_edge: Option<LatticeVector>,
    /// False only when a search budget ran out before optimality was proven.
    pub certified: bool,
    /// How the closed polygon was cut down to `n` vertices.
    pub trim: Option<Trim>,
}

/// JSON form of a [`MinimizerResult`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimizerReport {
    pub n: usize,
    pub method: Method,
    pub perimeter: f64,
    pub certified: bool,
    pub vertices: Vec<LatticeVector>,
    pub edges: Vec<LatticeVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special_edge: Option<LatticeVector>,
}

impl MinimizerResult {
    pub(crate) fn new(
        polygon: LatticePolygon,
        body: &ConvexBody,
        method: Method,
        special_edge: Option<LatticeVector>,
        trim: Option<Trim>,
    ) -> Self {
        let polygon = polygon.normalized();
        Self {
            perimeter: perimeter(&polygon, body),
            n: polygon.len(),
            polygon,
            method,
            special_edge,
            certified: true,
            trim,
        }
    }

    pub fn report(&self) -> MinimizerReport {
        MinimizerReport {
            n: self.n,
            method: self.method,
            perimeter: self.perimeter,
            certified: self.certified,
            vertices: self.polygon.vertices().to_vec(),
            edges: self.polygon.edges(),
            special_edge: self.special_edge,
        }
    }
}

/// Anticlockwise `D`-perimeter. For asymmetric `D` the clockwise value is the
/// perimeter with respect to `−D`.
pub fn perimeter(polygon: &LatticePolygon, body: &ConvexBody) -> f64 {
    polygon.perimeter(body)
}

/// All primitive vectors with `gauge(z) ≤ λ`, for the smallest `λ` in a
/// geometric sequence that yields at least `n` of them, sorted by
/// `(gauge, slope, |z|²)`.
///
/// `reach` bounds `|z| / gauge(z)` and `area` is the area of the gauge's unit
/// ball, used to pick the starting `λ` from the primitive density.
fn primitives_by_gauge(
    gauge: &(impl Fn(Vec2) -> f64 + Sync),
    reach: f64,
    area: f64,
    n: usize,
) -> Result<Vec<(LatticeVector, f64)>, LatticeError> {
    let mut lambda = 1.1 * std::f64::consts::PI * (n as f64 / (6.0 * area)).sqrt() + 1.0 / reach;
    loop {
        let radius = lambda * reach * (1.0 + 1e-9);
        let found = primitive_vectors_in(|z| z.norm() <= radius && gauge(z) <= lambda, radius)?;
        if found.len() >= n {
            let mut out: Vec<(LatticeVector, f64)> = found.into_iter().map(|z| (z, gauge(z.to_vec2()))).collect();
            out.sort_by(|(a, ga), (b, gb)| ga.total_cmp(gb).then_with(|| slope_cmp(*a, *b)));
            return Ok(out);
        }
        lambda *= 1.5;
    }
}

/// The `n` primitive vectors of smallest `D`-norm. Ties are broken by slope
/// (anticlockwise from angle 0), which is deterministic but arbitrary.
pub fn shortest_primitive_vectors(body: &ConvexBody, n: usize) -> Result<Vec<LatticeVector>, LatticeError> {
    Ok(shortest_with_norms(body, n)?.into_iter().map(|(z, _)| z).collect())
}

pub(crate) fn shortest_with_norms(body: &ConvexBody, n: usize) -> Result<Vec<(LatticeVector, f64)>, LatticeError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut v = primitives_by_gauge(&|z| body.norm(z), body.r_out(), body.area(), n)?;
    v.truncate(n);
    Ok(v)
}

/// Sum of the `n` smallest primitive `D`-norms: a lower bound on the perimeter
/// of any convex lattice `n`-gon with primitive edges.
pub fn density_lower_bound(body: &ConvexBody, n: usize) -> Result<f64, LatticeError> {
    Ok(shortest_with_norms(body, n)?.iter().map(|(_, g)| g).sum())
}

/// Gauge of the star-shaped set with radial function `shape`.
pub(crate) fn shape_gauge(shape: &RadialFunction) -> impl Fn(Vec2) -> f64 + Sync + '_ {
    move |z: Vec2| {
        let len = z.norm();
        if len == 0.0 {
            0.0
        } else {
            len / shape.eval(angle_of(z))
        }
    }
}
