use serde::{Deserialize, Serialize};

use super::{primitives_by_gauge, shape_gauge, shortest_with_norms, Method, MinimizerResult};
use crate::error::{LatticeError, MinimizerError};
use crate::geometry::{ConvexBody, RadialFunction};
use crate::lattice::{increasing_slope_construct, LatticePolygon, LatticeVector};

/// Record of the trimming step that cuts `T` down to `n` vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trim {
    /// Edge of `T` whose endpoints were kept.
    pub anchor: LatticeVector,
    /// Edge replacing the dropped vertices, if any were dropped.
    pub chord: Option<LatticeVector>,
    pub dropped: usize,
    /// Number of edge vectors fed to the construction, closing vector excluded.
    pub candidates: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Anchor {
    /// Edge of greatest `D`-norm.
    Longest,
    /// The edge in the direction of the closing vector, falling back to the
    /// longest edge when the closing vector vanishes.
    Special,
}

/// Appends `z₀ = −Σ vᵢ`, runs the increasing-slope construction and keeps `n`
/// consecutive vertices including both endpoints of the anchor edge.
///
/// Among the admissible runs of dropped vertices, the one whose removal
/// lowers the perimeter most is chosen (earliest on ties).
fn close_and_trim(
    body: &ConvexBody,
    mut vectors: Vec<LatticeVector>,
    n: usize,
    anchor: Anchor,
    method: Method,
) -> Result<MinimizerResult, MinimizerError> {
    let candidates = vectors.len();
    let z0 = -vectors.iter().sum::<LatticeVector>();
    if !z0.is_zero() {
        vectors.push(z0);
    }
    let t = match increasing_slope_construct(&vectors) {
        Ok(c) => c.polygon,
        Err(LatticeError::Empty { .. }) => return Err(MinimizerError::DegenerateClosing),
        Err(e) => return Err(e.into()),
    };
    let m = t.len();
    if m < n {
        return Err(MinimizerError::DegenerateClosing);
    }
    let edges = t.edges();
    let norms: Vec<f64> = edges.iter().map(|e| body.norm(e.to_vec2())).collect();
    let longest = || {
        (0..m)
            .max_by(|&i, &j| norms[i].total_cmp(&norms[j]).then(j.cmp(&i)))
            .expect("non-empty polygon")
    };
    let a = match anchor {
        Anchor::Special if !z0.is_zero() => edges
            .iter()
            .position(|e| e.same_direction(z0))
            .expect("closing vector survives as an edge direction"),
        _ => longest(),
    };

    // w_0 .. w_{m-1} with the anchor edge running w_{m-1} -> w_0.
    let w: Vec<LatticeVector> = (0..m).map(|j| t.vertices()[(a + 1 + j) % m]).collect();
    let k = m - n;
    let special_edge = (!z0.is_zero()).then_some(z0);
    if k == 0 {
        let trim = Trim {
            anchor: edges[a],
            chord: None,
            dropped: 0,
            candidates,
        };
        return Ok(MinimizerResult::new(t, body, method, special_edge, Some(trim)));
    }

    let d = |p: LatticeVector, q: LatticeVector| body.norm((q - p).to_vec2());
    let mut best: Option<(f64, usize)> = None;
    for s in 1..=(m - 1 - k) {
        let removed: f64 = (s - 1..s + k).map(|j| d(w[j], w[j + 1])).sum();
        let delta = d(w[s - 1], w[s + k]) - removed;
        if best.is_none_or(|(b, _)| delta < b) {
            best = Some((delta, s));
        }
    }
    let (_, s) = best.expect("at least one admissible run");
    let kept: Vec<LatticeVector> = w[..s].iter().chain(&w[s + k..]).copied().collect();
    let polygon = LatticePolygon::new(kept)?;
    let trim = Trim {
        anchor: edges[a],
        chord: Some(w[s + k] - w[s - 1]),
        dropped: k,
        candidates,
    };
    Ok(MinimizerResult::new(polygon, body, method, special_edge, Some(trim)))
}

/// The `n` shortest primitive vectors closed by `v₀ = −Σ vᵢ`, trimmed to `n`
/// vertices around the longest edge.
pub fn greedy_polygon(body: &ConvexBody, n: usize) -> Result<MinimizerResult, MinimizerError> {
    if n < 3 {
        return Err(MinimizerError::InvalidN {
            n,
            min: 3,
            max: usize::MAX,
        });
    }
    let vectors = shortest_with_norms(body, n)?.into_iter().map(|(z, _)| z).collect();
    close_and_trim(body, vectors, n, Anchor::Longest, Method::Greedy)
}

/// Polygon guided by a unit-area shape `S` with centroid at the origin.
///
/// With `λ` minimal such that `λS` contains at least `n` primitive vectors,
/// all `l ≥ n` primitive vectors of `λS` are closed by the special edge
/// `z₀ = −Σ zᵢ`, and `n` consecutive vertices including both endpoints of the
/// special edge are kept.
///
/// `λ` is the `n`-th smallest value of the gauge of `S` over primitive
/// vectors, so the selection is exact rather than bisected.
pub fn shape_guided_polygon(
    body: &ConvexBody,
    shape: &RadialFunction,
    n: usize,
) -> Result<MinimizerResult, MinimizerError> {
    if n < 3 {
        return Err(MinimizerError::InvalidN {
            n,
            min: 3,
            max: usize::MAX,
        });
    }
    let area = shape.area();
    let g = shape.centroid();
    if (area - 1.0).abs() > 1e-6 || g.norm() > 1e-6 {
        return Err(MinimizerError::InfeasibleShape {
            area,
            gx: g.x,
            gy: g.y,
        });
    }
    let gauge = shape_gauge(shape);
    let ranked = primitives_by_gauge(&gauge, shape.max(), area, n)?;
    let lambda = ranked[n - 1].1;
    let vectors = ranked
        .iter()
        .take_while(|(_, g)| *g <= lambda * (1.0 + 1e-12))
        .map(|(z, _)| *z)
        .collect();
    close_and_trim(body, vectors, n, Anchor::Special, Method::ShapeGuided)
}
