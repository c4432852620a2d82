use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::vector::{slope_cmp, slope_order, LatticeVector};
use crate::error::LatticeError;
use crate::geometry::ConvexBody;

/// A strictly convex lattice polygon with vertices in anticlockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolygonJson", into = "PolygonJson")]
pub struct LatticePolygon {
    vertices: Vec<LatticeVector>,
}

/// `{"vertices": [[x, y], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<LatticeVector>,
}

/// `{"edges": [[x, y], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSetJson {
    pub edges: Vec<LatticeVector>,
}

impl TryFrom<PolygonJson> for LatticePolygon {
    type Error = LatticeError;
    fn try_from(p: PolygonJson) -> Result<Self, LatticeError> {
        Self::new(p.vertices)
    }
}

impl From<LatticePolygon> for PolygonJson {
    fn from(p: LatticePolygon) -> Self {
        PolygonJson {
            vertices: p.vertices,
        }
    }
}

fn cyclic_edges(vertices: &[LatticeVector]) -> Vec<LatticeVector> {
    let n = vertices.len();
    (0..n).map(|i| vertices[(i + 1) % n] - vertices[i]).collect()
}

impl LatticePolygon {
    /// Validates strict convexity, anticlockwise orientation and single winding.
    pub fn new(vertices: Vec<LatticeVector>) -> Result<Self, LatticeError> {
        let n = vertices.len();
        if n < 3 {
            return Err(LatticeError::NotConvex(format!("{n} vertices")));
        }
        let edges = cyclic_edges(&vertices);
        if edges.iter().any(|e| e.is_zero()) {
            return Err(LatticeError::NotConvex("repeated vertex".into()));
        }
        for i in 0..n {
            if edges[i].cross(edges[(i + 1) % n]) <= 0 {
                return Err(LatticeError::NotConvex(format!(
                    "no strict left turn at vertex {}",
                    (i + 1) % n
                )));
            }
        }
        // Left turns everywhere plus exactly one wrap-around in angular order
        // means the boundary winds once.
        let descents = (0..n)
            .filter(|&i| slope_cmp(edges[i], edges[(i + 1) % n]) == Ordering::Greater)
            .count();
        if descents != 1 {
            return Err(LatticeError::NotConvex(format!("boundary winds {descents} times")));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive differences, closing edge included; `edges()[i]` leaves vertex `i`.
    pub fn edges(&self) -> Vec<LatticeVector> {
        cyclic_edges(&self.vertices)
    }

    /// Edge list sorted by coordinates, used as a canonical key.
    pub fn sorted_edges(&self) -> Vec<LatticeVector> {
        let mut e = self.edges();
        e.sort();
        e
    }

    /// `Per_D P = Σ ‖z_{i+1} − z_i‖_D` along the anticlockwise traversal.
    pub fn perimeter(&self, body: &ConvexBody) -> f64 {
        self.edges().iter().map(|e| body.norm(e.to_vec2())).sum()
    }

    /// Twice the area.
    pub fn double_area(&self) -> i128 {
        let n = self.len();
        (0..n)
            .map(|i| self.vertices[i].cross(self.vertices[(i + 1) % n]))
            .sum()
    }

    pub fn translated(&self, t: LatticeVector) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| *v + t).collect(),
        }
    }

    /// Translates so the vertex of minimal x (minimal y among ties) is at the
    /// origin, and starts the vertex list there.
    pub fn normalized(&self) -> Self {
        let (k, anchor) = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| (v.x, v.y))
            .map(|(k, v)| (k, *v))
            .expect("non-empty polygon");
        let n = self.len();
        Self {
            vertices: (0..n).map(|i| self.vertices[(k + i) % n] - anchor).collect(),
        }
    }

    pub fn from_edges(edges: &[LatticeVector]) -> Result<Self, LatticeError> {
        increasing_slope_construct(edges).map(|c| c.polygon)
    }
}

/// Parallel same-direction input vectors replaced by their sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Merge {
    pub parts: Vec<LatticeVector>,
    pub sum: LatticeVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub polygon: LatticePolygon,
    pub merges: Vec<Merge>,
}

/// Rebuilds the convex polygon whose edge set is `vectors`.
///
/// Vectors are sorted by slope and chained from the origin. Zero vectors are
/// dropped; vectors pointing in the same direction are merged into their sum
/// first, and each merge is reported.
pub fn increasing_slope_construct(vectors: &[LatticeVector]) -> Result<Construction, LatticeError> {
    let total: LatticeVector = vectors.iter().sum();
    if !total.is_zero() {
        return Err(LatticeError::NonZeroSum {
            x: total.x,
            y: total.y,
        });
    }
    let sorted = slope_order(vectors.iter().copied().filter(|v| !v.is_zero()));

    let mut edges: Vec<LatticeVector> = Vec::with_capacity(sorted.len());
    let mut merges = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j].same_direction(sorted[i]) {
            j += 1;
        }
        let sum: LatticeVector = sorted[i..j].iter().sum();
        if j - i > 1 {
            merges.push(Merge {
                parts: sorted[i..j].to_vec(),
                sum,
            });
        }
        edges.push(sum);
        i = j;
    }
    if edges.len() < 3 {
        return Err(LatticeError::Empty {
            directions: edges.len(),
        });
    }

    let mut vertices = Vec::with_capacity(edges.len());
    let mut at = LatticeVector::ZERO;
    for e in &edges {
        vertices.push(at);
        at += *e;
    }
    let polygon = LatticePolygon::new(vertices)?;
    Ok(Construction { polygon, merges })
}

/// Vertices of the convex hull of `points`, anticlockwise, without collinear
/// boundary points. Returns fewer than three points for degenerate input.
pub fn lattice_hull(points: &[LatticeVector]) -> Vec<LatticeVector> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<LatticeVector> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &LatticeVector>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if (b - a).cross(p - b) > 0 {
                    break;
                }
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}
