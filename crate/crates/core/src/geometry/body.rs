use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::{angle_of, cross, unit, RadialFunction, Vec2};
use crate::error::GeometryError;

/// On-disk description of a unit body.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BodySpec {
    Polygon {
        vertices: Vec<[f64; 2]>,
    },
    Radial {
        samples: Vec<f64>,
    },
    EllipseFocus {
        p: f64,
        e: [f64; 2],
    },
    /// Disk centred at the origin; the radius defaults to `1/√π` (unit area).
    Disk {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        radius: Option<f64>,
    },
}

#[derive(Clone, Debug, PartialEq)]
enum Shape {
    Polygon {
        vertices: Vec<Vec2>,
        /// Edge `i` lies on `{x : g_i · x = 1}`.
        gauges: Vec<Vec2>,
    },
    Radial(RadialFunction),
    EllipseFocus {
        p: f64,
        e: Vec2,
    },
}

/// A convex body `D` with the origin in its interior, together with its gauge
/// `‖x‖_D = min{t ≥ 0 : x ∈ tD}`.
///
/// `D` need not be symmetric. All constructors validate their input; a
/// `ConvexBody` is immutable afterwards.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BodySpec", into = "BodySpec")]
pub struct ConvexBody {
    shape: Shape,
    area: f64,
    centroid: Vec2,
    r_in: f64,
    r_out: f64,
}

impl TryFrom<BodySpec> for ConvexBody {
    type Error = GeometryError;

    fn try_from(spec: BodySpec) -> Result<Self, Self::Error> {
        match spec {
            BodySpec::Polygon { vertices } => {
                Self::polygon(vertices.into_iter().map(|[x, y]| Vec2::new(x, y)).collect())
            }
            BodySpec::Radial { samples } => Ok(Self::radial(RadialFunction::new(samples)?)),
            BodySpec::EllipseFocus { p, e } => Self::ellipse_focus(p, Vec2::new(e[0], e[1])),
            BodySpec::Disk { radius } => Self::disk(radius.unwrap_or(1.0 / PI.sqrt())),
        }
    }
}

impl From<ConvexBody> for BodySpec {
    fn from(body: ConvexBody) -> Self {
        match body.shape {
            Shape::Polygon { vertices, .. } => BodySpec::Polygon {
                vertices: vertices.iter().map(|v| [v.x, v.y]).collect(),
            },
            Shape::Radial(rf) => BodySpec::Radial {
                samples: rf.into(),
            },
            Shape::EllipseFocus { p, e } => BodySpec::EllipseFocus { p, e: [e.x, e.y] },
        }
    }
}

impl ConvexBody {
    /// Convex polygon given by its vertices in anticlockwise order.
    pub fn polygon(vertices: Vec<Vec2>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeometryError::NotConvex(format!("{n} vertices")));
        }
        if vertices.iter().any(|v| !(v.x.is_finite() && v.y.is_finite())) {
            return Err(GeometryError::InvalidParameter("non-finite vertex".into()));
        }
        let edge = |i: usize| vertices[(i + 1) % n] - vertices[i];
        let mut turning = 0.0;
        for i in 0..n {
            let (a, b) = (edge(i), edge((i + 1) % n));
            if a.norm() == 0.0 {
                return Err(GeometryError::NotConvex(format!("repeated vertex {i}")));
            }
            let c = cross(a, b);
            if c < -1e-12 * a.norm() * b.norm() {
                return Err(GeometryError::NotConvex(format!("right turn at vertex {}", (i + 1) % n)));
            }
            turning += c.atan2(a.dot(&b));
        }
        if (turning - TAU).abs() > 1e-6 {
            return Err(GeometryError::NotConvex(format!(
                "total turning {turning:.6} instead of 2π"
            )));
        }

        let mut gauges = Vec::with_capacity(n);
        let mut r_in = f64::INFINITY;
        for i in 0..n {
            let e = edge(i);
            let normal = Vec2::new(e.y, -e.x);
            let offset = normal.dot(&vertices[i]);
            let dist = offset / normal.norm();
            if !(dist > 0.0) {
                return Err(GeometryError::OriginNotInterior);
            }
            r_in = r_in.min(dist);
            gauges.push(normal / offset);
        }

        let mut area2 = 0.0;
        let mut moment = Vec2::zeros();
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            let c = cross(a, b);
            area2 += c;
            moment += (a + b) * c;
        }
        let area = 0.5 * area2;
        let centroid = moment / (3.0 * area2);
        let r_out = vertices.iter().map(|v| v.norm()).fold(0.0, f64::max);
        Ok(Self {
            shape: Shape::Polygon { vertices, gauges },
            area,
            centroid,
            r_in,
            r_out,
        })
    }

    /// Star-shaped body given by a sampled radial function. Convexity of the
    /// samples is not enforced here; see [`RadialFunction::convexity_certificate`].
    pub fn radial(rf: RadialFunction) -> Self {
        Self {
            area: rf.area(),
            centroid: rf.centroid(),
            r_in: rf.min(),
            r_out: rf.max(),
            shape: Shape::Radial(rf),
        }
    }

    /// Ellipse with one focus at the origin: `r(t) = p / (1 + e·u(t))`.
    pub fn ellipse_focus(p: f64, e: Vec2) -> Result<Self, GeometryError> {
        if !(p.is_finite() && p > 0.0) {
            return Err(GeometryError::InvalidParameter(format!("semi-latus {p}")));
        }
        let ecc = e.norm();
        if !(ecc < 1.0) {
            return Err(GeometryError::InvalidParameter(format!("eccentricity {ecc}")));
        }
        let k = 1.0 - ecc * ecc;
        Ok(Self {
            shape: Shape::EllipseFocus { p, e },
            area: PI * p * p / k.powf(1.5),
            centroid: -e * (p / k),
            r_in: p / (1.0 + ecc),
            r_out: p / (1.0 - ecc),
        })
    }

    pub fn disk(radius: f64) -> Result<Self, GeometryError> {
        Self::ellipse_focus(radius, Vec2::zeros())
    }

    /// The disk of area one.
    pub fn unit_area_disk() -> Self {
        Self::disk(1.0 / PI.sqrt()).expect("positive radius")
    }

    /// Axis-parallel square `[-h, h]²`.
    pub fn square(half_side: f64) -> Result<Self, GeometryError> {
        let h = half_side;
        Self::polygon(vec![
            Vec2::new(h, -h),
            Vec2::new(h, h),
            Vec2::new(-h, h),
            Vec2::new(-h, -h),
        ])
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn centroid(&self) -> Vec2 {
        self.centroid
    }

    /// Largest `d₁` with `d₁B ⊂ D`.
    pub fn r_in(&self) -> f64 {
        self.r_in
    }

    /// Smallest `d₂` with `D ⊂ d₂B`.
    pub fn r_out(&self) -> f64 {
        self.r_out
    }

    /// Whether the gauge is computed exactly (as opposed to interpolated samples).
    pub fn has_exact_gauge(&self) -> bool {
        !matches!(self.shape, Shape::Radial(_))
    }

    pub fn polygon_vertices(&self) -> Option<&[Vec2]> {
        match &self.shape {
            Shape::Polygon { vertices, .. } => Some(vertices),
            _ => None,
        }
    }

    /// Angles in `[0, 2π)` where the radial function may fail to be smooth.
    pub fn kink_angles(&self) -> Vec<f64> {
        match &self.shape {
            Shape::Polygon { vertices, .. } => vertices.iter().map(|v| angle_of(*v)).collect(),
            Shape::Radial(rf) => (0..rf.len()).map(|j| rf.angle(j)).collect(),
            Shape::EllipseFocus { .. } => Vec::new(),
        }
    }

    /// The gauge `‖x‖_D`.
    pub fn norm(&self, x: Vec2) -> f64 {
        match &self.shape {
            Shape::Polygon { gauges, .. } => gauges.iter().map(|g| g.dot(&x)).fold(0.0, f64::max),
            Shape::EllipseFocus { p, e } => (x.norm() + e.dot(&x)) / p,
            Shape::Radial(rf) => {
                let len = x.norm();
                if len == 0.0 {
                    0.0
                } else {
                    len / rf.eval(angle_of(x))
                }
            }
        }
    }

    /// `r₀(t)`: distance from the origin to the boundary in direction `u(t)`.
    pub fn radial_value(&self, t: f64) -> f64 {
        match &self.shape {
            Shape::Polygon { .. } => 1.0 / self.norm(unit(t)),
            Shape::EllipseFocus { p, e } => p / (1.0 + e.dot(&unit(t))),
            Shape::Radial(rf) => rf.eval(t),
        }
    }

    /// Radial function sampled on an `n`-point grid.
    pub fn sample(&self, n: usize) -> Result<RadialFunction, GeometryError> {
        match &self.shape {
            Shape::Radial(rf) if rf.len() == n => Ok(rf.clone()),
            _ => RadialFunction::from_fn(n, |t| self.radial_value(t)),
        }
    }

    /// The body `sD`.
    pub fn scaled(&self, s: f64) -> Self {
        assert!(s.is_finite() && s > 0.0, "scale factor must be positive");
        let shape = match &self.shape {
            Shape::Polygon { vertices, gauges } => Shape::Polygon {
                vertices: vertices.iter().map(|v| v * s).collect(),
                gauges: gauges.iter().map(|g| g / s).collect(),
            },
            Shape::Radial(rf) => Shape::Radial(rf.scaled(s)),
            Shape::EllipseFocus { p, e } => Shape::EllipseFocus { p: p * s, e: *e },
        };
        Self {
            shape,
            area: self.area * s * s,
            centroid: self.centroid * s,
            r_in: self.r_in * s,
            r_out: self.r_out * s,
        }
    }

    pub fn scaled_to_unit_area(&self) -> Self {
        self.scaled(self.area.powf(-0.5))
    }

    /// The point reflection `-D`. Its gauge measures clockwise traversals.
    pub fn reflected(&self) -> Self {
        let shape = match &self.shape {
            Shape::Polygon { vertices, gauges } => Shape::Polygon {
                vertices: vertices.iter().map(|v| -v).collect(),
                gauges: gauges.iter().map(|g| -g).collect(),
            },
            Shape::Radial(rf) => {
                let s = rf.samples();
                let half = s.len() / 2;
                let rotated = s[half..].iter().chain(&s[..half]).copied().collect();
                Shape::Radial(RadialFunction::new(rotated).expect("rotation keeps samples valid"))
            }
            Shape::EllipseFocus { p, e } => Shape::EllipseFocus { p: *p, e: -e },
        };
        Self {
            shape,
            centroid: -self.centroid,
            ..*self
        }
    }
}
