use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::{unit, Vec2};
use crate::error::GeometryError;

/// A positive periodic function sampled on the uniform grid `t_j = 2πj/N`.
///
/// Sample `N` (which would repeat sample 0) is not stored. All integrals use
/// the periodic rectangle rule, which is spectrally accurate for smooth
/// integrands.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct RadialFunction {
    samples: Vec<f64>,
}

impl TryFrom<Vec<f64>> for RadialFunction {
    type Error = GeometryError;

    fn try_from(samples: Vec<f64>) -> Result<Self, Self::Error> {
        Self::new(samples)
    }
}

impl From<RadialFunction> for Vec<f64> {
    fn from(rf: RadialFunction) -> Self {
        rf.samples
    }
}

impl RadialFunction {
    pub fn new(samples: Vec<f64>) -> Result<Self, GeometryError> {
        let n = samples.len();
        if n < 4 || !n.is_power_of_two() {
            return Err(GeometryError::GridSize(n));
        }
        if let Some((index, &value)) = samples
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(GeometryError::NonPositiveSample { index, value });
        }
        Ok(Self { samples })
    }

    /// Samples `f` at the `n` grid angles.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> f64) -> Result<Self, GeometryError> {
        let h = TAU / n as f64;
        Self::new((0..n).map(|j| f(j as f64 * h)).collect())
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn step(&self) -> f64 {
        TAU / self.len() as f64
    }

    pub fn angle(&self, j: usize) -> f64 {
        j as f64 * self.step()
    }

    pub fn min(&self) -> f64 {
        self.samples.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.samples.iter().copied().fold(0.0, f64::max)
    }

    /// Periodic linear interpolation at angle `t` (any real).
    pub fn eval(&self, t: f64) -> f64 {
        let n = self.len();
        let s = t.rem_euclid(TAU) / self.step();
        let j = (s.floor() as usize).min(n - 1);
        let frac = (s - j as f64).clamp(0.0, 1.0);
        let a = self.samples[j];
        let b = self.samples[(j + 1) % n];
        a + (b - a) * frac
    }

    /// Periodic rectangle rule for `∫₀^{2π} f(t, r(t)) dt`.
    pub fn integrate(&self, f: impl Fn(f64, f64) -> f64) -> f64 {
        let h = self.step();
        self.samples
            .iter()
            .enumerate()
            .map(|(j, &r)| f(j as f64 * h, r))
            .sum::<f64>()
            * h
    }

    /// Area of the star-shaped set: `½ ∫ r² dt`.
    pub fn area(&self) -> f64 {
        0.5 * self.step() * self.samples.iter().map(|r| r * r).sum::<f64>()
    }

    /// `(∫ r³ cos t dt, ∫ r³ sin t dt)`, equal to three times the area times the centroid.
    pub fn centroid_moment(&self) -> Vec2 {
        let h = self.step();
        let mut m = Vec2::zeros();
        for (j, &r) in self.samples.iter().enumerate() {
            m += unit(j as f64 * h) * (r * r * r);
        }
        m * h
    }

    pub fn centroid(&self) -> Vec2 {
        self.centroid_moment() / (3.0 * self.area())
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            samples: self.samples.iter().map(|r| r * s).collect(),
        }
    }

    pub fn scaled_to_unit_area(&self) -> Self {
        self.scaled(self.area().powf(-0.5))
    }

    /// Sample points `r_j u(t_j)` on the boundary.
    pub fn boundary(&self) -> Vec<Vec2> {
        let h = self.step();
        self.samples
            .iter()
            .enumerate()
            .map(|(j, &r)| unit(j as f64 * h) * r)
            .collect()
    }

    /// Smallest value over the grid of the discrete curvature expression
    /// `(w_{j+1} + w_{j-1} - 2 cos(h) w_j) / h²` with `w = 1/r`.
    ///
    /// This is the second difference of `1/r` plus `1/r`, in the form that
    /// vanishes exactly on `span{cos t, sin t}` (straight boundary pieces). It
    /// is non-negative iff the polygon through the samples turns left at
    /// every sample.
    pub fn curvature_margin(&self) -> f64 {
        let n = self.len();
        let h = self.step();
        let two_cos = 2.0 * h.cos();
        let w: Vec<f64> = self.samples.iter().map(|r| 1.0 / r).collect();
        (0..n)
            .map(|j| (w[(j + 1) % n] + w[(j + n - 1) % n] - two_cos * w[j]) / (h * h))
            .fold(f64::INFINITY, f64::min)
    }

    /// True iff the sampled boundary bounds a convex set, up to a tolerance of
    /// `1e-8 · max(1/r)`.
    pub fn convexity_certificate(&self) -> bool {
        let tol = 1e-8 / self.min();
        self.curvature_margin() >= -tol
    }
}
