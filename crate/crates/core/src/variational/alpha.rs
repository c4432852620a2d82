use std::f64::consts::{PI, TAU};
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use serde::{Deserialize, Serialize};

use super::VpSolution;
use crate::error::GeometryError;
use crate::geometry::{unit, ConvexBody, DEFAULT_GRID};

/// `α(D)` evaluated by two independent quadratures.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaPair {
    /// `(π/√6) ∫_C ‖x‖_D dx` by 2-D polar Gauss–Legendre quadrature.
    pub area_integral: f64,
    /// `(π/(3√6)) ∫ r³/r₀` by the periodic rectangle rule on the solution grid.
    pub sector_integral: f64,
}

impl AlphaPair {
    pub fn relative_gap(&self) -> f64 {
        (self.area_integral - self.sector_integral).abs() / self.sector_integral.abs()
    }
}

const OUTER_PANELS: usize = 2048;

/// Evaluates `α(D)` for the solution of the problem built from `body`.
///
/// The area integral uses the continuous radial function of `body` (scaled to
/// unit area as in the solve), with `r = 1/(a/r₀ + b cos + c sin)` rebuilt
/// from the coefficients. The angle range is split at the body's kinks and
/// into uniform panels with 8-point rules; the radial integral uses a 3-point
/// rule, exact for the quadratic integrand `‖ρu‖ ρ`.
pub fn alpha_two_ways(sol: &VpSolution, body: &ConvexBody) -> AlphaPair {
    let d = body.scaled(sol.scale);
    let mut cuts: Vec<f64> = (0..=OUTER_PANELS).map(|k| TAU * k as f64 / OUTER_PANELS as f64).collect();
    if d.polygon_vertices().is_some() {
        cuts.extend(d.kink_angles());
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-15);

    let outer = GaussLegendre::new(NonZeroUsize::new(8).unwrap());
    let inner = GaussLegendre::new(NonZeroUsize::new(3).unwrap());
    let integral: f64 = cuts
        .windows(2)
        .map(|w| {
            outer.integrate(w[0], w[1], |t| {
                let u = unit(t);
                let r = 1.0 / (sol.a / d.radial_value(t) + sol.b * u.x + sol.c * u.y);
                inner.integrate(0.0, r, |rho| d.norm(u * rho) * rho)
            })
        })
        .sum();
    AlphaPair {
        area_integral: PI / 6f64.sqrt() * integral,
        sector_integral: sol.alpha,
    }
}

/// Relative sup-norm residual of the least-squares fit of `1/r₀` by
/// `a + b cos t + c sin t` on an `n`-point grid.
///
/// On a uniform grid the three basis functions are orthogonal, so the fit is
/// given by discrete Fourier coefficients.
pub fn circle_residual(body: &ConvexBody, n: usize) -> Result<f64, GeometryError> {
    let rf = body.sample(n)?;
    let w: Vec<f64> = rf.samples().iter().map(|r| 1.0 / r).collect();
    let nf = n as f64;
    let (mut a, mut b, mut c) = (0.0, 0.0, 0.0);
    for (j, wj) in w.iter().enumerate() {
        let u = unit(rf.angle(j));
        a += wj;
        b += wj * u.x;
        c += wj * u.y;
    }
    let (a, b, c) = (a / nf, 2.0 * b / nf, 2.0 * c / nf);
    let wmax = w.iter().copied().fold(0.0, f64::max);
    let res = w
        .iter()
        .enumerate()
        .map(|(j, wj)| {
            let u = unit(rf.angle(j));
            (wj - a - b * u.x - c * u.y).abs()
        })
        .fold(0.0, f64::max);
    Ok(res / wmax)
}

/// Whether the limit shape of `body` is a disk, i.e. `1/r₀` lies in
/// `span{1, cos t, sin t}`, which happens exactly for ellipses with a focus at
/// the origin.
pub fn is_circle_limit(body: &ConvexBody) -> bool {
    circle_residual(body, DEFAULT_GRID).is_ok_and(|r| r < 1e-8)
}
