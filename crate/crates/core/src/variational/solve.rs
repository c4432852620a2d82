use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use super::{alpha_factor, constraint_residuals, vp_objective};
use crate::error::VpError;
use crate::geometry::RadialFunction;

/// Solution `1/r = a/r₀ + b cos t + c sin t` for a unit-area `r₀`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VpSolution {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Radial function of the limit shape `C`.
    #[serde(rename = "r_samples")]
    pub r: RadialFunction,
    /// The reference radial function after rescaling to unit area.
    #[serde(rename = "r0_samples")]
    pub r0: RadialFunction,
    /// Factor that took the input `r₀` to unit area.
    pub scale: f64,
    /// `∫ r³/r₀`.
    pub objective: f64,
    /// `α(D) = (π/(3√6)) ∫ r³/r₀`.
    pub alpha: f64,
    pub residuals: [f64; 3],
    pub iterations: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NewtonOptions {
    /// Stop when every residual is below this.
    pub tol: f64,
    pub max_iter: usize,
    /// Relative step of the central-difference Jacobian.
    pub fd_step: f64,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 100,
            fd_step: 1e-6,
        }
    }
}

/// Radial function for parameters `p = (a, b, c)`, or `None` if `1/r ≤ 0`
/// somewhere on the grid.
fn family(r0: &RadialFunction, p: &Vector3<f64>) -> Option<RadialFunction> {
    let samples: Option<Vec<f64>> = r0
        .samples()
        .iter()
        .enumerate()
        .map(|(j, &r0j)| {
            let (s, c) = r0.angle(j).sin_cos();
            let w = p[0] / r0j + p[1] * c + p[2] * s;
            (w > 0.0).then(|| 1.0 / w)
        })
        .collect();
    RadialFunction::new(samples?).ok()
}

fn max_abs(v: &Vector3<f64>) -> f64 {
    v.amax()
}

fn residual(r0: &RadialFunction, p: &Vector3<f64>) -> Option<(RadialFunction, Vector3<f64>)> {
    let r = family(r0, p)?;
    let f = Vector3::from(constraint_residuals(&r));
    Some((r, f))
}

/// Solves the variational problem for `r₀`, after rescaling it to unit area.
///
/// Starts from `a = √(½∫r₀²) = 1`, `b = c = 0`, which satisfies the area
/// constraint exactly.
pub fn solve_vp(r0: &RadialFunction) -> Result<VpSolution, VpError> {
    if !r0.convexity_certificate() {
        return Err(VpError::NotConvex);
    }
    let scale = r0.area().powf(-0.5);
    let unit = r0.scaled(scale);
    let a0 = unit.area().sqrt();
    newton(unit, scale, Vector3::new(a0, 0.0, 0.0), NewtonOptions::default())
}

/// Newton from an arbitrary start `(a, b, c)`; `r₀` is rescaled to unit area
/// but not checked for convexity.
pub fn solve_vp_from(r0: &RadialFunction, start: [f64; 3], opts: NewtonOptions) -> Result<VpSolution, VpError> {
    let scale = r0.area().powf(-0.5);
    newton(r0.scaled(scale), scale, Vector3::from(start), opts)
}

/// Damped Newton with a central finite-difference Jacobian. A step is halved
/// while it leaves the positive region or fails to reduce the largest
/// residual.
fn newton(r0: RadialFunction, scale: f64, start: Vector3<f64>, opts: NewtonOptions) -> Result<VpSolution, VpError> {
    let (mut r, mut f) = residual(&r0, &start).ok_or(VpError::NonPositive)?;
    let mut p = start;
    let mut iterations = 0;
    while max_abs(&f) >= opts.tol {
        if iterations == opts.max_iter {
            return Err(VpError::NoConvergence {
                iterations,
                residual: max_abs(&f),
            });
        }
        iterations += 1;

        let mut jac = Matrix3::zeros();
        for k in 0..3 {
            let h = opts.fd_step * p[k].abs().max(p[0].abs());
            let mut hi = p;
            let mut lo = p;
            hi[k] += h;
            lo[k] -= h;
            let col = match (residual(&r0, &hi), residual(&r0, &lo)) {
                (Some((_, fh)), Some((_, fl))) => (fh - fl) / (2.0 * h),
                (Some((_, fh)), None) => (fh - f) / h,
                (None, Some((_, fl))) => (f - fl) / h,
                (None, None) => return Err(VpError::NonPositive),
            };
            jac.set_column(k, &col);
        }
        let step = jac.lu().solve(&(-f)).ok_or(VpError::NoConvergence {
            iterations,
            residual: max_abs(&f),
        })?;

        let mut t = 1.0;
        loop {
            let q = p + step * t;
            if let Some((rq, fq)) = residual(&r0, &q) {
                if max_abs(&fq) < max_abs(&f) {
                    p = q;
                    r = rq;
                    f = fq;
                    break;
                }
            }
            t *= 0.5;
            if t < 1e-12 {
                return Err(VpError::NoConvergence {
                    iterations,
                    residual: max_abs(&f),
                });
            }
        }
    }
    let objective = vp_objective(&r, &r0)?;
    Ok(VpSolution {
        a: p[0],
        b: p[1],
        c: p[2],
        objective,
        alpha: alpha_factor() * objective,
        residuals: [f[0], f[1], f[2]],
        iterations,
        r,
        r0,
        scale,
    })
}
