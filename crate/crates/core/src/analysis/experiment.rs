use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::hausdorff::{densify, diameter, hausdorff, min_x_normalized, normalize_area};
use crate::error::{AnalysisError, Error};
use crate::geometry::{polygon_area, ConvexBody, Vec2, DEFAULT_GRID};
use crate::lattice::{lattice_hull, LatticeVector};
use crate::minimizer::{
    density_lower_bound, exact_minimizer, greedy_polygon, shape_guided_polygon, Method, MinimizerResult,
    DEFAULT_BUDGET, MAX_EXACT_N,
};
use crate::variational::{limit_polygon, solve_vp, LimitPolygon, VpSolution};

/// Largest `n` for which the exact perimeter is added to a record.
pub const EXACT_COMPANION_MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub body_path: PathBuf,
    pub n_values: Vec<usize>,
    #[serde(default = "default_grid")]
    pub grid: usize,
    #[serde(default = "default_method")]
    pub method: Method,
    #[serde(default)]
    pub seed: u64,
    pub output_dir: PathBuf,
}

fn default_grid() -> usize {
    DEFAULT_GRID
}

fn default_method() -> Method {
    Method::ShapeGuided
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), AnalysisError> {
        validate_grid(self.grid)?;
        if let Some(&n) = self.n_values.iter().find(|&&n| n < 3) {
            return Err(AnalysisError::Config(format!("n = {n} is below 3")));
        }
        if self.n_values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AnalysisError::Config("n values must be strictly increasing".into()));
        }
        if self.method == Method::Exact {
            if let Some(&n) = self.n_values.iter().find(|&&n| n > MAX_EXACT_N) {
                return Err(AnalysisError::Config(format!(
                    "exact method supports n <= {MAX_EXACT_N}, got {n}"
                )));
            }
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, AnalysisError> {
        read_json(path)
    }
}

/// Quadrature grids must be powers of two in `[256, 2²⁰]`.
pub fn validate_grid(grid: usize) -> Result<(), AnalysisError> {
    if !grid.is_power_of_two() || !(256..=1 << 20).contains(&grid) {
        return Err(AnalysisError::Config(format!(
            "grid {grid} is not a power of two in [256, 2^20]"
        )));
    }
    Ok(())
}

pub(crate) fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, AnalysisError> {
    let text = fs::read_to_string(path).map_err(|source| AnalysisError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| AnalysisError::Json {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads a body description (`{"type": "polygon", ...}` and friends).
pub fn load_body(path: &Path) -> Result<ConvexBody, AnalysisError> {
    read_json(path)
}

/// One row of a convergence table. Quantities that could not be computed are
/// absent and `error` says why.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub n: usize,
    pub method: Method,
    pub perimeter: Option<f64>,
    /// `perimeter / n^{3/2}`.
    pub scaled: Option<f64>,
    pub alpha_ref: f64,
    /// Hausdorff distance between the area-normalized hull of the edge
    /// vectors and `C`.
    #[serde(rename = "hausdorff_C")]
    pub hausdorff_c: Option<f64>,
    /// Hausdorff distance between the area-normalized, left-anchored polygon
    /// and `P`.
    #[serde(rename = "hausdorff_P")]
    pub hausdorff_p: Option<f64>,
    /// `√(Area(n^{-3/2} P_n) / Area P)`, the empirical scale linking the two.
    pub p_scale: Option<f64>,
    pub exact_perimeter: Option<f64>,
    /// Sum of the `n` smallest primitive norms over `n^{3/2}`.
    pub density_lower_bound: Option<f64>,
    pub error: Option<String>,
}

/// Reference objects of one body: `C`, `P` and `α(D)` on a given grid.
#[derive(Clone, Debug)]
pub struct Reference {
    /// The body scaled to unit area.
    pub body: ConvexBody,
    pub solution: VpSolution,
    pub limit: LimitPolygon,
}

impl Reference {
    pub fn new(body: &ConvexBody, grid: usize) -> Result<Self, Error> {
        let body = body.scaled_to_unit_area();
        let solution = solve_vp(&body.sample(grid)?)?;
        let limit = limit_polygon(&solution)?;
        Ok(Self { body, solution, limit })
    }

    pub fn alpha(&self) -> f64 {
        self.solution.alpha
    }

    pub fn construct(&self, method: Method, n: usize) -> Result<MinimizerResult, Error> {
        Ok(match method {
            Method::ShapeGuided => shape_guided_polygon(&self.body, &self.solution.r, n)?,
            Method::Greedy => greedy_polygon(&self.body, n)?,
            Method::Exact => exact_minimizer(&self.body, n, DEFAULT_BUDGET)?,
        })
    }

    /// Distance from the normalized hull of the edge vectors to `C`.
    ///
    /// The special edge and the trimming chord are left out: they are
    /// artefacts of closing the construction and are not near `λC`.
    pub fn hausdorff_c(&self, result: &MinimizerResult) -> Result<Option<f64>, AnalysisError> {
        let mut edges = result.polygon.edges();
        if let Some(z0) = result.special_edge {
            edges.retain(|e| !e.same_direction(z0));
        }
        if let Some(chord) = result.trim.as_ref().and_then(|t| t.chord) {
            if let Some(k) = edges.iter().position(|e| *e == chord) {
                edges.remove(k);
            }
        }
        let hull: Vec<Vec2> = lattice_hull(&edges).iter().map(|v| v.to_vec2()).collect();
        if hull.len() < 3 {
            return Ok(None);
        }
        let c = self.solution.r.boundary();
        let gap = diameter(&c) / 2000.0;
        let a = densify(&normalize_area(&hull), gap);
        let b = densify(&normalize_area(&c), gap);
        Ok(Some(hausdorff(&a, &b)?.distance))
    }

    /// Distance from the area-normalized polygon to the area-normalized `P`,
    /// both anchored at their leftmost point, with the fitted scale.
    pub fn hausdorff_p(&self, result: &MinimizerResult) -> Result<(f64, f64), AnalysisError> {
        let s = (result.n as f64).powf(-1.5);
        let q: Vec<Vec2> = result.polygon.vertices().iter().map(|v| v.to_vec2() * s).collect();
        let p_scale = (polygon_area(&q) / self.limit.area()).sqrt();
        let p = min_x_normalized(&normalize_area(&self.limit.boundary));
        let gap = diameter(&p) / 2000.0;
        let a = densify(&min_x_normalized(&normalize_area(&q)), gap);
        let b = densify(&p, gap);
        Ok((hausdorff(&a, &b)?.distance, p_scale))
    }

    pub fn record(&self, method: Method, n: usize) -> ConvergenceRecord {
        let mut rec = ConvergenceRecord {
            n,
            method,
            perimeter: None,
            scaled: None,
            alpha_ref: self.alpha(),
            hausdorff_c: None,
            hausdorff_p: None,
            p_scale: None,
            exact_perimeter: None,
            density_lower_bound: density_lower_bound(&self.body, n)
                .ok()
                .map(|l| l / (n as f64).powf(1.5)),
            error: None,
        };
        if n <= EXACT_COMPANION_MAX_N {
            rec.exact_perimeter = exact_minimizer(&self.body, n, DEFAULT_BUDGET).ok().map(|r| r.perimeter);
        }
        let result = match self.construct(method, n) {
            Ok(r) => r,
            Err(e) => {
                rec.error = Some(e.to_string());
                return rec;
            }
        };
        rec.perimeter = Some(result.perimeter);
        rec.scaled = Some(result.perimeter / (n as f64).powf(1.5));
        let mut errors = Vec::new();
        match self.hausdorff_c(&result) {
            Ok(h) => rec.hausdorff_c = h,
            Err(e) => errors.push(e.to_string()),
        }
        match self.hausdorff_p(&result) {
            Ok((h, s)) => {
                rec.hausdorff_p = Some(h);
                rec.p_scale = Some(s);
            }
            Err(e) => errors.push(e.to_string()),
        }
        if !errors.is_empty() {
            rec.error = Some(errors.join("; "));
        }
        rec
    }
}

/// Builds one record per `n`, in parallel, returned in `n` order.
pub fn convergence(body: &ConvexBody, n_values: &[usize], grid: usize, method: Method) -> Result<Vec<ConvergenceRecord>, Error> {
    if n_values.is_empty() {
        return Ok(Vec::new());
    }
    let reference = Reference::new(body, grid)?;
    Ok(n_values.par_iter().map(|&n| reference.record(method, n)).collect())
}

fn fmt_opt(v: Option<f64>, prec: usize) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.prec$}"))
}

/// Fixed-width text table of records.
pub fn summary_table(records: &[ConvergenceRecord]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>8} {:>13} {:>16} {:>10} {:>10} {:>9} {:>11} {:>11} {:>8}",
        "n", "method", "perimeter", "scaled", "alpha", "rel.err", "hausdorff_C", "hausdorff_P", "P scale"
    );
    for r in records {
        let rel = r.scaled.map(|v| (v - r.alpha_ref) / r.alpha_ref);
        let _ = writeln!(
            s,
            "{:>8} {:>13} {:>16} {:>10} {:>10.6} {:>9} {:>11} {:>11} {:>8}{}",
            r.n,
            r.method.to_string(),
            fmt_opt(r.perimeter, 6),
            fmt_opt(r.scaled, 6),
            r.alpha_ref,
            fmt_opt(rel, 5),
            fmt_opt(r.hausdorff_c, 5),
            fmt_opt(r.hausdorff_p, 5),
            fmt_opt(r.p_scale, 4),
            r.error.as_ref().map(|e| format!("  error: {e}")).unwrap_or_default()
        );
    }
    s
}

/// Validates the config, runs the sweep and writes `records.jsonl` and
/// `summary.txt` to the output directory.
pub fn run_convergence(config: &ExperimentConfig) -> Result<Vec<ConvergenceRecord>, Error> {
    config.validate()?;
    let body = load_body(&config.body_path)?;
    let records = convergence(&body, &config.n_values, config.grid, config.method)?;
    let io = |path: PathBuf| {
        move |source| AnalysisError::Io {
            path: path.clone(),
            source,
        }
    };
    fs::create_dir_all(&config.output_dir).map_err(io(config.output_dir.clone()))?;
    let mut lines = String::new();
    for r in &records {
        lines.push_str(&serde_json::to_string(r).expect("records serialize"));
        lines.push('\n');
    }
    let jsonl = config.output_dir.join("records.jsonl");
    fs::write(&jsonl, lines).map_err(io(jsonl.clone()))?;
    let summary = config.output_dir.join("summary.txt");
    let text = format!(
        "body: {}\ngrid: {}  method: {}  seed: {}\n\n{}",
        config.body_path.display(),
        config.grid,
        config.method,
        config.seed,
        summary_table(&records)
    );
    fs::write(&summary, text).map_err(io(summary.clone()))?;
    Ok(records)
}

/// Edge vectors of a result other than the special edge.
pub fn regular_edges(result: &MinimizerResult) -> Vec<LatticeVector> {
    let mut e = result.polygon.edges();
    if let Some(z0) = result.special_edge {
        e.retain(|v| !v.same_direction(z0));
    }
    e
}
