use std::path::PathBuf;

use thiserror::Error;

use crate::minimizer::MinimizerResult;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("radial grid size {0} is not a power of two >= 4")]
    GridSize(usize),
    #[error("radial sample {index} is not a positive finite number ({value})")]
    NonPositiveSample { index: usize, value: f64 },
    #[error("polygon body is not convex and anticlockwise: {0}")]
    NotConvex(String),
    #[error("origin is not strictly inside the body")]
    OriginNotInterior,
    #[error("invalid body parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("radius bound {0} exceeds the enumeration limit of 1e6")]
    RadiusTooLarge(f64),
    #[error("radius bound {0} is not a finite non-negative number")]
    InvalidRadius(f64),
    #[error("edge vectors sum to ({x}, {y}), not zero")]
    NonZeroSum { x: i64, y: i64 },
    #[error("only {directions} distinct edge directions remain, need at least 3")]
    Empty { directions: usize },
    #[error("lattice polygon is not strictly convex and anticlockwise: {0}")]
    NotConvex(String),
    #[error("function failed the positive 1-homogeneity spot check at ({x}, {y})")]
    NotHomogeneous { x: f64, y: f64 },
    #[error("region does not contain the origin in its interior")]
    NotStarShaped,
}

#[derive(Debug, Error, Clone)]
pub enum MinimizerError {
    #[error("vertex count {n} outside the supported range {min}..={max}")]
    InvalidN { n: usize, min: usize, max: usize },
    #[error("closing construction left fewer than 3 edge directions")]
    DegenerateClosing,
    #[error("shape is not feasible: area {area}, centroid ({gx}, {gy})")]
    InfeasibleShape { area: f64, gx: f64, gy: f64 },
    #[error("branch-and-bound node budget {budget} exhausted; best perimeter so far {}", best.perimeter)]
    BudgetExceeded { budget: u64, best: Box<MinimizerResult> },
    #[error("candidate set has {0} vectors, more than the 1e5 limit")]
    CandidateOverflow(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VpError {
    #[error("radial grids differ: {0} vs {1}")]
    GridMismatch(usize, usize),
    #[error("Newton iteration stalled after {iterations} steps (max residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("no iterate with positive radial function is reachable")]
    NonPositive,
    #[error("reference radial function fails the convexity certificate")]
    NotConvex,
    #[error("limit curve does not close: gap {0:e}")]
    NotClosed(f64),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("boundary has {0} samples, need at least 64")]
    TooFewSamples(usize),
    #[error("nothing to render")]
    EmptyRender,
    #[error("invalid experiment configuration: {0}")]
    Config(String),
    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON in {}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

/// Crate-level error, used where several modules are composed.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Minimizer(#[from] MinimizerError),
    #[error(transparent)]
    Vp(#[from] VpError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

impl Error {
    /// True for failures of a numerical procedure (as opposed to bad input).
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::Vp(VpError::NoConvergence { .. })
                | Error::Vp(VpError::NonPositive)
                | Error::Vp(VpError::NotClosed(_))
                | Error::Minimizer(MinimizerError::BudgetExceeded { .. })
        )
    }
}
