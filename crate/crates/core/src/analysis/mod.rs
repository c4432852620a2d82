//! Convergence experiments, Hausdorff distances and SVG output.

mod experiment;
mod hausdorff;
mod svg;

pub use experiment::{
    convergence, load_body, regular_edges, run_convergence, summary_table, validate_grid, ConvergenceRecord,
    ExperimentConfig, Reference, EXACT_COMPANION_MAX_N,
};
pub use hausdorff::{densify, diameter, hausdorff, min_x_normalized, normalize_area, HausdorffDistance, MIN_SAMPLES};
pub use svg::{render_svg, svg_document, SvgObject};
