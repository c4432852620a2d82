use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use minperim::analysis::{
    load_body, min_x_normalized, normalize_area, render_svg, run_convergence, summary_table, validate_grid,
    ExperimentConfig, Reference, SvgObject,
};
use minperim::error::{AnalysisError, MinimizerError};
use minperim::geometry::{polygon_area, ConvexBody, RadialFunction, Vec2, DEFAULT_GRID};
use minperim::minimizer::{exact_minimizer, greedy_polygon, shape_guided_polygon, DEFAULT_BUDGET};
use minperim::variational::{alpha_two_ways, circle_residual, is_circle_limit, limit_polygon, solve_vp};
use minperim::{Error, Method, MinimizerResult};
use serde::Serialize;

/// Minimal-perimeter convex lattice polygons for planar norms.
#[derive(Parser, Debug)]
#[command(name = "minperim", version)]
struct Cli {
    /// Body JSON, e.g. {"type": "ellipse_focus", "p": 1.0, "e": [0.4, 0.0]}.
    /// It is rescaled to unit area before use.
    #[arg(long, global = true)]
    body: Option<PathBuf>,
    /// Angular grid size (power of two in [256, 2^20]).
    #[arg(long, global = true, default_value_t = DEFAULT_GRID)]
    grid: usize,
    /// Output directory for files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Use the reflected body -D, i.e. measure clockwise perimeters.
    #[arg(long, global = true)]
    reflect: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve the variational problem for the body.
    SolveVp,
    /// The limit polygon P, optionally drawn together with C.
    LimitShape {
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Exact minimizer by branch and bound (n <= 10).
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// The n shortest primitive vectors, closed and trimmed.
    Greedy {
        #[arg(long)]
        n: usize,
    },
    /// Construction guided by a shape (default: the limit shape C).
    ShapeGuided {
        #[arg(long)]
        n: usize,
        /// Body JSON whose unit-area version is used as the shape.
        #[arg(long)]
        shape: Option<PathBuf>,
    },
    /// Convergence sweep, written to records.jsonl and summary.txt.
    Converge {
        /// Experiment config JSON; overrides the other options.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated, strictly increasing.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, default_value = "shape_guided")]
        method: Method,
    },
    /// The constant alpha(D) computed two ways, and the circle test.
    Alpha,
    /// Draw a constructed polygon with the matching limit polygon.
    Render {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "shape_guided")]
        method: Method,
        /// Output file; defaults to polygon_<n>.svg in --out.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Draw integer gridlines.
        #[arg(long)]
        gridlines: bool,
    },
}

fn config_error(msg: impl Into<String>) -> Error {
    AnalysisError::Config(msg.into()).into()
}

impl Cli {
    /// The body, reflected if asked, scaled to unit area. Scaling leaves the
    /// minimizing polygons unchanged and makes perimeters comparable to alpha.
    fn body(&self) -> Result<ConvexBody, Error> {
        let path = self.body.as_ref().ok_or_else(|| config_error("--body is required"))?;
        let body = load_body(path)?;
        let body = if self.reflect { body.reflected() } else { body };
        Ok(body.scaled_to_unit_area())
    }

    fn out_path(&self, name: &str) -> PathBuf {
        self.out.clone().unwrap_or_else(|| PathBuf::from(".")).join(name)
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
        } else {
            print!("{}", text());
        }
    }
}

fn ensure_parent(path: &Path) -> Result<(), Error> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|source| AnalysisError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
    }
    Ok(())
}

fn minimizer_text(r: &MinimizerResult) -> String {
    let vertices: Vec<String> = r.polygon.vertices().iter().map(|v| v.to_string()).collect();
    let mut s = format!(
        "method: {}\nn: {}\nperimeter: {:.12}\nscaled: {:.8}\ncertified: {}\n",
        r.method,
        r.n,
        r.perimeter,
        r.perimeter / (r.n as f64).powf(1.5),
        r.certified
    );
    if let Some(z0) = r.special_edge {
        s.push_str(&format!("special edge: {z0}\n"));
    }
    if r.n <= 64 {
        s.push_str(&format!("vertices: {}\n", vertices.join(" ")));
    }
    s
}

#[derive(Serialize)]
struct AlphaReport {
    alpha: f64,
    area_integral: f64,
    relative_gap: f64,
    circle_limit: bool,
    circle_residual: f64,
}

fn shape_from(path: &Path, grid: usize) -> Result<RadialFunction, Error> {
    Ok(load_body(path)?.scaled_to_unit_area().sample(grid)?)
}

fn run(cli: &Cli) -> Result<(), Error> {
    validate_grid(cli.grid)?;
    match &cli.command {
        Command::SolveVp => {
            let sol = solve_vp(&cli.body()?.sample(cli.grid)?)?;
            cli.emit(&sol, || {
                format!(
                    "a: {:.12}\nb: {:.12}\nc: {:.12}\nalpha: {:.12}\nobjective: {:.12}\niterations: {}\n",
                    sol.a, sol.b, sol.c, sol.alpha, sol.objective, sol.iterations
                )
            });
        }
        Command::LimitShape { svg } => {
            let sol = solve_vp(&cli.body()?.sample(cli.grid)?)?;
            let limit = limit_polygon(&sol)?;
            if let Some(path) = svg {
                ensure_parent(path)?;
                let c = min_x_normalized(&normalize_area(&sol.r.boundary()));
                let p = min_x_normalized(&normalize_area(&limit.boundary));
                render_svg(&[SvgObject::new(c, "shape"), SvgObject::new(p, "limit")], path, false)?;
            }
            cli.emit(&limit, || {
                format!(
                    "samples: {}\narea: {:.12}\nconvex: {}\n",
                    limit.boundary.len(),
                    limit.area(),
                    limit.convex
                )
            });
        }
        Command::Exact { n, budget } => {
            let result = match exact_minimizer(&cli.body()?, *n, *budget) {
                Ok(r) => r,
                Err(MinimizerError::BudgetExceeded { budget, best }) => {
                    // Report the uncertified incumbent, then fail.
                    cli.emit(&best.report(), || minimizer_text(&best));
                    return Err(MinimizerError::BudgetExceeded { budget, best }.into());
                }
                Err(e) => return Err(e.into()),
            };
            cli.emit(&result.report(), || minimizer_text(&result));
        }
        Command::Greedy { n } => {
            let result = greedy_polygon(&cli.body()?, *n)?;
            cli.emit(&result.report(), || minimizer_text(&result));
        }
        Command::ShapeGuided { n, shape } => {
            let body = cli.body()?;
            let shape = match shape {
                Some(path) => shape_from(path, cli.grid)?,
                None => solve_vp(&body.sample(cli.grid)?)?.r,
            };
            let result = shape_guided_polygon(&body, &shape, *n)?;
            cli.emit(&result.report(), || minimizer_text(&result));
        }
        Command::Converge { config, n, method } => {
            if cli.reflect {
                return Err(config_error("converge reads the body file itself; reflect the file instead of using --reflect"));
            }
            let config = match config {
                Some(path) => ExperimentConfig::load(path)?,
                None => ExperimentConfig {
                    body_path: cli.body.clone().ok_or_else(|| config_error("--body or --config is required"))?,
                    n_values: n.clone(),
                    grid: cli.grid,
                    method: *method,
                    seed: cli.seed,
                    output_dir: cli.out.clone().unwrap_or_else(|| PathBuf::from("out")),
                },
            };
            let records = run_convergence(&config)?;
            cli.emit(&records, || summary_table(&records));
        }
        Command::Alpha => {
            let body = cli.body()?;
            let sol = solve_vp(&body.sample(cli.grid)?)?;
            let pair = alpha_two_ways(&sol, &body);
            let report = AlphaReport {
                alpha: sol.alpha,
                area_integral: pair.area_integral,
                relative_gap: pair.relative_gap(),
                circle_limit: is_circle_limit(&body),
                circle_residual: circle_residual(&body, cli.grid)?,
            };
            cli.emit(&report, || {
                format!(
                    "alpha: {:.12}\narea integral: {:.12}\nrelative gap: {:.2e}\ncircle limit: {}\n",
                    report.alpha, report.area_integral, report.relative_gap, report.circle_limit
                )
            });
        }
        Command::Render {
            n,
            method,
            svg,
            gridlines,
        } => {
            let reference = Reference::new(&cli.body()?, cli.grid)?;
            let result = reference.construct(*method, *n)?;
            let poly: Vec<Vec2> = result.polygon.vertices().iter().map(|v| v.to_vec2()).collect();
            // P scaled to the polygon's area, anchored at the same leftmost point.
            let s = (polygon_area(&poly) / reference.limit.area()).sqrt();
            let limit: Vec<Vec2> = reference.limit.boundary.iter().map(|p| p * s).collect();
            let anchor = min_x_normalized(&poly);
            let shift = poly[0] - anchor[0];
            let limit: Vec<Vec2> = min_x_normalized(&limit).into_iter().map(|p| p + shift).collect();
            let path = svg.clone().unwrap_or_else(|| cli.out_path(&format!("polygon_{n}.svg")));
            ensure_parent(&path)?;
            render_svg(
                &[SvgObject::new(poly, "polygon"), SvgObject::new(limit, "limit")],
                &path,
                *gridlines,
            )?;
            cli.emit(&result.report(), || format!("{}wrote {}\n", minimizer_text(&result), path.display()));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numeric() { 3 } else { 2 })
        }
    }
}
