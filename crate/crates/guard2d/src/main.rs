//! Command-line surface: solve problem documents, run benchmark suites, and
//! render solutions as SVG.
//!
//! Exit codes: 0 verified solution, 1 input or usage error, 2 solver budget
//! exhausted.

use clap::{Parser, Subcommand};
use guard2d::bench::{self, BenchParams};
use guard2d::error::Error;
use guard2d::ilp::{self, IlpOptions};
use guard2d::instances::{load_deployment, load_problem, save_deployment, Problem};
use guard2d::sampling::{sample_perimeter, sample_region, SampleKind};
use guard2d::{svg, Deployment, Method, SampleSet};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "guard2d",
    about = "Deploy k circular-range sensors to guard polygon perimeters or regions with minimal radius"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem document and write the solution document.
    Solve {
        /// Path to the problem document (JSON).
        problem: PathBuf,
        /// Solver: cont (perimeter only), gonzalez, or ilp.
        #[arg(long)]
        method: Method,
        /// Override the document's sensor count.
        #[arg(long)]
        k: Option<usize>,
        /// Override the document's sampling granularity.
        #[arg(long)]
        epsilon: Option<f64>,
        /// Candidate-grid cell side for the ilp method (defaults to epsilon).
        #[arg(long)]
        grid_side: Option<f64>,
        /// RNG seed for the randomized subroutines.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Branch-and-bound node budget for the ilp method.
        #[arg(long, default_value_t = ilp::DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Snap binary-search probes to candidate-sample distances (ilp).
        #[arg(long)]
        snap_radii: bool,
        /// Disable the farthest-first warm start for region guarding (ilp).
        #[arg(long)]
        no_warm_start: bool,
        /// Write the solution document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a benchmark suite and emit CSV.
    Bench {
        /// Suite: cont, ilp-perimeter, ilp-region, or gain.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use the original large benchmark cells (runs much longer).
        #[arg(long)]
        full: bool,
        /// Instances per cell.
        #[arg(long)]
        instances: Option<usize>,
        /// Vertices per random polygon.
        #[arg(long)]
        n_vertices: Option<usize>,
        /// Comma-separated sample counts for the cont suite.
        #[arg(long)]
        n_list: Option<String>,
        /// Comma-separated sensor counts.
        #[arg(long)]
        k_list: Option<String>,
        /// Comma-separated candidate grid sizes.
        #[arg(long)]
        grid_list: Option<String>,
        /// Perimeter sample count for the cover-model suites.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = ilp::DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a problem plus its solution as an SVG figure.
    Render {
        problem: PathBuf,
        solution: PathBuf,
        out: PathBuf,
        /// Also draw the sample points.
        #[arg(long)]
        samples: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through the error path too.
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e.downcast_ref::<Error>() {
                Some(Error::BudgetExhausted) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn run(cli: Cli) -> Result<(), AnyError> {
    match cli.command {
        Command::Solve {
            problem,
            method,
            k,
            epsilon,
            grid_side,
            seed,
            node_budget,
            snap_radii,
            no_warm_start,
            out,
        } => {
            let text = std::fs::read_to_string(&problem)
                .map_err(|e| format!("cannot read {}: {e}", problem.display()))?;
            let mut prob = load_problem(&text)?;
            if let Some(k) = k {
                prob.k = k;
            }
            if let Some(eps) = epsilon {
                prob.epsilon = eps;
            }
            let opts = IlpOptions {
                grid_side,
                node_budget,
                snap_radii,
                warm_start: !no_warm_start,
                seed,
            };
            let (deployment, samples) = solve_problem(&prob, method, seed, &opts)?;
            let report = ilp::verify_cover(&deployment, &samples)?;
            let doc = save_deployment(&deployment, &samples)?;
            match out {
                Some(path) => std::fs::write(&path, doc)?,
                None => println!("{doc}"),
            }
            if !report.ok {
                return Err(format!(
                    "solver returned an unverified cover (worst gap {:.6} at sample {})",
                    report.worst_gap, report.worst_sample
                )
                .into());
            }
            eprintln!(
                "{} sensors at radius {:.6} ({}), worst gap {:.6}",
                deployment.centers.len(),
                deployment.radius,
                deployment.method,
                report.worst_gap
            );
            Ok(())
        }
        Command::Bench {
            suite,
            seed,
            full,
            instances,
            n_vertices,
            n_list,
            k_list,
            grid_list,
            samples,
            node_budget,
            out,
        } => {
            let mut params = if full {
                let mut p = BenchParams::paper_scale(seed);
                // The timing tables average 100 examples for the chain
                // solver and 10 for the grid solvers.
                if suite == "cont" {
                    p.instances = 100;
                }
                p
            } else {
                BenchParams {
                    suite_seed: seed,
                    ..BenchParams::default()
                }
            };
            if let Some(v) = instances {
                params.instances = v;
            }
            if let Some(v) = n_vertices {
                params.n_vertices = v;
            }
            if let Some(list) = n_list {
                params.n_list = parse_list(&list)?;
            }
            if let Some(list) = k_list {
                params.k_list = parse_list(&list)?;
            }
            if let Some(list) = grid_list {
                params.grid_list = parse_list(&list)?;
            }
            if let Some(v) = samples {
                params.cover_samples = v;
            }
            params.node_budget = node_budget;
            let records = match suite.as_str() {
                "cont" => bench::run_cont_suite(&params)?,
                "ilp-perimeter" => bench::run_ilp_perimeter_suite(&params)?,
                "ilp-region" => bench::run_ilp_region_suite(&params)?,
                "gain" => bench::run_gain_suite(&params)?,
                other => {
                    return Err(format!(
                        "unknown suite '{other}' (expected cont, ilp-perimeter, ilp-region, gain)"
                    )
                    .into())
                }
            };
            let csv = bench::to_csv(&records);
            match out {
                Some(path) => std::fs::write(&path, csv)?,
                None => print!("{csv}"),
            }
            Ok(())
        }
        Command::Render {
            problem,
            solution,
            out,
            samples,
        } => {
            let prob_text = std::fs::read_to_string(&problem)
                .map_err(|e| format!("cannot read {}: {e}", problem.display()))?;
            let sol_text = std::fs::read_to_string(&solution)
                .map_err(|e| format!("cannot read {}: {e}", solution.display()))?;
            let prob = load_problem(&prob_text)?;
            let (deployment, _) = load_deployment(&sol_text)?;
            let sample_set = resample(&prob)?;
            let report = ilp::verify_cover(&deployment, &sample_set)?;
            if !report.ok {
                return Err(Error::DocumentMismatch(format!(
                    "solution does not cover the problem's samples (worst gap {:.6} > radius {:.6})",
                    report.worst_gap, deployment.radius
                ))
                .into());
            }
            let svg = svg::render(&prob.polygon, &deployment, samples.then_some(&sample_set));
            std::fs::write(&out, svg)?;
            Ok(())
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>, AnyError> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| e.to_string().into()))
        .collect()
}

fn resample(prob: &Problem) -> Result<SampleSet, Error> {
    Ok(match prob.mode {
        SampleKind::Perimeter => sample_perimeter(&prob.polygon, prob.epsilon)?,
        SampleKind::Region => sample_region(&prob.polygon, prob.epsilon)?.0,
    })
}

fn solve_problem(
    prob: &Problem,
    method: Method,
    seed: u64,
    opts: &IlpOptions,
) -> Result<(Deployment, SampleSet), AnyError> {
    if method == Method::Cont && prob.mode == SampleKind::Region {
        return Err("method 'cont' requires a perimeter-mode problem".into());
    }
    Ok(guard2d::solve_problem(prob, method, seed, opts)?)
}
