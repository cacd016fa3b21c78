//! Command-line front end for `hypercut`.
//!
//! All randomness comes from the single `--seed` value. The library splits it
//! per module and per trial, so a command line fully determines its output.

pub mod report;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hypercut::experiment::{colored_sampling_experiment, pass_rate, surplus_scaling_study, write_csv, ScalingRow};
use hypercut::generators::{gen_complete, gen_random_3graph, gen_random_linear_3graph};
use hypercut::rounding::default_trials;
use hypercut::seed::{tags, Seed};
use hypercut::{best_bipartition, brute_force_max_kcut, solve_3cut_auto, solve_kcut, Hypergraph, KCut, SamplePlan};

pub use report::RunReport;

#[derive(Debug, Parser)]
#[command(name = "hypercut", version, about = "Large k-cuts of uniform multi-hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a large k-cut with the spectral sampling solver.
    Solve(SolveArgs),
    /// Find the exact maximum k-cut by exhaustive search (small inputs only).
    Oracle(OracleArgs),
    /// Write a generated hypergraph in the text format.
    Gen(GenArgs),
    /// Run a seeded experiment and emit CSV.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Hypergraph file: header `r n`, then one edge per line with optional multiplicity.
    #[arg(long)]
    pub file: PathBuf,
    /// Number of parts.
    #[arg(long)]
    pub k: usize,
    /// Hyperplane roundings per 2-cut (default 100 * ceil(log2(n + 1))).
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Use the exhaustive oracle instead of the solver.
    #[arg(long)]
    pub oracle: bool,
    /// Write a JSON run report to this path.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Worker threads for sampling rounds.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Vertex-sampling rounds for 3-cuts.
    #[arg(long, default_value_t = 30)]
    pub rounds: usize,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Each triple independently with probability `--p`.
    Random3,
    /// Random linear 3-graph with `--m` edges (no pair in two edges).
    Linear3,
    /// Complete `--r`-graph.
    Complete,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: usize,
    /// Edge probability for `random3`, as a decimal or a fraction like `1/40`.
    #[arg(long, value_parser = parse_probability)]
    pub p: Option<f64>,
    /// Target edge count for `linear3`.
    #[arg(long)]
    pub m: Option<usize>,
    /// Uniformity for `complete`.
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file (standard output if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExperimentKind {
    /// Color-sampling deviation of the pair graph of a random 3-graph.
    Concentration,
    /// Achieved 3-cut surplus of random 3-graphs with edge probability 1/n.
    Scaling,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, value_enum)]
    pub kind: ExperimentKind,
    /// Vertex count of the random 3-graph (concentration).
    #[arg(long, default_value_t = 40)]
    pub n: usize,
    /// Edge probability of the random 3-graph (concentration).
    #[arg(long, default_value = "0.02", value_parser = parse_probability)]
    pub edge_p: f64,
    /// Color-sampling probability (concentration).
    #[arg(long, default_value = "1/3", value_parser = parse_probability)]
    pub p: f64,
    /// Repetitions (default 100 for concentration, 5 per size for scaling).
    #[arg(long)]
    pub reps: Option<usize>,
    /// Vertex counts (scaling).
    #[arg(long, value_delimiter = ',', default_value = "40,80,160")]
    pub sizes: Vec<usize>,
    /// Vertex-sampling rounds per solve (scaling).
    #[arg(long, default_value_t = 30)]
    pub rounds: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// CSV output file (standard output if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `0.25`, `1/3` and similar, requiring a value in `[0, 1]`.
pub fn parse_probability(text: &str) -> Result<f64, String> {
    let value = match text.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|e| format!("bad numerator in {text:?}: {e}"))?;
            let den: f64 = den.trim().parse().map_err(|e| format!("bad denominator in {text:?}: {e}"))?;
            num / den
        }
        None => text.trim().parse().map_err(|e| format!("bad probability {text:?}: {e}"))?,
    };
    if value.is_finite() && (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(format!("probability {text:?} is not in [0, 1]"))
    }
}

/// Failure of a command, carrying its process exit code.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Capacity(String),
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Numeric(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Capacity(m) | CliError::Numeric(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hypercut::Error> for CliError {
    fn from(e: hypercut::Error) -> Self {
        match e {
            hypercut::Error::Capacity(_) => CliError::Capacity(e.to_string()),
            hypercut::Error::NoConvergence { .. } | hypercut::Error::Precondition(_) => {
                CliError::Numeric(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

type CliResult<T> = Result<T, CliError>;

/// Runs a parsed command, writing normal output to `out` and diagnostics to
/// `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Solve(args) => cmd_solve(args, out).map(drop),
        Command::Oracle(args) => cmd_oracle(args, out).map(drop),
        Command::Gen(args) => cmd_gen(args, out, err),
        Command::Experiment(args) => cmd_experiment(args, out, err),
    }
}

fn load(path: &Path) -> CliResult<(Vec<u8>, Hypergraph)> {
    let bytes = fs::read(path).map_err(|e| io_error(path, e))?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let h = Hypergraph::parse(text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((bytes, h))
}

fn write_text(path: Option<&Path>, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_error(p, e)),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Input(format!("stdout: {e}"))),
    }
}

fn finish(report: RunReport, path: Option<&Path>, out: &mut dyn Write) -> CliResult<RunReport> {
    write_text(None, &report.summary(), out)?;
    if let Some(p) = path {
        write_text(Some(p), &report.to_json(), out)?;
    }
    Ok(report)
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Dispatches by `(r, k)`: multigraph 2-cuts go straight to spectral
/// rounding, 3-cuts of 3-graphs to the sampling solver, everything else to
/// the general k-cut solver.
pub fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> CliResult<RunReport> {
    let start = Instant::now();
    let (bytes, h) = load(&args.file)?;
    let (r, k) = (h.uniformity(), args.k);
    let plan = SamplePlan {
        rounds: args.rounds,
        rounding_trials: args.trials,
        seed: args.seed,
        threads: args.threads,
        ..SamplePlan::default()
    };
    let parameters = format!(
        "k={k} trials={} rounds={} threads={} oracle={}",
        args.trials.map_or_else(|| "default".to_string(), |t| t.to_string()),
        args.rounds,
        args.threads,
        args.oracle
    );

    let (route, cut): (&str, KCut) = if args.oracle {
        ("oracle", brute_force_max_kcut(&h, k)?)
    } else if r == 2 && k == 2 {
        let trials = args.trials.unwrap_or_else(|| default_trials(h.vertex_count()));
        if trials == 0 {
            return Err(CliError::Input("trials must be at least 1".into()));
        }
        let split = best_bipartition(&h.adjacency()?, trials, Seed(args.seed).child(tags::ROUNDING).0)?;
        ("best_bipartition", KCut::evaluate(&h, split.assignment(), 2)?)
    } else if r == 3 && k == 3 {
        ("solve_3cut_auto", solve_3cut_auto(&h, &plan)?)
    } else {
        let sol = solve_kcut(&h, k, &plan)?;
        (if sol.fallback { "baseline" } else { "reduction_chain" }, sol.cut)
    };

    let report = RunReport::new("solve", &bytes, args.seed, parameters, route, &h, &cut, elapsed_ms(start));
    finish(report, args.report.as_deref(), out)
}

pub fn cmd_oracle(args: &OracleArgs, out: &mut dyn Write) -> CliResult<RunReport> {
    let start = Instant::now();
    let (bytes, h) = load(&args.file)?;
    let cut = brute_force_max_kcut(&h, args.k)?;
    let report = RunReport::new("oracle", &bytes, 0, format!("k={}", args.k), "oracle", &h, &cut, elapsed_ms(start));
    finish(report, args.report.as_deref(), out)
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let h = match args.kind {
        GenKind::Random3 => {
            let p = args.p.ok_or_else(|| CliError::Input("random3 needs --p".into()))?;
            gen_random_3graph(args.n, p, args.seed)?
        }
        GenKind::Linear3 => {
            let m = args.m.ok_or_else(|| CliError::Input("linear3 needs --m".into()))?;
            let packing = gen_random_linear_3graph(args.n, m, args.seed)?;
            if packing.shortfall {
                let _ = writeln!(err, "warning: packed only {} of {m} edges", packing.graph.edge_count());
            }
            packing.graph
        }
        GenKind::Complete => gen_complete(args.r, args.n)?,
    };
    write_text(args.out.as_deref(), &h.to_text(), out)
}

fn csv_text<T: serde::Serialize>(rows: &[T]) -> CliResult<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

/// Least-squares slope of `ln(surplus)` against `ln(m)` over rows with
/// positive surplus.
pub fn loglog_slope(rows: &[ScalingRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        rows.iter().filter(|r| r.surplus > 0.0 && r.m > 0).map(|r| ((r.m as f64).ln(), r.surplus.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn cmd_experiment(args: &ExperimentArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let summary = match args.kind {
        ExperimentKind::Concentration => {
            let reps = args.reps.unwrap_or(100);
            let h = gen_random_3graph(args.n, args.edge_p, args.seed)?;
            let recs = colored_sampling_experiment(&h.colored_pair_graph()?, args.p, reps, args.seed)?;
            write_text(args.out.as_deref(), &csv_text(&recs)?, out)?;
            let passed = recs.iter().filter(|r| r.pass).count();
            format!("pass_rate {:.4} ({passed}/{}) m={}", pass_rate(&recs), recs.len(), h.edge_count())
        }
        ExperimentKind::Scaling => {
            let reps = args.reps.unwrap_or(5);
            let plan = SamplePlan { rounds: args.rounds, ..SamplePlan::default() };
            let rows = surplus_scaling_study(&args.sizes, reps, args.seed, &plan)?;
            write_text(args.out.as_deref(), &csv_text(&rows)?, out)?;
            let slope = loglog_slope(&rows).map_or_else(|| "n/a".to_string(), |s| format!("{s:.4}"));
            let beats = rows.iter().filter(|r| r.surplus > r.sqrt_m).count();
            format!("loglog_slope {slope} surplus_above_sqrt_m {beats}/{}", rows.len())
        }
    };
    let _ = writeln!(err, "{summary}");
    Ok(())
}
