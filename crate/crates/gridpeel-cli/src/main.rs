//! Experiment runner for convex-layer peeling on integer point sets.
//!
//! Exit codes: 0 success, 2 usage error, 3 capacity error, 4 I/O error.

use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gridpeel_cli::trace_csv::{write_activity_csv, write_layer_summary_csv, write_samples_csv};
use gridpeel_cli::trace_json::write_trace_json;
use gridpeel_cli::trace_svg::write_trace_svg;
use gridpeel_core::analysis::{fit_power_law, FitError, ScalingSample};
use gridpeel_core::directions::{activity_trace, count_grid_lines, primitive_vectors, totient_sum};
use gridpeel_core::generators::{
    make_grid, make_nested_squares, CapacityError, GridSpec, SquaresSpec,
};
use gridpeel_core::geom::PointSet;
use gridpeel_core::peeling::{layer_sizes, peel, PeelingTrace, SourceSpec};

#[derive(Parser)]
#[command(
    name = "gridpeel",
    version,
    about = "Convex-layer peeling experiments on integer point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Peel a point set to exhaustion and report its layers
    Peel(PeelArgs),
    /// Fit a power-law exponent to a peeling quantity across grid sizes
    Fit(FitArgs),
    /// Per-direction grid line counts against the 4*n*mu budget
    Lines(LinesArgs),
    /// Totient sum and primitive-direction density up to mu
    Totient(TotientArgs),
    /// Active-direction instrumentation of a grid peeling run
    Activity(ActivityArgs),
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true)))]
struct PeelArgs {
    /// Peel the n x n integer grid
    #[arg(long, value_name = "N", group = "source",
          value_parser = clap::value_parser!(u32).range(1..))]
    grid: Option<u32>,
    /// Peel the nested-squares construction with K squares
    #[arg(long, value_name = "K", group = "source",
          value_parser = clap::value_parser!(u32).range(1..))]
    squares: Option<u32>,
    /// Write the full trace as JSON
    #[arg(long, value_name = "PATH.json")]
    trace: Option<PathBuf>,
    /// Write a per-layer summary as CSV
    #[arg(long, value_name = "PATH.csv")]
    csv: Option<PathBuf>,
    /// Render the nested layer polygons as SVG
    #[arg(long, value_name = "PATH.svg")]
    svg: Option<PathBuf>,
    /// Count layers only, without retaining their polygons
    #[arg(long, conflicts_with_all = ["trace", "csv", "svg"])]
    count_only: bool,
}

#[derive(Args)]
struct FitArgs {
    /// Grid sizes to peel (at least two distinct values)
    #[arg(long, value_name = "N", num_args = 1.., required = true,
          value_parser = clap::value_parser!(u32).range(2..))]
    grid: Vec<u32>,
    /// Quantity to fit against n
    #[arg(long, value_enum)]
    quantity: Quantity,
    /// Write the samples as CSV
    #[arg(long, value_name = "PATH.csv")]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    /// Number of peeling iterations
    Tau,
    /// Largest layer vertex count
    Maxlayer,
}

impl Quantity {
    fn name(self) -> &'static str {
        match self {
            Quantity::Tau => "tau",
            Quantity::Maxlayer => "maxlayer",
        }
    }

    fn of(self, sizes: &[usize]) -> f64 {
        match self {
            Quantity::Tau => sizes.len() as f64,
            Quantity::Maxlayer => sizes.iter().copied().max().unwrap_or(0) as f64,
        }
    }
}

#[derive(Args)]
struct LinesArgs {
    /// Grid side
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    n: u32,
    /// Largest primitive direction coordinate
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    mu: u32,
}

#[derive(Args)]
struct TotientArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    mu: u32,
}

#[derive(Args)]
struct ActivityArgs {
    /// Grid side
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    grid: u32,
    /// Largest primitive direction coordinate
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    mu: u32,
    /// Write per-iteration active counts as CSV
    #[arg(long, value_name = "PATH.csv")]
    csv: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Capacity(#[from] CapacityError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Peel(args) => run_peel(args),
        Command::Fit(args) => run_fit(args),
        Command::Lines(args) => run_lines(args),
        Command::Totient(args) => run_totient(args),
        Command::Activity(args) => run_activity(args),
    }
}

fn build_source(
    grid: Option<u32>,
    squares: Option<u32>,
) -> Result<(PointSet, SourceSpec), CliError> {
    match (grid, squares) {
        (Some(n), None) => Ok((make_grid(GridSpec { n }), SourceSpec::Grid { n })),
        (None, Some(k)) => Ok((
            make_nested_squares(SquaresSpec { k })?,
            SourceSpec::NestedSquares { k },
        )),
        _ => Err(CliError::Usage(
            "exactly one of --grid/--squares is required".into(),
        )),
    }
}

fn run_peel(args: PeelArgs) -> Result<(), CliError> {
    let (points, source) = build_source(args.grid, args.squares)?;
    if args.count_only {
        let sizes = layer_sizes(&points);
        print_summary(source, points.len(), &sizes);
        return Ok(());
    }
    let trace = peel(&points).with_source(source);
    print_summary(source, points.len(), &trace.vertex_counts());
    if let Some(path) = &args.trace {
        write_trace_json(&trace, path).map_err(io_err(path))?;
    }
    if let Some(path) = &args.csv {
        write_layer_summary_csv(&trace, path).map_err(io_err(path))?;
    }
    if let Some(path) = &args.svg {
        write_trace_svg(&trace, path).map_err(io_err(path))?;
    }
    Ok(())
}

fn print_summary(source: SourceSpec, points: usize, sizes: &[usize]) {
    println!(
        "{source}: points={points} tau={} max_layer={}",
        sizes.len(),
        sizes.iter().copied().max().unwrap_or(0)
    );
}

fn run_fit(args: FitArgs) -> Result<(), CliError> {
    let mut ns = args.grid.clone();
    ns.sort_unstable();
    ns.dedup();
    // Independent sizes peel concurrently; results stay ordered by n.
    let profiles: Vec<(u32, Vec<usize>)> = thread::scope(|scope| {
        let handles: Vec<_> = ns
            .iter()
            .map(|&n| scope.spawn(move || (n, layer_sizes(&make_grid(GridSpec { n })))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("peeling thread panicked"))
            .collect()
    });
    let samples: Vec<ScalingSample> = profiles
        .iter()
        .map(|(n, sizes)| ScalingSample {
            n: *n as u64,
            value: args.quantity.of(sizes),
        })
        .collect();
    for s in &samples {
        println!("n={} {}={}", s.n, args.quantity.name(), s.value);
    }
    let fit = fit_power_law(&samples).map_err(|e: FitError| CliError::Usage(e.to_string()))?;
    println!(
        "fit {} ~ n^p: slope={:.6} intercept={:.6} r2={:.6}",
        args.quantity.name(),
        fit.slope,
        fit.intercept,
        fit.r_squared
    );
    if let Some(path) = &args.csv {
        write_samples_csv(args.quantity.name(), &samples, path).map_err(io_err(path))?;
    }
    Ok(())
}

fn run_lines(args: LinesArgs) -> Result<(), CliError> {
    let budget = 4 * args.n as u64 * args.mu as u64;
    let dirs = primitive_vectors(args.mu);
    let mut max_count = 0;
    for &v in dirs.as_slice() {
        let count = count_grid_lines(v, args.n);
        max_count = max_count.max(count);
        println!("v={v} lines={count}");
    }
    println!(
        "n={} mu={} directions={} budget=4nmu={budget} max_lines={max_count} within_budget={}",
        args.n,
        args.mu,
        dirs.len(),
        max_count <= budget
    );
    Ok(())
}

fn run_totient(args: TotientArgs) -> Result<(), CliError> {
    let sum = totient_sum(args.mu);
    let density = sum as f64 / (args.mu as f64 * args.mu as f64);
    println!("mu={} sum_phi={sum} density={density:.6}", args.mu);
    Ok(())
}

fn run_activity(args: ActivityArgs) -> Result<(), CliError> {
    let n = args.grid;
    let trace: PeelingTrace = peel(&make_grid(GridSpec { n })).with_source(SourceSpec::Grid { n });
    let act = activity_trace(&trace, args.mu);
    println!(
        "grid(n={n}) mu={}: iterations={} alpha={} budget=4nmu={}",
        act.mu(),
        act.iterations().len(),
        act.alpha(),
        act.line_budget()
    );
    if let Some(path) = &args.csv {
        write_activity_csv(&act, path).map_err(io_err(path))?;
    }
    Ok(())
}
