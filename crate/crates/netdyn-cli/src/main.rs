use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use netdyn::graph::{diff, read_snapshot_file};
use netdyn::measures::{CoefficientVector, DistanceMeasure, MeasureRegistry};
use netdyn::synth::{generate_log, SynthSpec};
use netdyn::window::write_event_log;

use netdyn_cli::pipeline::{
    parse_coefficients, run_pipeline, slice_pipeline, write_atomic, CombinationSelection,
    PipelineConfig, PipelineSummary, SliceConfig,
};
use netdyn_cli::report::render_diff_report;

/// Quantify how a timestamped interaction network changes over time.
#[derive(Parser)]
#[command(name = "netdyn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a reproducible synthetic event log
    Synth(SynthArgs),
    /// Slice a log into windows and write measure series per combination
    Run(RunArgs),
    /// Compare two snapshot files and print what changed
    Diff(DiffArgs),
    /// Slice a log into windows and write one snapshot file per window
    Slice(SliceArgs),
}

#[derive(Args)]
struct SynthArgs {
    /// How many nodes send messages
    #[arg(long)]
    nodes: u32,
    /// Days of activity to simulate
    #[arg(long)]
    days: u32,
    /// Pareto tail exponent, strictly between 1.5 and 2.5
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    /// Smallest gap between one sender's messages, in seconds
    #[arg(long, default_value_t = 600)]
    min_gap: u32,
    /// Same seed, same log
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where to write the log
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct RunArgs {
    /// Event log: one `sender,recipient,unix_seconds` row per line
    #[arg(short, long)]
    input: PathBuf,
    /// Window length in days
    #[arg(long)]
    window_days: u32,
    /// Days between window starts; defaults to the window length
    #[arg(long)]
    step_days: Option<u32>,
    /// Coefficient rows to evaluate: `all`, `none`, or indices like `7,31`
    #[arg(long, default_value = "all")]
    combinations: String,
    /// Extra coefficient vector `a,b,c,d,e`; repeat for more than one
    #[arg(long = "coeffs", value_name = "COEFFS")]
    coeffs: Vec<String>,
    /// Directory the tables and charts go to
    #[arg(short, long)]
    out_dir: PathBuf,
    /// Also write a peak-scaled SVG chart per measure and combination
    #[arg(long)]
    svg: bool,
    /// Pin the window grid to this unix second; defaults to midnight of
    /// the first event's day
    #[arg(long, allow_negative_numbers = true)]
    origin: Option<i64>,
    /// Skip malformed log lines instead of stopping on them
    #[arg(long)]
    skip_bad_lines: bool,
}

#[derive(Args)]
struct DiffArgs {
    /// Earlier snapshot file
    source: PathBuf,
    /// Later snapshot file
    target: PathBuf,
    /// Measures to print, comma separated; default is every registered one
    #[arg(long)]
    measures: Option<String>,
    /// Coefficient vector `a,b,c,d,e` for the weighted measures; default
    /// is all ones
    #[arg(long)]
    coeffs: Option<String>,
}

#[derive(Args)]
struct SliceArgs {
    /// Event log: one `sender,recipient,unix_seconds` row per line
    #[arg(short, long)]
    input: PathBuf,
    /// Window length in days
    #[arg(long)]
    window_days: u32,
    /// Days between window starts; defaults to the window length
    #[arg(long)]
    step_days: Option<u32>,
    /// Directory the snapshot files go to
    #[arg(short, long)]
    out_dir: PathBuf,
    /// Pin the window grid to this unix second; defaults to midnight of
    /// the first event's day
    #[arg(long, allow_negative_numbers = true)]
    origin: Option<i64>,
    /// Skip malformed log lines instead of stopping on them
    #[arg(long)]
    skip_bad_lines: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Synth(args) => synth(args),
        Command::Run(args) => run(args),
        Command::Diff(args) => diff_snapshots(args),
        Command::Slice(args) => slice(args),
    }
}

fn synth(args: &SynthArgs) -> Result<()> {
    let spec = SynthSpec::new(args.nodes, args.days, args.alpha, args.min_gap, args.seed)?;
    let events = generate_log(&spec);
    let mut buf = Vec::new();
    write_event_log(&events, &mut buf)?;
    write_atomic(&args.output, &buf)?;
    println!(
        "{} events from {} nodes over {} days -> {}",
        events.len(),
        args.nodes,
        args.days,
        args.output.display()
    );
    Ok(())
}

fn run(args: &RunArgs) -> Result<()> {
    let selection = CombinationSelection::parse(&args.combinations, &args.coeffs)?;
    let config = PipelineConfig {
        input: args.input.clone(),
        out_dir: args.out_dir.clone(),
        window_days: args.window_days,
        step_days: args.step_days.unwrap_or(args.window_days),
        origin: args.origin,
        skip_bad_lines: args.skip_bad_lines,
        selection,
        charts: args.svg,
    };
    let registry = MeasureRegistry::with_builtin();
    let summary = run_pipeline(&config, &registry)?;
    warn_about_skips(&summary);
    println!(
        "{} events, {} windows, {} pairs, {} files -> {}",
        summary.events_parsed,
        summary.window_count,
        summary.pair_count,
        summary.files_written.len(),
        args.out_dir.display()
    );
    Ok(())
}

fn diff_snapshots(args: &DiffArgs) -> Result<()> {
    let source = read_snapshot_file(&args.source)
        .with_context(|| format!("reading {}", args.source.display()))?;
    let target = read_snapshot_file(&args.target)
        .with_context(|| format!("reading {}", args.target.display()))?;
    let tuple = diff(&source, &target);

    let registry = MeasureRegistry::with_builtin();
    let measures: Vec<&dyn DistanceMeasure> = match &args.measures {
        None => registry.iter().collect(),
        Some(names) => names
            .split(',')
            .map(|name| {
                let name = name.trim();
                registry.get(name).ok_or_else(|| {
                    anyhow::anyhow!(
                        "unknown measure `{name}` (available: {})",
                        registry.names().collect::<Vec<_>>().join(", ")
                    )
                })
            })
            .collect::<Result<_>>()?,
    };
    let coefficients = match &args.coeffs {
        Some(text) => parse_coefficients(text)?,
        None => CoefficientVector::ones(),
    };
    print!("{}", render_diff_report(&tuple, &measures, &coefficients));
    Ok(())
}

fn slice(args: &SliceArgs) -> Result<()> {
    let config = SliceConfig {
        input: args.input.clone(),
        out_dir: args.out_dir.clone(),
        window_days: args.window_days,
        step_days: args.step_days.unwrap_or(args.window_days),
        origin: args.origin,
        skip_bad_lines: args.skip_bad_lines,
    };
    let summary = slice_pipeline(&config)?;
    warn_about_skips(&summary);
    println!(
        "{} events, {} windows, {} files -> {}",
        summary.events_parsed,
        summary.window_count,
        summary.files_written.len(),
        args.out_dir.display()
    );
    Ok(())
}

fn warn_about_skips(summary: &PipelineSummary) {
    if summary.bad_lines_skipped > 0 {
        eprintln!("warning: skipped {} malformed line(s)", summary.bad_lines_skipped);
    }
    if summary.self_loops_dropped > 0 {
        eprintln!("warning: dropped {} self-loop event(s)", summary.self_loops_dropped);
    }
    if summary.skipped_before_origin > 0 {
        eprintln!("warning: ignored {} event(s) before the origin", summary.skipped_before_origin);
    }
    if summary.skipped_trailing > 0 {
        eprintln!(
            "warning: ignored {} event(s) after the last full window",
            summary.skipped_trailing
        );
    }
}
