//! `iongate`: transport-yield sweeps, pump feasibility verdicts and reservoir
//! embedding diagnostics for a two-level ion gate driven by thermal
//! operations.
//!
//! Exit codes are a stable contract:
//! 0 success, 1 i/o failure, 2 usage or configuration error,
//! 3 infeasible pump verdict, 4 reservoir truncation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use iongate_core::embedding::{equal_mix_unitary, LadderReservoir};
use iongate_core::majorization::thermomajorizes;
use iongate_core::scenarios::{pump_setup, BatterySpec};
use iongate_core::sweep::{
    embed_csv_string, embedding_row, embedding_rows, fmt_sig, run_sweep, EmbedRow, SweepConfig,
    SweepError,
};
use iongate_core::CoreError;

const EXIT_IO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;
const EXIT_TRUNCATION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "iongate",
    version,
    about = "Thermal-operation transport models for a two-level ion gate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the (q, lambda, betaE) transport grid and write a CSV file.
    Sweep(SweepArgs),
    /// Decide whether a charged battery can push the gate across its gap.
    PumpCheck(PumpCheckArgs),
    /// Measure how well a ladder reservoir reproduces the balanced mixer.
    Embed(EmbedArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// JSON config file; the built-in default grid is used when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output CSV path, overriding the config's output_path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PumpCheckArgs {
    /// Dimensionless gate gap (beta E).
    #[arg(long)]
    e: f64,
    /// Dimensionless battery gap (beta w).
    #[arg(long)]
    w: f64,
}

#[derive(Args)]
struct EmbedArgs {
    /// Dimensionless gate gap; fixes the ladder spacing. The reported
    /// distances depend only on the window geometry.
    #[arg(long)]
    e: f64,
    /// Comma-separated superposition lengths, one CSV row each.
    #[arg(long, value_delimiter = ',', required = true)]
    levels: Vec<usize>,
    /// Embed the identity instead of the balanced mixer.
    #[arg(long)]
    identity: bool,
    /// Total ladder size; defaults to 4x the superposition length per row.
    #[arg(long)]
    num_levels: Option<usize>,
    /// Superposition start level; defaults to centering the window.
    #[arg(long)]
    offset: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Sweep(args) => cmd_sweep(&args),
        Command::PumpCheck(args) => cmd_pump_check(&args),
        Command::Embed(args) => cmd_embed(&args),
    };
    ExitCode::from(code)
}

fn report_sweep_error(err: &SweepError) -> u8 {
    eprintln!("error: {err}");
    match err {
        SweepError::Io(_) => EXIT_IO,
        SweepError::Config(_) => EXIT_USAGE,
        SweepError::Core(CoreError::Truncation { .. }) => EXIT_TRUNCATION,
        SweepError::Core(_) => EXIT_USAGE,
    }
}

fn report_core_error(err: &CoreError) -> u8 {
    eprintln!("error: {err}");
    match err {
        CoreError::Truncation { .. } => EXIT_TRUNCATION,
        _ => EXIT_USAGE,
    }
}

fn cmd_sweep(args: &SweepArgs) -> u8 {
    let mut cfg = match &args.config {
        Some(path) => match SweepConfig::from_json_file(path) {
            Ok(cfg) => cfg,
            Err(err) => return report_sweep_error(&err),
        },
        None => SweepConfig::default(),
    };
    if let Some(out) = &args.out {
        cfg.output_path = out.clone();
    }
    match run_sweep(&cfg) {
        Ok(path) => {
            println!("wrote {}", path.display());
            0
        }
        Err(err) => report_sweep_error(&err),
    }
}

fn require_gap(name: &str, value: f64) -> Result<(), u8> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        eprintln!("error: --{name} must be a finite nonnegative number, got {value}");
        Err(EXIT_USAGE)
    }
}

fn format_vertices(points: &[(f64, f64)]) -> String {
    points
        .iter()
        .map(|(x, y)| format!("({}, {})", fmt_sig(*x), fmt_sig(*y)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_pump_check(args: &PumpCheckArgs) -> u8 {
    if let Err(code) = require_gap("e", args.e).and_then(|()| require_gap("w", args.w)) {
        return code;
    }
    let battery = match BatterySpec::new(args.w) {
        Ok(b) => b,
        Err(err) => return report_core_error(&err),
    };
    let setup = match pump_setup(args.e, &battery) {
        Ok(s) => s,
        Err(err) => return report_core_error(&err),
    };
    let (initial_curve, target_curve) = match setup.curves() {
        Ok(pair) => pair,
        Err(err) => return report_core_error(&err),
    };
    let feasible = match thermomajorizes(&setup.initial, &setup.target, &setup.context) {
        Ok(f) => f,
        Err(err) => return report_core_error(&err),
    };
    println!("initial curve: {}", format_vertices(initial_curve.points()));
    println!("target curve:  {}", format_vertices(target_curve.points()));
    if feasible {
        println!("FEASIBLE");
        0
    } else {
        println!("INFEASIBLE");
        EXIT_INFEASIBLE
    }
}

fn cmd_embed(args: &EmbedArgs) -> u8 {
    if let Err(code) = require_gap("e", args.e) {
        return code;
    }
    if args.levels.contains(&0) {
        eprintln!("error: --levels entries must be positive");
        return EXIT_USAGE;
    }
    let u = if args.identity {
        iongate_core::nalgebra::Matrix2::identity()
    } else {
        equal_mix_unitary()
    };
    let custom_geometry = args.num_levels.is_some() || args.offset.is_some();
    let rows: Vec<EmbedRow> = if custom_geometry {
        let mut rows = Vec::with_capacity(args.levels.len());
        for &l in &args.levels {
            let n = args.num_levels.unwrap_or(4 * l);
            let offset = args.offset.unwrap_or_else(|| n.saturating_sub(l) / 2);
            let reservoir = match LadderReservoir::new(n, l, offset) {
                Ok(r) => r,
                Err(err) => return report_core_error(&err),
            };
            match embedding_row(&u, &reservoir) {
                Ok(row) => rows.push(row),
                Err(err) => return report_core_error(&err),
            }
        }
        rows
    } else {
        match embedding_rows(&u, &args.levels) {
            Ok(rows) => rows,
            Err(err) => return report_core_error(&err),
        }
    };
    print!("{}", embed_csv_string(&rows));
    0
}
