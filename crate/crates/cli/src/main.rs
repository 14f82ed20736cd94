//! Command-line front end: scenario ingestion, single-point evaluation,
//! parameter scans, oracle certification runs, and plot-ready data files.
//!
//! Exit codes: 0 success, 2 configuration or validation problems,
//! 3 physics-domain conditions (no discernible signal, purity missing),
//! 4 numerical-accuracy failures, 1 anything else.

mod commands;
mod config;
mod manifest;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use commands::ScanSpec;

#[derive(Debug)]
pub enum CliError {
    /// Schema, unit, or value problems in configuration and flags.
    Config(String),
    /// Errors surfaced by the physics library.
    Invalid(vacbi_core::Error),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::Invalid(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        use vacbi_core::Error as E;
        match self {
            CliError::Config(_) => 2,
            CliError::Invalid(e) => match e {
                E::NonFinite { .. } | E::DimensionMismatch { .. } | E::InvalidParameter { .. } => 2,
                E::PurityRequired
                | E::BackgroundRequired
                | E::BelowPurityFloor { .. }
                | E::ThetaEqualDomain { .. }
                | E::NoDiscernibleWindow { .. }
                | E::CircularProbeRequired { .. } => 3,
                E::Overflow { .. } | E::Accuracy { .. } => 4,
            },
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Parser)]
#[command(
    name = "vacbi",
    version,
    about = "Flipped-polarization signal estimates for head-on XFEL / high-intensity pump collisions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one scenario: totals, overlap factor, divergences, and
    /// (with a polarimeter section) discernible counts.
    Total {
        /// Scenario file (TOML with unit-suffixed quantities).
        #[arg(long)]
        config: PathBuf,
        /// Write a machine-readable JSON summary here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also integrate the unreduced rate and report the deviation.
        #[arg(long)]
        oracle: bool,
        /// Relative tolerance for the oracle integration.
        #[arg(long, default_value_t = 0.01)]
        tol: f64,
    },
    /// Sweep one scalar parameter and tabulate the observables.
    Scan {
        #[arg(long)]
        config: PathBuf,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        /// Dotted parameter path, e.g. offsets.x0 or probe.waist_1.
        #[arg(long)]
        param: String,
        /// Start value with unit, e.g. "0 um".
        #[arg(long)]
        from: String,
        /// End value with unit.
        #[arg(long)]
        to: String,
        /// Number of rows (>= 2).
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Scale::Linear)]
        scale: Scale,
    },
    /// Tabulate the signal and probe angular densities on a theta-phi grid.
    Angular {
        #[arg(long)]
        config: PathBuf,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        /// Polar-angle cutoff, e.g. "80 urad"; defaults to twice the
        /// larger signal divergence.
        #[arg(long = "theta-max")]
        theta_max: Option<String>,
        /// Number of polar grid points.
        #[arg(long, default_value_t = 32)]
        grid: usize,
    },
}

fn run() -> Result<(), CliError> {
    if let Ok(threads) = std::env::var("VACBI_THREADS") {
        let n: usize = threads.parse().map_err(|_| {
            CliError::Config(format!("VACBI_THREADS must be an integer, got `{threads}`"))
        })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
    }
    let command_line = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let cli = Cli::parse();
    match cli.command {
        Command::Total {
            config,
            out,
            oracle,
            tol,
        } => commands::cmd_total(&config, out.as_deref(), oracle, tol, command_line),
        Command::Scan {
            config,
            out,
            param,
            from,
            to,
            steps,
            scale,
        } => commands::cmd_scan(
            &config,
            &out,
            &ScanSpec {
                param,
                from,
                to,
                steps,
                scale,
            },
            command_line,
        ),
        Command::Angular {
            config,
            out,
            theta_max,
            grid,
        } => commands::cmd_angular(&config, &out, theta_max.as_deref(), grid, command_line),
    }
}

fn main() {
    if let Err(e) = run() {
        eprintln!("vacbi: {e}");
        std::process::exit(e.exit_code());
    }
}
