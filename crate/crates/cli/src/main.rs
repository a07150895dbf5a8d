use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use muarr::commands::{self, parse_resolution};
use muarr::{CliError, Outcome};

/// Generalized Minkowski arrangements of disks: validation, region decomposition,
/// the total-area bound, grid certification and hexagonal constructions.
///
/// Exit status: 0 success, 1 violation or failed inequality, 2 input error.
#[derive(Debug, Parser)]
#[command(name = "muarr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the pairwise arrangement condition.
    Validate {
        #[arg(long)]
        input: PathBuf,
        /// Report file (default: standard output).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Split the union into outer shell, inner shell and core.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write a drawing of the three regions.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Evaluate the total-area bound and detect equality.
    VerifyBound {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Relative tolerance of the equality flag.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Lipschitz-certified grid check of the shell inequality.
    Certify {
        /// `N` or `NxM` grid points in (rho, mu).
        #[arg(long, value_parser = parse_resolution, default_value = "8691")]
        resolution: (usize, usize),
        /// Worker threads (default: all available).
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Hexagonal arrangement in a window, optionally refined by scaled copies.
    Hex {
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        window_radius: f64,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long, default_value_t = 0)]
        iterations: usize,
        /// Arrangement file to write; the report goes to standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded random arrangement.
    Random {
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        window_radius: f64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Arrangement file to write; the report goes to standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Window densities of the disks inside a centered window.
    Density {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        window_radius: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn emit(outcome: &Outcome, to: Option<&Path>) -> Result<(), CliError> {
    match to {
        Some(path) => std::fs::write(path, &outcome.report).map_err(|e| CliError::io(path, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(outcome.report.as_bytes()).and_then(|()| out.flush()).map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let (outcome, report_to) = match cli.command {
        Command::Validate { input, output } => (commands::validate(&input)?, output),
        Command::Decompose { input, output, svg } => (commands::decompose_file(&input, svg.as_deref())?, output),
        Command::VerifyBound { input, output, tolerance } => (commands::verify_bound(&input, tolerance)?, output),
        Command::Certify { resolution, threads, output } => {
            let threads = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            (commands::certify(resolution, threads)?, output)
        }
        Command::Hex { mu, window_radius, tau, iterations, output } => {
            (commands::hex(mu, window_radius, tau, iterations, output.as_deref())?, None)
        }
        Command::Random { mu, window_radius, count, seed, output } => {
            (commands::random(mu, window_radius, count, seed, output.as_deref())?, None)
        }
        Command::Density { input, window_radius, output } => (commands::density(&input, window_radius)?, output),
    };
    emit(&outcome, report_to.as_deref())?;
    Ok(outcome)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => ExitCode::from(outcome.status.code()),
        Err(e) => {
            eprintln!("muarr: error: {e}");
            ExitCode::from(2)
        }
    }
}
