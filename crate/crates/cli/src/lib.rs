//! Command-line front end for the spheroidal ground-state machinery:
//! exact series emission, pointwise evaluation, spectral cross-validation,
//! identity tables, superpotential maxima, and (m, alpha) sweeps.
//!
//! Output contract:
//! - CSV uses '.' as the decimal mark, ',' as the separator, a header
//!   row, and LF line endings; identical invocations produce
//!   byte-identical files.
//! - JSON documents carry exact rationals as "p/q" strings, with decimal
//!   renderings (round-half-even, 17 significant digits) alongside —
//!   never replacing — the exact form.
//!
//! Exit codes: 0 all checks pass, 1 I/O failure, 2 validation failure,
//! 3 usage error, 4 spectral solve did not converge.
//!
//! The environment variable `SUSY_SPHEROIDAL_PRECISION` (a finite
//! multiplier > 0, default 1) widens the spectral solver's convergence
//! tolerance and the agreement floors derived from it.

pub mod commands;
pub mod decimal;

use std::path::PathBuf;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};

/// Report serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "susy-spheroidal",
    version,
    about = "Exact perturbation series and spectral cross-checks for the spheroidal ground state"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit the exact eigenvalue/superpotential series for one azimuthal index.
    Series {
        /// Azimuthal index m >= 0.
        #[arg(long)]
        m: u32,
        /// Highest series order N (1..=64).
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the truncated ground state on a uniform grid in x.
    Eval {
        #[arg(long)]
        m: u32,
        /// Truncation order N (1..=64).
        #[arg(long)]
        order: u32,
        /// Shape parameter alpha.
        #[arg(long)]
        alpha: f64,
        /// Number of uniform subintervals of [-1, 1]; emits grid+1 points.
        #[arg(long, default_value_t = 100)]
        grid: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the truncated series against the spectral solver per alpha.
    Validate {
        #[arg(long)]
        m: u32,
        /// Truncation order N (1..=64).
        #[arg(long)]
        order: u32,
        /// Shape parameter; repeat the flag for a sweep.
        #[arg(long = "alpha", required = true)]
        alphas: Vec<f64>,
        /// Accept |alpha| > 1.
        #[arg(long)]
        force: bool,
        /// Largest basis truncation the spectral solver may reach.
        #[arg(long = "k-cap")]
        k_cap: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every combinatorial identity family for m = 0..=m-max.
    Identities {
        /// Largest azimuthal index (<= 64).
        #[arg(long = "m-max")]
        m_max: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report max|W_n| over the domain for n = 1..=N (observational).
    Maxw {
        #[arg(long)]
        m: u32,
        /// Highest order N (1..=16).
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Series-vs-spectral eigenvalue table over m = 0..=m-max and each alpha.
    Sweep {
        /// Largest azimuthal index (<= 64).
        #[arg(long = "m-max")]
        m_max: u32,
        /// Truncation order N (1..=64).
        #[arg(long)]
        order: u32,
        /// Shape parameter; repeat the flag for a sweep.
        #[arg(long = "alpha", required = true)]
        alphas: Vec<f64>,
        /// Accept |alpha| > 1.
        #[arg(long)]
        force: bool,
        /// Largest basis truncation the spectral solver may reach.
        #[arg(long = "k-cap")]
        k_cap: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Direct access to the spectral solver.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Solve for the ground eigenvalue at one (m, alpha).
    Solve {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        alpha: f64,
        /// Starting basis truncation (doubled until the eigenvalue settles).
        #[arg(long)]
        k: Option<usize>,
        /// Largest basis truncation allowed.
        #[arg(long = "k-cap")]
        k_cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A finished report plus the exit code its checks earned.
pub struct CommandOutput {
    pub content: String,
    pub exit: i32,
}

/// Failure modes that abort a command before it produces a report.
#[derive(Debug)]
pub enum CmdError {
    /// Bad arguments or environment; exit 3.
    Usage(String),
    /// The exact solve failed its internal consistency check; exit 2.
    Internal(String),
    /// The spectral solver did not converge; exit 4.
    Oracle(String),
}

/// Parses the process arguments, runs the selected command, and writes
/// its report to stdout or `--out`. Returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = err.print();
            return code;
        }
    };

    let precision = match precision_from_env() {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 3;
        }
    };

    let (out_path, result) = dispatch(cli.command, precision);
    let output = match result {
        Ok(output) => output,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return 3;
        }
        Err(CmdError::Internal(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
        Err(CmdError::Oracle(msg)) => {
            eprintln!("error: {msg}");
            return 4;
        }
    };

    match out_path {
        Some(path) => {
            if let Err(err) = std::fs::write(&path, output.content) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return 1;
            }
        }
        None => print!("{}", output.content),
    }
    output.exit
}

fn dispatch(command: Command, precision: f64) -> (Option<PathBuf>, Result<CommandOutput, CmdError>) {
    match command {
        Command::Series { m, order, format, out } => (out, commands::series(m, order, format)),
        Command::Eval { m, order, alpha, grid, format, out } => {
            (out, commands::eval(m, order, alpha, grid, format))
        }
        Command::Validate { m, order, alphas, force, k_cap, format, out } => {
            (out, commands::validate(m, order, &alphas, force, k_cap, format, precision))
        }
        Command::Identities { m_max, format, out } => (out, commands::identities(m_max, format)),
        Command::Maxw { m, order, format, out } => (out, commands::maxw(m, order, format)),
        Command::Sweep { m_max, order, alphas, force, k_cap, format, out } => {
            (out, commands::sweep(m_max, order, &alphas, force, k_cap, format, precision))
        }
        Command::Oracle { command: OracleCommand::Solve { m, alpha, k, k_cap, out } } => {
            (out, commands::oracle_solve(m, alpha, k, k_cap, precision))
        }
    }
}

/// Reads `SUSY_SPHEROIDAL_PRECISION`: a finite multiplier > 0 applied to
/// the spectral solver's convergence tolerance (and the agreement floors
/// derived from it). Unset means 1.
fn precision_from_env() -> Result<f64, String> {
    match std::env::var("SUSY_SPHEROIDAL_PRECISION") {
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
            _ => Err(format!(
                "SUSY_SPHEROIDAL_PRECISION must be a finite positive number, got {raw:?}"
            )),
        },
        Err(std::env::VarError::NotPresent) => Ok(1.0),
        Err(err) => Err(format!("SUSY_SPHEROIDAL_PRECISION is not readable: {err}")),
    }
}
