//! Command-line surface: enumeration, degree reports, curvature,
//! letter-graph export, curvature bounds, and the verification suite.
//!
//! Exit codes: 0 success, 1 internal/io error, 2 usage error, 3 budget
//! exceeded, 4 verification failure.

mod commands;
mod render;

use bruric_core::{CacheError, CurvatureError, GroupError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "bruric", version, about = "Bruhat orders and their Ricci curvature")]
struct Cli {
    /// Worker threads for per-vertex curvature (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a group; print a summary, element table, or Hasse DOT
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Degree report of the Hasse diagram
    Degrees {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// List every maximum-degree element (text format only)
        #[arg(long)]
        full_argmax: bool,
    },
    /// Bakry-Emery curvature of the Hasse diagram
    Curvature {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Tie tolerance when counting minimizing vertices
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Letter graph of one element of B or D
    Gamma {
        /// Group family: B or D
        #[arg(long)]
        family: String,
        /// Element in window notation, e.g. 4,-3,2,-1
        #[arg(long)]
        element: String,
        /// Double the letters to signed form (family B only)
        #[arg(long)]
        tilde: bool,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree and triangle based curvature bounds, no eigensolves
    Bounds {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the named verification checks
    Verify {
        /// Sample count for the randomized rank-7 degree check
        #[arg(long, default_value_t = 10_000)]
        sample: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Skip the slower exhaustive variants
        #[arg(long)]
        no_deep: bool,
        /// Agreement tolerance against the bisection oracle
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Write the report to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Group family: A, B, D, I2, H3, F4, E6
    #[arg(long)]
    family: String,
    /// Rank; optional for the fixed-rank families
    #[arg(long, default_value_t = 0)]
    rank: u8,
    /// Dihedral parameter for I2(m)
    #[arg(long)]
    m: Option<u32>,
    /// Enumeration cap on element count
    #[arg(long)]
    max_elements: Option<u64>,
    /// Enumeration cap in seconds
    #[arg(long)]
    max_seconds: Option<u64>,
    /// Cache file: loaded if present, written after enumeration otherwise
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Csv,
    Json,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Group(GroupError),
    Cache(CacheError),
    Curvature(CurvatureError),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Group(e) => write!(f, "{e}"),
            CliError::Cache(e) => write!(f, "{e}"),
            CliError::Curvature(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Group(e)
    }
}
impl From<CacheError> for CliError {
    fn from(e: CacheError) -> Self {
        CliError::Cache(e)
    }
}
impl From<CurvatureError> for CliError {
    fn from(e: CurvatureError) -> Self {
        CliError::Curvature(e)
    }
}
impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Group(GroupError::OverflowBudget(_)) => 3,
            CliError::Group(GroupError::BudgetExceeded(_)) => 3,
            CliError::Group(_) => 2,
            CliError::Cache(_) | CliError::Curvature(_) | CliError::Io(_) => 1,
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Enumerate { group, output } => {
            let content = commands::enumerate(&group, output.format)?;
            emit(&output.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Degrees { group, output, full_argmax } => {
            let content = commands::degrees(&group, output.format, full_argmax)?;
            emit(&output.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Curvature { group, output, tol } => {
            let content = commands::curvature(&group, output.format, tol)?;
            emit(&output.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gamma { family, element, tilde, format, out } => {
            let content = commands::gamma(&family, &element, tilde, format)?;
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { group, output } => {
            let content = commands::bounds(&group, output.format)?;
            emit(&output.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { sample, seed, no_deep, tol, out } => {
            let (content, all_passed) = commands::verify(sample, seed, !no_deep, tol);
            emit(&out, &content)?;
            if all_passed {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(4))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // A zero or failed pool build falls back to the default pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
