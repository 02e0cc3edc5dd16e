//! Command-line front end for `rankcode`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 enumeration budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rankcode::fqlinalg::{Budget, DEFAULT_BUDGET};

pub mod claims;
mod commands;
mod corpus;
mod render;
pub mod search;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] rankcode::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: malformed code file: {source}")]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(rankcode::Error::BudgetExceeded { .. }) => 3,
            CliError::Core(rankcode::Error::Consistency(_)) | CliError::Verification(_) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "rankcode",
    version,
    about = "Construct and analyze rank-metric codes"
)]
pub struct Cli {
    /// Cap on the number of items any single enumeration may visit.
    #[arg(
        long,
        global = true,
        env = "RANKCODE_BUDGET",
        default_value_t = DEFAULT_BUDGET,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and write it as a code file.
    #[command(subcommand)]
    Construct(Construct),
    /// Distributions, classification, generalized weights and identity checks.
    Analyze(AnalyzeArgs),
    /// Write the dual of a code.
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in suite of worked examples and theorem checks.
    VerifyPaper(VerifyArgs),
    /// Look for dually AMRD codes with given parameters.
    Search(search::SearchArgs),
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Gabidulin code generated by the first k Frobenius powers of
    /// (1, a, ..., a^(n-1)).
    Gabidulin {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random matrix code (--t) or vector code over F_{q^m} (--k).
    Random {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, conflicts_with = "k", required_unless_present = "k")]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parity extension of a vector code.
    Extend {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One of the fixed codes shipped with the library.
    Builtin {
        #[arg(value_enum)]
        name: commands::Builtin,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Checks {
    All,
    Basic,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub file: PathBuf,
    /// Also compute generalized weights of the code and its dual.
    #[arg(long)]
    pub weights: bool,
    #[arg(long, value_enum, default_value_t = Checks::All)]
    pub checks: Checks,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run a single claim.
    #[arg(long)]
    pub only: Option<String>,
    /// List claim ids and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Corrupt a built-in distribution, to exercise the failure path.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Writes `content` to `out`, or to stdout.
pub(crate) fn emit(out: Option<&Path>, content: &str) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, content).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = stdout.write_all(content.as_bytes());
            Ok(())
        }
    }
}

pub fn execute(cli: Cli) -> CliResult<()> {
    let budget = Budget(cli.budget);
    match cli.command {
        Command::Construct(c) => commands::construct(c, budget),
        Command::Analyze(a) => commands::analyze(a, budget),
        Command::Dual { file, out } => commands::dual(&file, out.as_deref()),
        Command::VerifyPaper(v) => claims::verify(v, budget),
        Command::Search(s) => search::run(s, budget),
    }
}

/// Parses `args`, runs the command and maps the outcome to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
