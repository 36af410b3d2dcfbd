//! Command-line front end: argument definitions and command dispatch.
//!
//! [`run`] returns the text for standard output, or a [`CliError`] whose
//! [`CliError::exit_code`] distinguishes usage errors, verification
//! failures and guard violations.

pub mod commands;
pub mod format;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::run;
use format::OutputFormat;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl From<trifam::error::Error> for CliError {
    fn from(e: trifam::error::Error) -> Self {
        match e {
            trifam::error::Error::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "trifam",
    version,
    about = "Pascal-like triangles from fence tilings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows 0..=ROWS of a triangle.
    Triangle(TriangleArgs),
    /// Print row sums, antidiagonal sums or tiling totals.
    Sequence(SequenceArgs),
    /// Count or list tilings of one board by brute force.
    Oracle(OracleArgs),
    /// Count or list subsets of {1..n} with no two elements differing by m.
    Subsets(SubsetsArgs),
    /// Decide the Riordan property from a metatile spec file.
    Detect(DetectArgs),
    /// Run the identity checks.
    Verify(VerifyArgs),
    /// Print a Fibonacci polynomial or a product of their powers.
    Fibpoly(FibpolyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pascal,
    Tiling,
}

impl From<FamilyArg> for trifam::triangle::Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Pascal => trifam::triangle::Family::Pascal,
            FamilyArg::Tiling => trifam::triangle::Family::Tiling,
        }
    }
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    #[arg(long, value_enum, default_value = "pascal")]
    pub family: FamilyArg,
    #[arg(long)]
    pub m: usize,
    /// Last row index.
    #[arg(long, default_value_t = 12)]
    pub rows: usize,
    /// Method name, or `all` to compute with every method and compare.
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
    /// First index for b-file output.
    #[arg(long, default_value_t = 0)]
    pub offset: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SequenceKind {
    #[value(alias = "row_sums")]
    RowSums,
    #[value(alias = "antidiag_sums")]
    AntidiagSums,
    #[value(alias = "total_tilings")]
    TotalTilings,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    #[arg(value_enum)]
    pub kind: SequenceKind,
    #[arg(long, value_enum, default_value = "pascal")]
    pub family: FamilyArg,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Method name, or `all` to compare every applicable method.
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
    #[arg(long, default_value_t = 0)]
    pub offset: i64,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub board_length: usize,
    /// Print each tiling instead of counts.
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct SubsetsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    /// Restrict to subsets of this size.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    /// Path to a metatile spec JSON file.
    #[arg(long)]
    pub spec: std::path::PathBuf,
    /// Truncation order for the derived (p, q).
    #[arg(long, default_value_t = 10)]
    pub truncation: usize,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only this identity.
    #[arg(long)]
    pub identity: Option<String>,
    /// Largest board length or row index.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Range of m as `a..b` (inclusive) or a single value.
    #[arg(long)]
    pub m_range: Option<String>,
    #[arg(long)]
    pub j_max: Option<usize>,
    /// Largest row for the Pascal-rule checks.
    #[arg(long)]
    pub conj_max_n: Option<usize>,
    /// Print the identity names and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct FibpolyArgs {
    /// Print f_n(x).
    #[arg(long, conflicts_with_all = ["j", "m", "r"])]
    pub n: Option<i64>,
    /// With --m and --r, print f_j^(m-r) f_{j+1}^r.
    #[arg(long, requires_all = ["m", "r"])]
    pub j: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}
