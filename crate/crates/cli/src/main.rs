//! `bott-enum`: compute and interpolate degrees of loci of hypersurfaces
//! singular along a member of a family.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use bott_core::families::Family;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bott-enum", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute degrees at one or more values of d.
    Compute(ComputeArgs),
    /// Fit the degree polynomial through cached (and optionally fresh) values.
    Interpolate(InterpolateArgs),
    /// Count or list the torus-fixed points of a family.
    FixedPoints(FixedPointsArgs),
    /// Check a weight vector against every fixed point of a family.
    Validate(ValidateArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family tag.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Family::TAGS))]
    family: String,
    /// Dimension of the linear subspaces.
    #[arg(long)]
    k: Option<usize>,
    /// Dimension of the ambient projective space for linear subspaces.
    #[arg(long)]
    n: Option<usize>,
    /// Degree of the plane curves.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// A single degree.
    #[arg(long, conflicts_with = "d_range", required_unless_present = "d_range")]
    d: Option<i64>,
    /// An inclusive range of degrees, written A..B.
    #[arg(long)]
    d_range: Option<String>,
    /// Torus weights, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weights: Option<Vec<i64>>,
    /// Number of worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// JSON-lines cache to read from and append to.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct InterpolateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Which a priori degree bound fixes the number of points.
    #[arg(long, value_enum, default_value_t = Bound::Safe)]
    bound: Bound,
    /// First degree used; defaults to the family's smallest supported degree.
    #[arg(long)]
    d_min: Option<i64>,
    /// JSON-lines cache holding computed degrees.
    #[arg(long)]
    cache: PathBuf,
    /// Compute missing degrees and append them to the cache.
    #[arg(long)]
    fill: bool,
    /// Number of worker threads used with --fill.
    #[arg(long)]
    jobs: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct FixedPointsArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Print every ideal with its tangent characters.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Torus weights, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    weights: Vec<i64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Bound {
    Safe,
    Conjectural,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => commands::compute(a),
        Command::Interpolate(a) => commands::interpolate(a),
        Command::FixedPoints(a) => commands::fixed_points(a),
        Command::Validate(a) => commands::validate(a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
