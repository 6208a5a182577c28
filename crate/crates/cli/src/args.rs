use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fdscheme::scheme::{AdvectionFamily, Sign};
use fdscheme::solver::Profile;
use fdscheme::OffsetSet;

#[derive(Debug, Parser)]
#[command(name = "fdscheme", version, about = "Generate, analyze and run explicit finite-difference schemes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print exact scheme coefficients.
    Coeffs(CoeffsArgs),
    /// Critical Courant number of one scheme.
    Stability(StabilityArgs),
    /// Stable first-order schemes for each sign of a_m.
    Classify(ClassifyArgs),
    /// Audit every first-order scheme against the 1/2^(m-1) bound.
    Audit(AuditArgs),
    /// Stability intervals of the upwind, Lax-Wendroff and Beam-Warming families.
    Families(FamiliesArgs),
    /// Time-step a preset experiment or an explicit problem and write CSV snapshots.
    Run(RunArgs),
    /// Measure the convergence order on a refinement ladder.
    Converge(ConvergeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoeffsFormat {
    Table,
    Dump,
}

/// Stencil choice shared by several commands.
#[derive(Debug, Args)]
pub struct StencilArgs {
    /// Explicit offsets, e.g. -2,-1,0,1
    #[arg(long, value_parser = parse_offsets, allow_hyphen_values = true, conflicts_with = "r")]
    pub offsets: Option<OffsetSet>,
    /// Contiguous stencil {-r, ..., nm - r}
    #[arg(long)]
    pub r: Option<u32>,
    /// Sign of a_m; also picks the default stencil
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
    pub sign: Option<Sign>,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    /// Spatial derivative order
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    /// Time-marching order
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..), required_unless_present = "first_order")]
    pub n: Option<u32>,
    /// Use the binomial first-order closed form (n = 1, requires --r)
    #[arg(long, requires = "r", conflicts_with = "n")]
    pub first_order: bool,
    #[command(flatten)]
    pub stencil: StencilArgs,
    #[arg(long, value_enum, default_value_t = CoeffsFormat::Table)]
    pub format: CoeffsFormat,
}

#[derive(Debug, Args)]
pub struct StabilityArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[command(flatten)]
    pub stencil: StencilArgs,
    /// Bisection tolerance on nu
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    /// Keep only the layers nu^0 ... nu^L
    #[arg(long)]
    pub truncate_layers: Option<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Table)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = TableFormat::Table)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub m_max: u32,
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    /// Allowed excess over the bound
    #[arg(long, default_value_t = 1e-3)]
    pub slack: f64,
    #[arg(long, value_enum, default_value_t = TableFormat::Table)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct FamiliesArgs {
    /// Largest number of downstream points
    #[arg(long, default_value_t = 2)]
    pub s_max: u32,
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = TableFormat::Table)]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    FigAdvection,
    FigBurgers,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Built-in experiment; omit to use --m/--n/--profile/--steps
    #[arg(value_enum)]
    pub preset: Option<Preset>,
    /// Scheme family for the presets (default: upwind for fig-advection,
    /// upwind for odd and Lax-Wendroff for even orders in fig-burgers)
    #[arg(long, value_parser = parse_family)]
    pub family: Option<AdvectionFamily>,
    /// Time-marching orders, e.g. 1,5,9
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<u32>,
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,

    #[arg(long, conflicts_with = "preset", requires_all = ["n", "steps"], value_parser = clap::value_parser!(u32).range(1..))]
    pub m: Option<u32>,
    #[arg(long, conflicts_with = "preset", requires = "m", value_parser = clap::value_parser!(u32).range(1..))]
    pub n: Option<u32>,
    #[arg(long, conflicts_with = "preset", requires = "m")]
    pub steps: Option<usize>,
    #[arg(long, conflicts_with = "preset", value_parser = parse_profile, default_value = "gaussian")]
    pub profile: Profile,
    #[command(flatten)]
    pub stencil: StencilArgs,
    /// Grid spacing on the box [-5, 5)
    #[arg(long, conflicts_with = "preset", default_value_t = 0.1)]
    pub dx: f64,
    /// Courant number magnitude; the sign comes from --sign
    #[arg(long, conflicts_with = "preset", default_value_t = 0.4)]
    pub nu: f64,
    /// Extra snapshot every K steps (the first and last are always written)
    #[arg(long, conflicts_with = "preset")]
    pub every: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Courant number magnitude
    #[arg(long)]
    pub nu: f64,
    #[arg(long, value_delimiter = ',', default_values_t = [32usize, 64, 128, 256])]
    pub grids: Vec<usize>,
    #[command(flatten)]
    pub stencil: StencilArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Table)]
    pub format: TableFormat,
}

fn parse_offsets(text: &str) -> Result<OffsetSet, String> {
    let values = text
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|e| format!("bad offset {s:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    OffsetSet::new(values).map_err(|e| e.to_string())
}

fn parse_sign(text: &str) -> Result<Sign, String> {
    match text {
        "+" | "positive" | "pos" => Ok(Sign::Positive),
        "-" | "negative" | "neg" => Ok(Sign::Negative),
        _ => Err(format!("expected + or -, got {text:?}")),
    }
}

fn parse_family(text: &str) -> Result<AdvectionFamily, String> {
    text.parse().map_err(|e: fdscheme::Error| e.to_string())
}

fn parse_profile(text: &str) -> Result<Profile, String> {
    text.parse().map_err(|e: fdscheme::Error| e.to_string())
}
