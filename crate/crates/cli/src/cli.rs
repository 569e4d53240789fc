use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::parse::{parse_complex, parse_zero, ZeroSpec};

/// Numerical ranges and radii of compressed shifts of finite Blaschke
/// products.
#[derive(Debug, Parser)]
#[command(name = "numrange", version)]
pub struct Cli {
    /// Write the JSON report here instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Numerical radius of S(φ) by every available method
    Radius(RadiusArgs),
    /// Sample the boundary of W(S(φ)); optional CSV and SVG output
    Boundary(BoundaryArgs),
    /// Inscribed polygon through a unit-circle point and its tangency check
    Poncelet(PonceletArgs),
    /// KMS roots, eigenvalues and the real-part spectrum
    Kms(KmsArgs),
    /// Angle between two model subspaces
    Angles(AnglesArgs),
    /// Randomized certification suites
    Verify(VerifyArgs),
}

/// The symbol φ, either as a zero list or as a single zero with multiplicity.
#[derive(Debug, Clone, Args)]
pub struct OperatorArgs {
    /// Zero `re,im[:m]` of φ (repeatable)
    #[arg(long = "zero", value_parser = parse_zero, allow_hyphen_values = true, conflicts_with = "alpha")]
    pub zeros: Vec<ZeroSpec>,

    /// Single zero `re,im` of multiplicity --n
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "n")]
    pub alpha: Option<Complex64>,

    /// Multiplicity of --alpha
    #[arg(long, requires = "alpha", value_parser = clap::value_parser!(u32).range(1..))]
    pub n: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub operator: OperatorArgs,
    /// Angular grid for the eigenvalue sweep
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(64..))]
    pub grid: u32,
    /// Golden-section tolerance in θ
    #[arg(long, default_value_t = 1e-12)]
    pub refine_tol: f64,
    /// Largest accepted disagreement between methods
    #[arg(long, default_value_t = 1e-9)]
    pub agreement_tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct BoundaryArgs {
    #[command(flatten)]
    pub operator: OperatorArgs,
    /// Number of support-function samples on [0, 2π)
    #[arg(long, default_value_t = 512, value_parser = clap::value_parser!(u32).range(64..))]
    pub grid: u32,
    /// CSV file with columns theta,lambda,x,y
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// SVG plot of the unit circle and boundary
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Overlay the Poncelet polygon through this unit-circle point `re,im`
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub poncelet: Option<Complex64>,
}

#[derive(Debug, Clone, Args)]
pub struct PonceletArgs {
    #[command(flatten)]
    pub operator: OperatorArgs,
    /// Prescribed vertex `re,im` (normalised to the unit circle)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda: Complex64,
    /// Boundary samples for the containment check
    #[arg(long, default_value_t = 1024, value_parser = clap::value_parser!(u32).range(64..))]
    pub grid: u32,
    /// Tangency tolerance for each edge
    #[arg(long, default_value_t = 1e-6)]
    pub tangency_tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct KmsArgs {
    /// Real parameter in [0, 1)
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    /// Matrix size
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
}

#[derive(Debug, Clone, Args)]
pub struct AnglesArgs {
    /// Zero `re,im[:m]` of the first product (repeatable)
    #[arg(long, required = true, value_parser = parse_zero, allow_hyphen_values = true)]
    pub first: Vec<ZeroSpec>,
    /// Zero `re,im[:m]` of the second product (repeatable)
    #[arg(long, required = true, value_parser = parse_zero, allow_hyphen_values = true)]
    pub second: Vec<ZeroSpec>,
    /// Slack allowed in sin θ ≥ F
    #[arg(long, default_value_t = 1e-6)]
    pub f_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Radius,
    Poncelet,
    SchwarzPick,
    Angles,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Trials per suite
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
