use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitforge::orbits::OrbitParams;
use orbitforge::scalar::parse_scalar_list;
use orbitforge::starforms::InvolutionKind;
use orbitforge::{BlockShape, GaussRational, Variant};

#[derive(Parser, Debug)]
#[command(name = "orbitforge", version, about = "Exact verification of quantized GL(n) coadjoint-orbit algebras")]
pub struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Trace values and Connes coefficients.
    Theta(ThetaArgs),
    /// Conversions between Verma weights and orbit eigenvalues.
    ParamMap(ParamMapArgs),
    /// Roots of the minimal polynomial of E and the central character they encode.
    CentralRoots(OrbitArgs),
    /// Checks that every defining relation kills the highest weight vector.
    Verify(VerifyArgs),
    /// Solves for the minimal polynomial of E on a generalized Verma module.
    MinimalPoly(CharacterArgs),
    /// Reconstructs the central coefficients of the Cayley-Hamilton identity.
    CayleyHamilton(CayleyArgs),
    /// Searches for an isomorphism between two parameter sets.
    IsoCheck(IsoArgs),
    /// Jacobian of the elementary symmetric map against the Vandermonde product.
    Jacobian(JacobianArgs),
    /// Decides whether a finite-dimensional representation exists.
    Classify(OrbitArgs),
    /// Builds the finite-dimensional representation as a Verma quotient.
    BuildRep(BuildRepArgs),
    /// Spectral projectors of a finite-dimensional representation and their traces.
    Connes(OrbitArgs),
    /// Real-form condition and star compatibility.
    RealForm(RealFormArgs),
    /// Runs one criterion of the verification suite, or all of them.
    Sweep(SweepArgs),
    /// Runs every task of a JSON job file.
    RunJob(RunJobArgs),
}

fn shape(text: &str) -> Result<BlockShape, String> {
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|e| format!("bad block size `{s}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    BlockShape::new(parts).map_err(|e| e.to_string())
}

fn scalar(text: &str) -> Result<GaussRational, String> {
    text.parse().map_err(|e: orbitforge::Error| e.to_string())
}

/// A comma-separated scalar list.
#[derive(Clone, Debug)]
pub struct Scalars(pub Vec<GaussRational>);

fn scalars(text: &str) -> Result<Scalars, String> {
    parse_scalar_list(text).map(Scalars).map_err(|e| e.to_string())
}

fn ell_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("bad index `{s}`: {e}"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => (parse(text)?, parse(text)?),
    };
    if a > b {
        return Err(format!("empty range {text}"));
    }
    Ok(a..=b)
}

fn kind(text: &str) -> Result<InvolutionKind, String> {
    text.parse().map_err(|e: orbitforge::Error| e.to_string())
}

#[derive(Args, Debug, Clone)]
pub struct OrbitArgs {
    /// Block sizes, e.g. `2,1`.
    #[arg(long, visible_alias = "m", value_parser = shape)]
    pub blocks: BlockShape,
    /// One eigenvalue per block.
    #[arg(long, value_parser = scalars, allow_hyphen_values = true)]
    pub mu: Scalars,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub t: GaussRational,
    /// Use the opposite variant.
    #[arg(long)]
    pub opposite: bool,
}

impl OrbitArgs {
    pub fn params(&self) -> orbitforge::Result<OrbitParams> {
        let variant = if self.opposite { Variant::Opposite } else { Variant::Standard };
        OrbitParams::new(self.blocks.clone(), self.mu.0.clone(), self.t.clone(), variant)
    }
}

#[derive(Args, Debug, Clone)]
pub struct CharacterArgs {
    #[arg(long, visible_alias = "m", value_parser = shape)]
    pub blocks: BlockShape,
    /// One weight per block.
    #[arg(long, value_parser = scalars, allow_hyphen_values = true)]
    pub lambda: Scalars,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub t: GaussRational,
}

#[derive(Args, Debug)]
pub struct ThetaArgs {
    #[arg(long, visible_alias = "blocks", value_parser = shape)]
    pub m: BlockShape,
    #[arg(long, value_parser = scalars, allow_hyphen_values = true)]
    pub mu: Scalars,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub t: GaussRational,
    /// Trace indices, `a..b` inclusive or a single value.
    #[arg(long, value_parser = ell_range, default_value = "1..3")]
    pub ell: RangeInclusive<usize>,
    /// Deformation parameter `ω = 1 − q⁻²`; omitted means the classical values.
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub omega: Option<GaussRational>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    LambdaToMu,
    LambdaToNu,
    MuToNu,
    MuToLambda,
}

#[derive(Args, Debug)]
pub struct ParamMapArgs {
    #[arg(long, value_enum)]
    pub direction: Direction,
    #[arg(long, visible_alias = "m", value_parser = shape)]
    pub blocks: BlockShape,
    #[arg(long, value_parser = scalars, allow_hyphen_values = true)]
    pub lambda: Option<Scalars>,
    #[arg(long, value_parser = scalars, allow_hyphen_values = true)]
    pub mu: Option<Scalars>,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub t: GaussRational,
    /// The given eigenvalues belong to the opposite variant.
    #[arg(long)]
    pub opposite: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub character: CharacterArgs,
    /// Check the opposite variant.
    #[arg(long)]
    pub opposite: bool,
    /// Eigenvalues to test instead of the ones matched to the weight.
    #[arg(long, value_parser = scalars, allow_hyphen_values = true)]
    pub mu: Option<Scalars>,
    /// Also compare central values of `Tr E^ℓ` for `ℓ ≤ n + 1`.
    #[arg(long)]
    pub traces: bool,
}

#[derive(Args, Debug)]
pub struct CayleyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub t: GaussRational,
    /// Seed for the sampled weights.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct IsoArgs {
    #[arg(long, value_parser = shape)]
    pub blocks_a: BlockShape,
    #[arg(long, value_parser = scalars, allow_hyphen_values = true)]
    pub mu_a: Scalars,
    #[arg(long, value_parser = shape)]
    pub blocks_b: BlockShape,
    #[arg(long, value_parser = scalars, allow_hyphen_values = true)]
    pub mu_b: Scalars,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    pub t: GaussRational,
    #[arg(long)]
    pub opposite: bool,
}

#[derive(Args, Debug)]
pub struct JacobianArgs {
    #[arg(long, value_parser = scalars, allow_hyphen_values = true)]
    pub lambda: Scalars,
}

#[derive(Args, Debug)]
pub struct BuildRepArgs {
    #[command(flatten)]
    pub orbit: OrbitArgs,
    /// Check the defining relations in the representation.
    #[arg(long)]
    pub verify: bool,
    /// Include the generator matrices, row-major.
    #[arg(long)]
    pub dump: bool,
    /// Largest dimension to construct.
    #[arg(long, default_value_t = orbitforge::reps::DEFAULT_DIM_CAP)]
    pub dim_cap: u64,
}

#[derive(Args, Debug)]
pub struct RealFormArgs {
    /// `gl-real`, `u:r,s` or `u-star`.
    #[arg(long, value_parser = kind)]
    pub kind: InvolutionKind,
    #[command(flatten)]
    pub orbit: OrbitArgs,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Criterion number 1..=9; all of them when omitted.
    #[arg(long)]
    pub criterion: Option<u8>,
    #[arg(long, default_value_t = orbitforge::suite::SuiteConfig::default().seed)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct RunJobArgs {
    pub path: PathBuf,
}
