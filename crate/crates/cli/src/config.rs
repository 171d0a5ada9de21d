//! Command-line arguments and their validated form.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{CliError, Result};
use crate::report::OutputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "casimir",
    version,
    about = "Casimir energy of compact hyperbolic orbifolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full breakdown and certified lower bound.
    Energy(EnergyArgs),
    /// Elliptic term of a signature.
    Elliptic(EllipticArgs),
    /// Identity term and its interval.
    Identity(IdentityArgs),
    /// Hyperbolic term of a length spectrum.
    Hyperbolic(HyperbolicArgs),
    /// Print a length spectrum.
    Spectrum(SpectrumArgs),
    /// Tail bounds B1, B2, B3.
    Tail(TailArgs),
    /// The (2,3,7) lower-bound pipeline with both tail totals.
    #[command(name = "verify-237")]
    Verify237(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SignatureArgs {
    /// Triangle signature `p,q,r`.
    #[arg(long, value_parser = parse_triple, conflicts_with_all = ["cones", "volume"])]
    pub triangle: Option<(u32, u32, u32)>,
    /// Cone orders, comma separated (used with --volume).
    #[arg(long, value_delimiter = ',', requires = "volume")]
    pub cones: Option<Vec<u32>>,
    /// Hyperbolic area; without --cones the surface has no cone points.
    #[arg(long)]
    pub volume: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableSpectrum {
    Table,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct SourceArgs {
    /// Built-in reference table of short (2,3,7) geodesics (the default).
    #[arg(long, value_enum)]
    pub spectrum: Option<TableSpectrum>,
    /// Enumerate (2,3,7) words with at most this many letters.
    #[arg(long, value_name = "MAX_LETTERS")]
    pub enumerate: Option<usize>,
    /// Read `length,multiplicity` records from a file.
    #[arg(long, value_name = "PATH")]
    pub spectrum_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NumericArgs {
    /// Outer terms of the identity and elliptic series.
    #[arg(long, default_value_t = 60)]
    pub terms: usize,
    /// Tail target for each geodesic's sum over powers.
    #[arg(long, default_value_t = 1e-15)]
    pub n_tail_tol: f64,
    /// First index covered by the tail bounds.
    #[arg(long, default_value_t = 51)]
    pub tail_j_lo: u64,
    /// Last index summed explicitly in B1.
    #[arg(long, default_value_t = 10_000_000)]
    pub tail_j_hi: u64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct EnergyArgs {
    #[command(flatten)]
    pub signature: SignatureArgs,
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub numeric: NumericArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EllipticArgs {
    #[command(flatten)]
    pub signature: SignatureArgs,
    #[arg(long, default_value_t = 60)]
    pub terms: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[command(flatten)]
    pub signature: SignatureArgs,
    #[arg(long, default_value_t = 60)]
    pub terms: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct HyperbolicArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = 1e-15)]
    pub n_tail_tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TailArgs {
    #[arg(long, default_value_t = 51)]
    pub j_lo: u64,
    #[arg(long, default_value_t = 10_000_000)]
    pub j_hi: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_triple(s: &str) -> std::result::Result<(u32, u32, u32), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected `p,q,r`, found `{s}`"));
    }
    let n = |x: &str| {
        x.parse::<u32>()
            .map_err(|_| format!("`{x}` is not a positive integer"))
    };
    Ok((n(parts[0])?, n(parts[1])?, n(parts[2])?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Energy,
    Elliptic,
    Identity,
    Hyperbolic,
    Spectrum,
    Tail,
    Verify237,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SignatureSpec {
    Triangle(u32, u32, u32),
    Cones { orders: Vec<u32>, volume: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumSource {
    Table,
    Enumerate(usize),
    File(PathBuf),
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub signature: Option<SignatureSpec>,
    pub spectrum_source: SpectrumSource,
    pub terms: usize,
    pub n_tail_tol: f64,
    pub tail_j_lo: u64,
    pub tail_j_hi: u64,
    pub output: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: CommandKind::Energy,
            signature: None,
            spectrum_source: SpectrumSource::Table,
            terms: 60,
            n_tail_tol: 1e-15,
            tail_j_lo: 51,
            tail_j_hi: 10_000_000,
            output: OutputFormat::Text,
        }
    }
}

fn signature(a: SignatureArgs) -> Option<SignatureSpec> {
    match (a.triangle, a.cones, a.volume) {
        (Some((p, q, r)), _, _) => Some(SignatureSpec::Triangle(p, q, r)),
        (None, cones, Some(volume)) => Some(SignatureSpec::Cones {
            orders: cones.unwrap_or_default(),
            volume,
        }),
        _ => None,
    }
}

fn source(a: SourceArgs) -> SpectrumSource {
    match (a.enumerate, a.spectrum_file) {
        (Some(n), _) => SpectrumSource::Enumerate(n),
        (None, Some(p)) => SpectrumSource::File(p),
        _ => SpectrumSource::Table,
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig> {
        let base = RunConfig::default();
        let config = match cli.command {
            Command::Energy(a) => RunConfig {
                command: CommandKind::Energy,
                signature: signature(a.signature),
                spectrum_source: source(a.source),
                terms: a.numeric.terms,
                n_tail_tol: a.numeric.n_tail_tol,
                tail_j_lo: a.numeric.tail_j_lo,
                tail_j_hi: a.numeric.tail_j_hi,
                output: a.output.output,
            },
            Command::Elliptic(a) => RunConfig {
                command: CommandKind::Elliptic,
                signature: signature(a.signature),
                terms: a.terms,
                output: a.output.output,
                ..base
            },
            Command::Identity(a) => RunConfig {
                command: CommandKind::Identity,
                signature: signature(a.signature),
                terms: a.terms,
                output: a.output.output,
                ..base
            },
            Command::Hyperbolic(a) => RunConfig {
                command: CommandKind::Hyperbolic,
                spectrum_source: source(a.source),
                n_tail_tol: a.n_tail_tol,
                output: a.output.output,
                ..base
            },
            Command::Spectrum(a) => RunConfig {
                command: CommandKind::Spectrum,
                spectrum_source: source(a.source),
                output: a.output.output,
                ..base
            },
            Command::Tail(a) => RunConfig {
                command: CommandKind::Tail,
                tail_j_lo: a.j_lo,
                tail_j_hi: a.j_hi,
                output: a.output.output,
                ..base
            },
            Command::Verify237(a) => RunConfig {
                command: CommandKind::Verify237,
                signature: Some(SignatureSpec::Triangle(2, 3, 7)),
                output: a.output.output,
                ..base
            },
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let usage = |m: &str| Err(CliError::Usage(m.to_string()));
        if self.terms == 0 {
            return usage("--terms must be positive");
        }
        if !(self.n_tail_tol > 0.0 && self.n_tail_tol.is_finite()) {
            return usage("--n-tail-tol must be positive");
        }
        if self.tail_j_lo == 0 || self.tail_j_hi == 0 {
            return usage("tail indices must be positive");
        }
        let needs_signature = matches!(
            self.command,
            CommandKind::Energy | CommandKind::Elliptic | CommandKind::Identity
        );
        if needs_signature && self.signature.is_none() {
            return usage(
                "a signature is required: --triangle p,q,r or --volume v [--cones m1,m2,...]",
            );
        }
        if let Some(SignatureSpec::Cones { volume, .. }) = &self.signature {
            if !(*volume > 0.0 && volume.is_finite()) {
                return usage("--volume must be positive");
            }
        }
        Ok(())
    }
}
