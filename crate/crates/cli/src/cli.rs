//! Argument definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{Command, RunConfig};
use crate::parse::{parse_complex_list, parse_degree_range, ComplexList, DegreeRange};

const TAUS_HELP: &str = "Comma-separated complex numbers, leading coefficient first. \
Accepted forms: 2, -0.5, 1e-3, 2+3i, 2-3i, 1.5i, i, -i (no spaces inside a number)";

#[derive(Debug, Parser)]
#[command(name = "cfz", version, about = "Trigonometric polynomials with prescribed leading coefficients")]
pub struct Cli {
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Relative levelling tolerance of the Remez exchange.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub remez_tol: f64,
    /// Iteration cap of the Remez exchange.
    #[arg(long, global = true, default_value_t = 60)]
    pub max_iter: usize,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Solve the CF/Schur problem for the prescribed coefficients.
    CfSolve(Opts),
    /// Exact minimal polynomial by the Remez exchange.
    ZolotarevExact(Opts),
    /// Asymptotic polynomial built from the CF solution.
    ZolotarevAsym(Opts),
    /// Exact against asymptotic at one degree.
    Compare(Opts),
    /// Exact against asymptotic over a degree range, with geometric fits.
    Sweep(Opts),
    /// Sharp constant of a linear coefficient functional.
    Eta(Opts),
    /// Landau constant and its extremal head.
    Landau(Opts),
    /// Ratio of the sup norm of the cosine head to the minimal deviation.
    Clenshaw(Opts),
    /// Minimal L1 deviation against its closed form.
    L1check(Opts),
}

#[derive(Debug, Args)]
pub struct Opts {
    #[arg(long, help = TAUS_HELP, allow_hyphen_values = true, value_parser = taus)]
    pub taus: Option<ComplexList>,
    /// Polynomial degree.
    #[arg(long)]
    pub n: Option<usize>,
    /// Inclusive degree range start:stop[:step].
    #[arg(long, value_parser = range)]
    pub n_range: Option<DegreeRange>,
    /// Number of prescribed coefficients minus one.
    #[arg(long)]
    pub l: Option<usize>,
    /// Angle samples in the CSV output.
    #[arg(long, default_value_t = 1024)]
    pub samples: usize,
    /// Random heads to draw.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    /// Seed of the random generator.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Write the CSV table to this file.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
}

fn taus(s: &str) -> Result<ComplexList, String> {
    parse_complex_list(s).map_err(|e| e.to_string())
}

fn range(s: &str) -> Result<DegreeRange, String> {
    parse_degree_range(s).map_err(|e| e.to_string())
}

impl Cli {
    pub fn into_config(self) -> RunConfig {
        let (command, o) = match self.command {
            Sub::CfSolve(o) => (Command::CfSolve, o),
            Sub::ZolotarevExact(o) => (Command::ZolotarevExact, o),
            Sub::ZolotarevAsym(o) => (Command::ZolotarevAsym, o),
            Sub::Compare(o) => (Command::Compare, o),
            Sub::Sweep(o) => (Command::Sweep, o),
            Sub::Eta(o) => (Command::Eta, o),
            Sub::Landau(o) => (Command::Landau, o),
            Sub::Clenshaw(o) => (Command::Clenshaw, o),
            Sub::L1check(o) => (Command::L1check, o),
        };
        RunConfig {
            command,
            taus: o.taus.map(|t| t.0.into_iter().map(Into::into).collect()).unwrap_or_default(),
            n: o.n,
            n_range: o.n_range.map(Into::into),
            l: o.l,
            samples: o.samples,
            random: o.random,
            seed: o.seed,
            jobs: o.jobs,
            remez_tol: self.remez_tol,
            max_iter: self.max_iter,
            json: self.json,
            csv: o.csv,
        }
    }
}
