//! Validated run configuration, echoed verbatim into every report.

use std::path::PathBuf;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::DegreeRange;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CfSolve,
    ZolotarevExact,
    ZolotarevAsym,
    Compare,
    Sweep,
    Eta,
    Landau,
    Clenshaw,
    L1check,
}

/// A complex number serialized as `[re, im]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cx(pub f64, pub f64);

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Cx(z.re, z.im)
    }
}

impl From<Cx> for Complex64 {
    fn from(z: Cx) -> Self {
        Complex64::new(z.0, z.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeSpec {
    pub start: usize,
    pub stop: usize,
    pub step: usize,
}

impl From<DegreeRange> for RangeSpec {
    fn from(r: DegreeRange) -> Self {
        Self { start: r.start, stop: r.stop, step: r.step }
    }
}

impl RangeSpec {
    pub fn values(&self) -> Vec<usize> {
        (self.start..=self.stop).step_by(self.step.max(1)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    /// Prescribed coefficients, or functional weights for `eta` and
    /// `l1check`.
    pub taus: Vec<Cx>,
    pub n: Option<usize>,
    pub n_range: Option<RangeSpec>,
    pub l: Option<usize>,
    /// Angle samples in CSV output.
    pub samples: usize,
    /// Random heads drawn by `clenshaw`.
    pub random: usize,
    pub seed: u64,
    pub jobs: usize,
    pub remez_tol: f64,
    pub max_iter: usize,
    pub json: Option<PathBuf>,
    pub csv: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            taus: Vec::new(),
            n: None,
            n_range: None,
            l: None,
            samples: 1024,
            random: 0,
            seed: 0,
            jobs: 1,
            remez_tol: 1e-10,
            max_iter: 60,
            json: None,
            csv: None,
        }
    }

    pub fn coefficients(&self) -> Vec<Complex64> {
        self.taus.iter().map(|&z| z.into()).collect()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        use Command::*;
        let needs_taus = !matches!(self.command, Landau);
        if needs_taus && self.taus.is_empty() {
            return Err(ConfigError::Missing("--taus"));
        }
        let l = self.taus.len().saturating_sub(1);
        let min_n = match self.command {
            L1check => 2 * l + 2,
            _ => l + 2,
        };
        let check = |n: usize| {
            if n < min_n {
                Err(ConfigError::DegreeTooSmall { n, required: min_n })
            } else {
                Ok(())
            }
        };
        match self.command {
            ZolotarevExact | ZolotarevAsym | Compare | Clenshaw | L1check => {
                check(self.n.ok_or(ConfigError::Missing("--n"))?)?;
            }
            Sweep => {
                let r = self.n_range.ok_or(ConfigError::Missing("--n-range"))?;
                if r.step == 0 || r.stop < r.start {
                    return Err(ConfigError::EmptyRange);
                }
                check(r.start)?;
            }
            Landau => {
                self.l.ok_or(ConfigError::Missing("--l"))?;
            }
            CfSolve | Eta => {}
        }
        if matches!(self.command, Clenshaw) && self.taus.iter().any(|z| z.1 != 0.0) {
            return Err(ConfigError::NotReal);
        }
        if self.samples < 2 {
            return Err(ConfigError::TooFewSamples(self.samples));
        }
        if self.jobs == 0 {
            return Err(ConfigError::NoWorkers);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ConfigError {
    #[error("missing required option {0}")]
    Missing(&'static str),
    #[error("degree n = {n} is below the required {required}")]
    DegreeTooSmall { n: usize, required: usize },
    #[error("degree range is empty")]
    EmptyRange,
    #[error("clenshaw takes real coefficients only")]
    NotReal,
    #[error("at least 2 samples are required, got {0}")]
    TooFewSamples(usize),
    #[error("--jobs must be at least 1")]
    NoWorkers,
}
