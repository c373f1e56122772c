//! JSON report schema (version 1) and CSV rendering.

use serde::{Deserialize, Serialize};

use crate::config::{Cx, RunConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub config: RunConfig,
    pub metadata: Metadata,
    pub result: Outcome,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub cfz_version: String,
    pub seed: u64,
}

impl Metadata {
    pub fn new(seed: u64) -> Self {
        Self { cfz_version: env!("CARGO_PKG_VERSION").to_string(), seed }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    CfSolve(CfSolveOut),
    ZolotarevExact(ExactOut),
    ZolotarevAsym(AsymOut),
    Compare(CompareOut),
    Sweep(SweepOut),
    Eta(EtaOut),
    Landau(LandauOut),
    Clenshaw(ClenshawOut),
    L1check(L1Out),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CfSolveOut {
    pub l: usize,
    pub gamma: Cx,
    pub gamma_abs: f64,
    /// Monic `p`, ascending powers.
    pub p: Vec<Cx>,
    pub zero_radius: f64,
    pub residual: f64,
    pub zero_margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactOut {
    pub n: usize,
    pub l: usize,
    pub e_n: f64,
    pub levelled_error: f64,
    pub iterations: usize,
    pub certificate: bool,
    pub reference: Vec<f64>,
    pub correction_cos: Vec<f64>,
    pub correction_sin: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymOut {
    pub n: usize,
    pub l: usize,
    pub gamma: Cx,
    pub gamma_abs: f64,
    pub zero_radius: f64,
    pub sup_norm: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompareOut {
    pub n: usize,
    pub l: usize,
    pub e_n: f64,
    pub gamma_abs: f64,
    pub e_gap: f64,
    pub sup_gap: f64,
    pub iterations: usize,
    pub certificate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub e_n: f64,
    pub gamma_abs: f64,
    pub e_gap: f64,
    pub sup_gap: f64,
    pub iterations: usize,
    /// Seconds; the only nondeterministic field, left out of the CSV.
    pub wall_time: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitOut {
    pub ratio: f64,
    pub intercept: f64,
    pub residual: f64,
    pub used: usize,
    pub dropped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepOut {
    pub l: usize,
    pub zero_radius: f64,
    pub rows: Vec<SweepRow>,
    /// Gaps at or below this are excluded from the fits.
    pub fit_floor: f64,
    pub e_gap_fit: Option<FitOut>,
    pub sup_gap_fit: Option<FitOut>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EtaOut {
    pub eta: f64,
    pub branch: String,
    pub lambdas: Option<Vec<Cx>>,
    /// Taylor coefficients `c₀..c_l` of the extremal function.
    pub extremal_head: Vec<Cx>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LandauOut {
    pub l: usize,
    pub value: f64,
    pub extremal_head: Vec<Cx>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomHead {
    pub taus: Vec<f64>,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClenshawOut {
    pub n: usize,
    pub ratio: f64,
    pub bound: f64,
    pub random: Vec<RandomHead>,
    pub random_max: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct L1Out {
    pub n: usize,
    pub computed: f64,
    pub discrete: f64,
    pub predicted: f64,
    pub relative_error: f64,
}

/// Comma-separated rows with a header line and LF endings. Floats use the
/// shortest representation that parses back to the same value.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
