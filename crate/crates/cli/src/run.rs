//! Executes a validated configuration and builds its report.

use std::f64::consts::TAU;
use std::time::Instant;

use anyhow::{Context, Result};
use cfz_core::blaschke::{AsymZolotarev, BlaschkeDatum};
use cfz_core::cf_schur::{solve_cf, CoefficientSequence};
use cfz_core::fit::{fit_geometric_above, GeometricFit};
use cfz_core::functionals::{
    clenshaw_ratio, eta, l1_min_deviation, landau_constant, landau_extremal, FunctionalWeights,
};
use cfz_core::remez::{solve, FixedHead, MinimaxResult, RemezOptions};
use log::{debug, info};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::{Command, Cx, RunConfig};
use crate::report::*;

/// Gaps at or below this sit at the Remez noise level and are left out of
/// the geometric fits.
pub const FIT_FLOOR: f64 = 1e-9;

/// Runs `cfg` and returns the report with the CSV body, if the command has one.
pub fn run(cfg: &RunConfig) -> Result<(Report, Option<String>)> {
    cfg.validate()?;
    info!("running {:?}", cfg.command);
    let (result, csv) = match cfg.command {
        Command::CfSolve => (cf_solve(cfg)?, None),
        Command::ZolotarevExact => zolotarev_exact(cfg)?,
        Command::ZolotarevAsym => zolotarev_asym(cfg)?,
        Command::Compare => compare(cfg)?,
        Command::Sweep => sweep(cfg)?,
        Command::Eta => (eta_cmd(cfg)?, None),
        Command::Landau => (landau(cfg)?, None),
        Command::Clenshaw => clenshaw(cfg)?,
        Command::L1check => (l1check(cfg)?, None),
    };
    let report = Report {
        schema: SCHEMA_VERSION,
        config: cfg.clone(),
        metadata: Metadata::new(cfg.seed),
        result,
    };
    Ok((report, csv))
}

fn remez_options(cfg: &RunConfig) -> RemezOptions {
    RemezOptions { tol: cfg.remez_tol, max_iter: cfg.max_iter, ..RemezOptions::default() }
}

fn sequence(cfg: &RunConfig) -> Result<CoefficientSequence> {
    CoefficientSequence::new(cfg.coefficients()).context("invalid coefficient list")
}

fn weights(cfg: &RunConfig) -> Result<FunctionalWeights> {
    FunctionalWeights::new(cfg.coefficients()).context("invalid functional weights")
}

fn cxs(v: &[num_complex::Complex64]) -> Vec<Cx> {
    v.iter().map(|&z| z.into()).collect()
}

fn angles(samples: usize) -> impl Iterator<Item = f64> {
    (0..samples).map(move |k| TAU * k as f64 / samples as f64)
}

fn exact(cfg: &RunConfig, n: usize) -> Result<MinimaxResult> {
    let head = FixedHead::new(n, sequence(cfg)?).context("invalid degree")?;
    solve(&head, &remez_options(cfg)).with_context(|| format!("Remez failed for n = {n}"))
}

fn asymptotic(cfg: &RunConfig, n: usize) -> Result<AsymZolotarev> {
    let sol = solve_cf(&sequence(cfg)?).context("CF solve failed")?;
    AsymZolotarev::new(BlaschkeDatum::from_cf(&sol), n).context("asymptotic polynomial")
}

fn cf_solve(cfg: &RunConfig) -> Result<Outcome> {
    let sol = solve_cf(&sequence(cfg)?).context("CF solve failed")?;
    Ok(Outcome::CfSolve(CfSolveOut {
        l: sol.l,
        gamma: sol.gamma.into(),
        gamma_abs: sol.gamma.norm(),
        p: cxs(sol.p.coeffs()),
        zero_radius: sol.zero_radius(),
        residual: sol.residual,
        zero_margin: sol.zero_margin,
    }))
}

fn zolotarev_exact(cfg: &RunConfig) -> Result<(Outcome, Option<String>)> {
    let n = cfg.n.context("missing --n")?;
    let r = exact(cfg, n)?;
    let rows = angles(cfg.samples)
        .map(|t| vec![t.to_string(), r.eval_error(t).to_string()])
        .collect::<Vec<_>>();
    let out = ExactOut {
        n,
        l: r.head.l(),
        e_n: r.deviation,
        levelled_error: r.levelled_error,
        iterations: r.iterations,
        certificate: r.alternation_certificate(1e-9),
        reference: r.reference.clone(),
        correction_cos: r.correction.cos_coeffs().to_vec(),
        correction_sin: r.correction.sin_coeffs().to_vec(),
    };
    Ok((Outcome::ZolotarevExact(out), Some(csv(&["phi", "value"], &rows))))
}

fn zolotarev_asym(cfg: &RunConfig) -> Result<(Outcome, Option<String>)> {
    let n = cfg.n.context("missing --n")?;
    let az = asymptotic(cfg, n)?;
    let rows = angles(cfg.samples)
        .map(|t| vec![t.to_string(), az.eval(t).to_string()])
        .collect::<Vec<_>>();
    let gamma = az.datum().gamma();
    let out = AsymOut {
        n,
        l: az.datum().degree(),
        gamma: gamma.into(),
        gamma_abs: gamma.norm(),
        zero_radius: az.datum().r(),
        sup_norm: az.sup_norm(),
    };
    Ok((Outcome::ZolotarevAsym(out), Some(csv(&["phi", "value"], &rows))))
}

fn compare(cfg: &RunConfig) -> Result<(Outcome, Option<String>)> {
    let n = cfg.n.context("missing --n")?;
    let r = exact(cfg, n)?;
    let az = asymptotic(cfg, n)?;
    let (sup_gap, e_gap) = r.compare_asymptotic(&az);
    let rows = angles(cfg.samples)
        .map(|t| vec![t.to_string(), r.eval_error(t).to_string(), az.eval(t).to_string()])
        .collect::<Vec<_>>();
    let out = CompareOut {
        n,
        l: r.head.l(),
        e_n: r.deviation,
        gamma_abs: az.datum().gamma().norm(),
        e_gap,
        sup_gap,
        iterations: r.iterations,
        certificate: r.alternation_certificate(1e-9),
    };
    Ok((Outcome::Compare(out), Some(csv(&["phi", "exact", "asymptotic"], &rows))))
}

fn sweep_row(cfg: &RunConfig, datum: &BlaschkeDatum, n: usize) -> Result<SweepRow> {
    let start = Instant::now();
    let r = exact(cfg, n)?;
    let az = AsymZolotarev::new(datum.clone(), n).context("asymptotic polynomial")?;
    let (sup_gap, e_gap) = r.compare_asymptotic(&az);
    debug!("n = {n}: E_n = {}, e_gap = {e_gap:e}", r.deviation);
    Ok(SweepRow {
        n,
        e_n: r.deviation,
        gamma_abs: datum.gamma().norm(),
        e_gap,
        sup_gap,
        iterations: r.iterations,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

fn fit_out(f: GeometricFit) -> FitOut {
    FitOut {
        ratio: f.ratio,
        intercept: f.intercept,
        residual: f.residual,
        used: f.used,
        dropped: f.dropped,
    }
}

fn sweep(cfg: &RunConfig) -> Result<(Outcome, Option<String>)> {
    let range = cfg.n_range.context("missing --n-range")?;
    let sol = solve_cf(&sequence(cfg)?).context("CF solve failed")?;
    let datum = BlaschkeDatum::from_cf(&sol);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .context("cannot start worker pool")?;
    let rows: Vec<SweepRow> = pool.install(|| {
        range.values().into_par_iter().map(|n| sweep_row(cfg, &datum, n)).collect::<Result<_>>()
    })?;
    let mut notes = Vec::new();
    let mut fit = |name: &str, pick: fn(&SweepRow) -> f64| {
        let series: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, pick(r))).collect();
        match fit_geometric_above(&series, FIT_FLOOR) {
            Ok(f) => Some(fit_out(f)),
            Err(e) => {
                notes.push(format!("{name} fit skipped: {e}"));
                None
            }
        }
    };
    let e_gap_fit = fit("e_gap", |r| r.e_gap);
    let sup_gap_fit = fit("sup_gap", |r| r.sup_gap);
    let table = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.e_n.to_string(),
                r.gamma_abs.to_string(),
                r.e_gap.to_string(),
                r.sup_gap.to_string(),
                r.iterations.to_string(),
            ]
        })
        .collect::<Vec<_>>();
    let body = csv(&["n", "e_n", "gamma_abs", "e_gap", "sup_gap", "iterations"], &table);
    let out = SweepOut {
        l: sol.l,
        zero_radius: sol.zero_radius(),
        rows,
        fit_floor: FIT_FLOOR,
        e_gap_fit,
        sup_gap_fit,
        notes,
    };
    Ok((Outcome::Sweep(out), Some(body)))
}

fn eta_cmd(cfg: &RunConfig) -> Result<Outcome> {
    let w = weights(cfg)?;
    let sol = eta(&w).context("eta evaluation failed")?;
    Ok(Outcome::Eta(EtaOut {
        eta: sol.eta,
        branch: sol.branch.name().to_string(),
        lambdas: sol.lambdas.as_deref().map(cxs),
        extremal_head: cxs(&sol.extremal.taylor(w.l())),
    }))
}

fn landau(cfg: &RunConfig) -> Result<Outcome> {
    let l = cfg.l.context("missing --l")?;
    let datum = landau_extremal(l).context("extremal validation failed")?;
    Ok(Outcome::Landau(LandauOut {
        l,
        value: landau_constant(l),
        extremal_head: cxs(&datum.taylor(l)),
    }))
}

fn clenshaw(cfg: &RunConfig) -> Result<(Outcome, Option<String>)> {
    let n = cfg.n.context("missing --n")?;
    let opts = remez_options(cfg);
    let taus: Vec<f64> = cfg.taus.iter().map(|z| z.0).collect();
    let ratio = clenshaw_ratio(&taus, n, &opts).context("ratio evaluation failed")?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let heads: Vec<Vec<f64>> = (0..cfg.random)
        .map(|_| (0..taus.len()).map(|_| rng.gen_range(-1.0..1.0)).collect())
        .collect();
    let random = heads
        .into_iter()
        .map(|t| {
            let ratio = clenshaw_ratio(&t, n, &opts).context("ratio evaluation failed")?;
            Ok(RandomHead { taus: t, ratio })
        })
        .collect::<Result<Vec<_>>>()?;
    let random_max = random.iter().map(|h| h.ratio).reduce(f64::max);
    let body = (!random.is_empty()).then(|| {
        let mut header = vec!["index".to_string()];
        header.extend((0..taus.len()).map(|j| format!("tau{j}")));
        header.push("ratio".into());
        let rows = random
            .iter()
            .enumerate()
            .map(|(k, h)| {
                let mut row = vec![k.to_string()];
                row.extend(h.taus.iter().map(f64::to_string));
                row.push(h.ratio.to_string());
                row
            })
            .collect::<Vec<_>>();
        csv(&header.iter().map(String::as_str).collect::<Vec<_>>(), &rows)
    });
    let out = ClenshawOut {
        n,
        ratio,
        bound: landau_constant(taus.len() - 1),
        random,
        random_max,
    };
    Ok((Outcome::Clenshaw(out), body))
}

fn l1check(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.n.context("missing --n")?;
    let d = l1_min_deviation(&weights(cfg)?, n).context("L1 deviation failed")?;
    Ok(Outcome::L1check(L1Out {
        n,
        computed: d.computed,
        discrete: d.discrete,
        predicted: d.predicted,
        relative_error: (d.computed - d.predicted).abs() / d.predicted,
    }))
}
