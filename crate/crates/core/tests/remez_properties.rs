use std::f64::consts::TAU;

use cfz_core::blaschke::{AsymZolotarev, BlaschkeDatum};
use cfz_core::cf_schur::{solve_cf, CoefficientSequence};
use cfz_core::fit::fit_geometric_above;
use cfz_core::numerics::periodic_sup;
use cfz_core::remez::{solve, FixedHead, RemezOptions};
use minilp::{ComparisonOp, OptimizationDirection, Problem};
use num_complex::Complex64;
use proptest::prelude::*;

fn basis(phi: f64, pairs: usize) -> Vec<f64> {
    let mut out = vec![1.0];
    for k in 1..pairs {
        let x = k as f64 * phi;
        out.push(x.cos());
        out.push(x.sin());
    }
    out
}

/// Minimal deviation by a Chebyshev linear program on 512 nodes, refined by
/// adding the worst point of the continuous error until it stalls.
fn lp_deviation(head: &FixedHead) -> f64 {
    let pairs = head.n() - head.l();
    let mut nodes: Vec<f64> = (0..512).map(|k| TAU * k as f64 / 512.0).collect();
    let mut upper = f64::INFINITY;
    for _ in 0..60 {
        let mut lp = Problem::new(OptimizationDirection::Minimize);
        let free: Vec<_> = (0..2 * pairs - 1)
            .map(|_| lp.add_var(0.0, (f64::NEG_INFINITY, f64::INFINITY)))
            .collect();
        let h = lp.add_var(1.0, (0.0, f64::INFINITY));
        for &phi in &nodes {
            let b = basis(phi, pairs);
            let f = head.target(phi);
            let mut plus: Vec<_> = free.iter().zip(&b).map(|(&v, &c)| (v, c)).collect();
            plus.push((h, -1.0));
            lp.add_constraint(plus.as_slice(), ComparisonOp::Le, -f);
            let mut minus: Vec<_> = free.iter().zip(&b).map(|(&v, &c)| (v, -c)).collect();
            minus.push((h, -1.0));
            lp.add_constraint(minus.as_slice(), ComparisonOp::Le, f);
        }
        let sol = lp.solve().unwrap();
        let x: Vec<f64> = free.iter().map(|&v| sol[v]).collect();
        let err = |phi: f64| {
            head.target(phi) + basis(phi, pairs).iter().zip(&x).map(|(a, b)| a * b).sum::<f64>()
        };
        let (worst_phi, worst) = periodic_sup(err, 8192, 4);
        upper = upper.min(worst);
        if worst - sol[h] <= 1e-10 {
            return sol[h];
        }
        nodes.push(worst_phi);
    }
    upper
}

fn complex_head() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=3)
        .prop_map(|v| v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect::<Vec<_>>())
        .prop_filter("leading term", |v| v[0].norm() > 0.05)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn matches_linear_program(taus in complex_head(), extra in 1usize..=4) {
        let l = taus.len() - 1;
        let head = FixedHead::new(l + extra, CoefficientSequence::new(taus).unwrap()).unwrap();
        let r = solve(&head, &RemezOptions::default()).unwrap();
        let lp = lp_deviation(&head);
        prop_assert!((r.deviation - lp).abs() <= 1e-6, "remez {} lp {}", r.deviation, lp);
        prop_assert!(r.alternation_certificate(1e-9));
    }

    #[test]
    fn certificate_on_larger_instances(taus in complex_head(), n in 8usize..=60) {
        let head = FixedHead::new(n, CoefficientSequence::new(taus).unwrap()).unwrap();
        let r = solve(&head, &RemezOptions::default()).unwrap();
        prop_assert!(r.alternation_certificate(1e-9));
        let sup = periodic_sup(|t| r.eval_error(t), 4096.max(32 * n), 8).1;
        prop_assert!((sup - r.deviation).abs() <= 1e-9 * sup);
    }
}

#[test]
fn closed_form_small_degrees() {
    let opts = RemezOptions::default();
    let e = |n: usize, t: &[f64]| solve(&FixedHead::from_real(n, t).unwrap(), &opts).unwrap().deviation;
    // min over c of the sup of 2x² + x − 1 + c on [−1, 1]
    assert!((e(2, &[1.0, 1.0]) - 25.0 / 16.0).abs() < 1e-12);
    assert!((e(3, &[0.5, 0.75]) - 125.0 / 128.0).abs() < 1e-12);
}

/// The head moves with n, so E_n need not decrease: it rises towards |γ|
/// for these data.
#[test]
fn deviation_is_not_monotone_in_n() {
    let opts = RemezOptions::default();
    let es: Vec<f64> = (2..=8)
        .map(|n| solve(&FixedHead::from_real(n, &[1.0, 1.0]).unwrap(), &opts).unwrap().deviation)
        .collect();
    assert!(es.windows(2).all(|w| w[1] > w[0]), "{es:?}");
    let gamma = (1.0 + 5f64.sqrt()) / 2.0;
    assert!(es.iter().all(|&e| e < gamma));
}

#[test]
fn converges_to_gamma_geometrically() {
    let seq = CoefficientSequence::from_real(&[1.0, 1.0]).unwrap();
    let sol = solve_cf(&seq).unwrap();
    let datum = BlaschkeDatum::from_cf(&sol);
    let opts = RemezOptions::default();
    let mut e_series = Vec::new();
    let mut sup_series = Vec::new();
    for n in 6..=41 {
        let r = solve(&FixedHead::new(n, seq.clone()).unwrap(), &opts).unwrap();
        let (sup_gap, e_gap) = r.compare_asymptotic(&AsymZolotarev::new(datum.clone(), n).unwrap());
        e_series.push((n as f64, e_gap));
        sup_series.push((n as f64, sup_gap));
    }
    let fe = fit_geometric_above(&e_series, 1e-9).unwrap();
    let fs = fit_geometric_above(&sup_series, 1e-9).unwrap();
    assert!(fe.ratio < 1.0 && fe.ratio <= datum.r() + 0.1, "{fe:?}");
    assert!(fs.ratio <= datum.r() + 0.1, "{fs:?}");
}

#[test]
fn algebraic_head_matches_chebyshev() {
    // x^n on [−1, 1] deviates least by 2^{1−n}
    for n in 1..=12 {
        let head = FixedHead::from_algebraic(n, &[1.0]).unwrap();
        let r = solve(&head, &RemezOptions::default()).unwrap();
        assert!((r.deviation - 2f64.powi(1 - n as i32)).abs() < 1e-13);
    }
}
