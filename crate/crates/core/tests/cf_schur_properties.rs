use std::f64::consts::PI;

use cfz_core::blaschke::BlaschkeDatum;
use cfz_core::cf_schur::{
    fejer_monotone_check, hankel_char_poly, schur_determinant, solve_cf, CfError,
    CoefficientSequence,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn real_seq(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, 1..=max_len)
        .prop_filter("not all zero", |v| v.iter().any(|x| x.abs() > 1e-3))
}

fn complex_seq(max_len: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max_len)
        .prop_map(|v| v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect::<Vec<_>>())
        .prop_filter("not all zero", |v| v.iter().any(|x| x.norm() > 1e-3))
}

fn taylor_residual(taus: &[Complex64]) -> Result<f64, CfError> {
    let seq = CoefficientSequence::new(taus.to_vec())?;
    let sol = solve_cf(&seq)?;
    let t = BlaschkeDatum::from_cf(&sol).taylor(seq.degree());
    let worst = t.iter().zip(taus).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    Ok(worst / seq.max_modulus().max(1.0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hankel_determinant_factorizes(
        taus in real_seq(7),
        lambdas in prop::collection::vec(-2.0f64..2.0, 20)
    ) {
        let l = taus.len() - 1;
        let seq = CoefficientSequence::from_real(&taus).unwrap();
        let sign = if (l + 1) % 2 == 0 { 1.0 } else { -1.0 };
        for lambda in lambdas {
            let d = schur_determinant(&seq, l, Complex64::new(lambda, 0.0));
            let prod = sign
                * hankel_char_poly(&seq, l, lambda).unwrap()
                * hankel_char_poly(&seq, l, -lambda).unwrap();
            let scale = d.norm().max(prod.abs()).max(1e-300);
            prop_assert!((d.re - prod).abs() / scale <= 1e-8 && d.im.abs() / scale <= 1e-8);
        }
    }

    #[test]
    fn accepted_solutions_match_real_heads(taus in real_seq(6)) {
        let c: Vec<Complex64> = taus.iter().map(|&t| Complex64::new(t, 0.0)).collect();
        match taylor_residual(&c) {
            Ok(r) => prop_assert!(r <= 1e-8, "residual {r}"),
            Err(e) => prop_assert!(matches!(e, CfError::NoValidatedDegree { .. }), "{e}"),
        }
    }

    #[test]
    fn accepted_solutions_match_complex_heads(taus in complex_seq(6)) {
        match taylor_residual(&taus) {
            Ok(r) => prop_assert!(r <= 1e-8, "residual {r}"),
            Err(e) => prop_assert!(matches!(e, CfError::NoValidatedDegree { .. }), "{e}"),
        }
    }

    #[test]
    fn scaling_covariance(taus in real_seq(5), c in prop_oneof![-3.0f64..-0.2, 0.2f64..3.0]) {
        let seq = CoefficientSequence::from_real(&taus).unwrap();
        let scaled = seq.scaled(Complex64::new(c, 0.0)).unwrap();
        if let (Ok(a), Ok(b)) = (solve_cf(&seq), solve_cf(&scaled)) {
            prop_assert_eq!(a.l, b.l);
            prop_assert!((b.gamma - a.gamma * c).norm() <= 1e-9 * a.gamma.norm().max(1.0));
            for (x, y) in a.p.coeffs().iter().zip(b.p.coeffs()) {
                prop_assert!((x - y).norm() <= 1e-8);
            }
        }
    }

    #[test]
    fn fejer_sequences(increments in prop::collection::vec(0.0f64..1.0, 1..=6), t0 in 0.1f64..1.0) {
        let mut taus = vec![t0];
        for d in increments {
            let last = *taus.last().unwrap();
            taus.push(last + d);
        }
        let seq = CoefficientSequence::from_real(&taus).unwrap();
        prop_assert!(fejer_monotone_check(&seq));
        let sol = solve_cf(&seq).unwrap();
        prop_assert_eq!(sol.l, seq.degree());
        // from the leading coefficient down: nonincreasing
        let p: Vec<f64> = sol.p.coeffs().iter().rev().map(|c| c.re).collect();
        for w in p.windows(2) {
            prop_assert!(w[1] <= w[0] + 1e-10, "p = {p:?}");
        }
        prop_assert!(p.iter().all(|&c| c >= -1e-10), "p = {p:?}");
    }
}

#[test]
fn all_ones_closed_form() {
    for l in 0..=6 {
        let seq = CoefficientSequence::from_real(&vec![1.0; l + 1]).unwrap();
        let g = solve_cf(&seq).unwrap().gamma.norm();
        let want = 1.0 / (2.0 * (PI / (2.0 * (2 * l + 3) as f64)).sin());
        assert!((g - want).abs() < 1e-10, "l = {l}: {g} vs {want}");
    }
}

#[test]
fn golden_ratio_datum() {
    let sol = solve_cf(&CoefficientSequence::from_real(&[1.0, 1.0]).unwrap()).unwrap();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert_eq!(sol.l, 1);
    assert!((sol.gamma.re - phi).abs() < 1e-12);
    assert!((sol.p.coeffs()[0].re - (phi - 1.0)).abs() < 1e-12);
}

#[test]
fn landau_head_datum() {
    let sol = solve_cf(&CoefficientSequence::from_real(&[-0.5, 0.75]).unwrap()).unwrap();
    assert_eq!(sol.l, 1);
    assert!((sol.gamma.norm() - 1.0).abs() < 1e-12);
    assert!((sol.zero_radius() - 0.5).abs() < 1e-12);
}

#[test]
fn rotation_covariance() {
    let taus = vec![Complex64::new(0.3, -0.2), Complex64::new(0.7, 0.1), Complex64::new(-0.4, 0.5)];
    let seq = CoefficientSequence::new(taus).unwrap();
    let rot = Complex64::from_polar(1.0, 0.9);
    let a = solve_cf(&seq).unwrap();
    let b = solve_cf(&seq.scaled(rot).unwrap()).unwrap();
    assert_eq!(a.l, b.l);
    assert!((b.gamma - a.gamma * rot).norm() < 1e-9);
}

#[test]
fn zero_sequence_rejected() {
    assert!(matches!(CoefficientSequence::from_real(&[0.0, 0.0]), Err(CfError::AllZero)));
    assert!(matches!(CoefficientSequence::new(vec![]), Err(CfError::Empty)));
}
