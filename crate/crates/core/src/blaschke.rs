//! Reflected Blaschke products and the asymptotic Zolotarev polynomial.
//!
//! For a monic `p` with zeros in the open disk and a scalar `γ`, the
//! function `φ ↦ Re{conj(γ) zⁿ p*(z)/p(z)}`, `z = e^{iφ}`, carries the
//! leading trigonometric coefficients `conj(τ_j)` of `γ p/p*` at
//! frequencies `n − j`, up to terms of size `O(rⁿ)`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use thiserror::Error;

use crate::cf_schur::CfSolution;
use crate::numerics::{periodic_sup, ComplexPoly, NumericsError};

const MONIC_TOL: f64 = 1e-12;
const ROOT_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum BlaschkeError {
    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(Complex64),
    #[error("zero of modulus {0} is not inside the unit disk")]
    ZeroOutsideDisk(f64),
    #[error("degree n = {n} must exceed l = {l}")]
    DegreeTooSmall { n: usize, l: usize },
    #[error("grid of {nodes} nodes is below the minimum {required}")]
    GridTooCoarse { nodes: usize, required: usize },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// `p* = z^l conj(p(1/conj z))`.
pub fn reciprocal(p: &ComplexPoly) -> ComplexPoly {
    p.reciprocal()
}

/// First `order + 1` Taylor coefficients of `p/p*` at the origin, by
/// recursive long division.
pub fn taylor_ratio(p: &ComplexPoly, order: usize) -> Vec<Complex64> {
    let num = p.coeffs();
    let den = p.reciprocal();
    let den = den.coeffs();
    let mut out: Vec<Complex64> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.get(k).copied().unwrap_or_default();
        for j in 1..=k.min(den.len() - 1) {
            acc -= den[j] * out[k - j];
        }
        out.push(acc / den[0]);
    }
    out
}

/// Scaled Blaschke product `γ p/p*` with its zero radius.
#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeDatum {
    p: ComplexPoly,
    gamma: Complex64,
    r: f64,
}

impl BlaschkeDatum {
    pub fn new(p: ComplexPoly, gamma: Complex64) -> Result<Self, BlaschkeError> {
        if (p.leading() - Complex64::new(1.0, 0.0)).norm() > MONIC_TOL {
            return Err(BlaschkeError::NotMonic(p.leading()));
        }
        let r = if p.degree() == 0 {
            0.0
        } else {
            p.roots(ROOT_TOL)?.iter().map(|z| z.norm()).fold(0.0, f64::max)
        };
        if r >= 1.0 {
            return Err(BlaschkeError::ZeroOutsideDisk(r));
        }
        Ok(Self { p, gamma, r })
    }

    pub fn from_cf(sol: &CfSolution) -> Self {
        Self { p: sol.p.clone(), gamma: sol.gamma, r: sol.zero_radius() }
    }

    pub fn p(&self) -> &ComplexPoly {
        &self.p
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    /// Largest zero modulus of `p`.
    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn degree(&self) -> usize {
        self.p.degree()
    }

    /// `γ p(z)/p*(z)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.gamma * self.p.eval(z) / self.p.reciprocal().eval(z)
    }

    /// Taylor coefficients of `γ p/p*` through `z^order`.
    pub fn taylor(&self, order: usize) -> Vec<Complex64> {
        taylor_ratio(&self.p, order)
            .into_iter()
            .map(|c| c * self.gamma)
            .collect()
    }
}

/// `R_n(φ) + i S_n(φ) = zⁿ p*(z)/p(z)` at `z = e^{iφ}`.
pub fn eval_r_s(datum: &BlaschkeDatum, n: usize, phi: f64) -> (f64, f64) {
    let z = Complex64::from_polar(1.0, phi);
    let w = z.powu(n as u32) * datum.p.reciprocal().eval(z) / datum.p.eval(z);
    (w.re, w.im)
}

/// The asymptotic Zolotarev polynomial of degree `n` for a datum.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymZolotarev {
    datum: BlaschkeDatum,
    reciprocal: ComplexPoly,
    n: usize,
}

impl AsymZolotarev {
    pub fn new(datum: BlaschkeDatum, n: usize) -> Result<Self, BlaschkeError> {
        let l = datum.degree();
        if n <= l {
            return Err(BlaschkeError::DegreeTooSmall { n, l });
        }
        let reciprocal = datum.p.reciprocal();
        Ok(Self { datum, reciprocal, n })
    }

    pub fn datum(&self) -> &BlaschkeDatum {
        &self.datum
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Re{conj(γ) zⁿ p*(z)/p(z)} = |γ|(cos(arg γ) R_n + sin(arg γ) S_n)`.
    pub fn eval(&self, phi: f64) -> f64 {
        let z = Complex64::from_polar(1.0, phi);
        let w = z.powu(self.n as u32) * self.reciprocal.eval(z) / self.datum.p.eval(z);
        (self.datum.gamma.conj() * w).re
    }

    /// Equispaced samples `(φ_i, value)` on `[0, 2π)`; at least
    /// `2(n + l) + 2` nodes are required.
    pub fn sample_grid(&self, nodes: usize) -> Result<Vec<(f64, f64)>, BlaschkeError> {
        let required = self.min_nodes();
        if nodes < required {
            return Err(BlaschkeError::GridTooCoarse { nodes, required });
        }
        Ok((0..nodes)
            .map(|k| {
                let phi = TAU * k as f64 / nodes as f64;
                (phi, self.eval(phi))
            })
            .collect())
    }

    pub fn min_nodes(&self) -> usize {
        2 * (self.n + self.datum.degree()) + 2
    }

    /// Sup norm on the circle: a grid of `max(1024, 16(n + l))` nodes, then
    /// golden-section polish of the three largest peaks.
    pub fn sup_norm(&self) -> f64 {
        let grid = 1024.max(16 * (self.n + self.datum.degree()));
        periodic_sup(|t| self.eval(t), grid, 3).1
    }

    /// Leading coefficients recovered by discrete Fourier analysis on
    /// `2(n + l) + 2` nodes, returned as `τ_j = a_j + i b_j` for the
    /// frequencies `n − j`, `j = 0..=count−1`.
    pub fn extracted_head(&self, count: usize) -> Vec<Complex64> {
        let samples: Vec<f64> = self
            .sample_grid(self.min_nodes())
            .expect("min_nodes grid")
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        (0..count.min(self.n + 1))
            .map(|j| {
                let (a, b) = fourier_coefficient(&samples, self.n - j);
                Complex64::new(a, b)
            })
            .collect()
    }
}

/// Cosine and sine coefficients at frequency `k` of equispaced samples on
/// `[0, 2π)`, by direct summation.
pub fn fourier_coefficient(samples: &[f64], k: usize) -> (f64, f64) {
    let n = samples.len();
    let (mut a, mut b) = (0.0, 0.0);
    for (i, &v) in samples.iter().enumerate() {
        let theta = TAU * ((i * k) % n) as f64 / n as f64;
        a += v * theta.cos();
        b += v * theta.sin();
    }
    let norm = if k == 0 || 2 * k == n { 1.0 } else { 2.0 } / n as f64;
    (a * norm, if k == 0 || 2 * k == n { 0.0 } else { b * norm })
}

/// Smallest value on a `nodes` grid of `d/dφ arg(zⁿ p*(z)/p(z))`, which
/// equals `n + l − 2 Σ_k Re{z/(z − a_k)}` over the zeros `a_k` of `p`.
/// When it is positive, `R_n` and `S_n` each have exactly `2(n − l)` simple
/// zeros and these interlace.
pub fn min_argument_rate(datum: &BlaschkeDatum, n: usize, nodes: usize) -> Result<f64, BlaschkeError> {
    let zeros = if datum.degree() == 0 { Vec::new() } else { datum.p.roots(ROOT_TOL)? };
    let base = (n + datum.degree()) as f64;
    Ok((0..nodes)
        .map(|k| {
            let z = Complex64::from_polar(1.0, TAU * k as f64 / nodes as f64);
            base - 2.0 * zeros.iter().map(|a| (z / (z - a)).re).sum::<f64>()
        })
        .fold(f64::INFINITY, f64::min))
}

/// Sign-change points of a `2π`-periodic function, located on a `nodes`
/// grid and refined by bisection to `1e-12`.
pub fn sign_changes(f: impl Fn(f64) -> f64, nodes: usize) -> Vec<f64> {
    let h = TAU / nodes as f64;
    let vals: Vec<f64> = (0..nodes).map(|k| f(k as f64 * h)).collect();
    let mut out = Vec::new();
    for k in 0..nodes {
        let (v0, v1) = (vals[k], vals[(k + 1) % nodes]);
        if (v0 >= 0.0) == (v1 >= 0.0) {
            continue;
        }
        let (mut a, mut b) = (k as f64 * h, (k + 1) as f64 * h);
        let positive_a = v0 >= 0.0;
        while b - a > 1e-12 {
            let mid = 0.5 * (a + b);
            if (f(mid) >= 0.0) == positive_a {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push((0.5 * (a + b)).rem_euclid(TAU));
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

/// Two sorted point sets on the circle strictly interlace when they have
/// the same size, share no point and alternate in cyclic order.
pub fn strictly_interlace(a: &[f64], b: &[f64]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    let mut merged: Vec<(f64, bool)> = a
        .iter()
        .map(|&x| (x, true))
        .chain(b.iter().map(|&x| (x, false)))
        .collect();
    merged.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let n = merged.len();
    (0..n).all(|i| {
        let (x, ta) = merged[i];
        let (y, tb) = merged[(i + 1) % n];
        ta != tb && (y - x).rem_euclid(TAU) > 0.0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn datum(coeffs: &[f64], gamma: f64) -> BlaschkeDatum {
        BlaschkeDatum::new(ComplexPoly::from_real(coeffs), c(gamma, 0.0)).unwrap()
    }

    #[test]
    fn taylor_of_minus_half() {
        let t = taylor_ratio(&ComplexPoly::from_real(&[-0.5, 1.0]), 3);
        let expect = [-0.5, 0.75, 0.375, 0.1875];
        for (a, b) in t.iter().zip(expect) {
            assert!((a - c(b, 0.0)).norm() < 1e-15);
        }
        let t = taylor_ratio(&ComplexPoly::from_real(&[0.5, 1.0]), 1);
        assert!((t[0] - c(0.5, 0.0)).norm() < 1e-15 && (t[1] - c(0.75, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn taylor_of_constant() {
        let t = taylor_ratio(&ComplexPoly::one(), 4);
        assert_eq!(t[0], c(1.0, 0.0));
        assert!(t[1..].iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn r_s_for_trivial_datum() {
        let d = datum(&[1.0], 1.0);
        for &phi in &[0.0, 0.3, 2.0, 5.5] {
            let (r, s) = eval_r_s(&d, 7, phi);
            assert!((r - (7.0 * phi).cos()).abs() < 1e-13);
            assert!((s - (7.0 * phi).sin()).abs() < 1e-13);
        }
    }

    #[test]
    fn r_s_direct_substitution() {
        let d = datum(&[-0.5, 1.0], 1.0);
        let (r, s) = eval_r_s(&d, 2, 0.0);
        assert!((r - 1.0).abs() < 1e-15 && s.abs() < 1e-15);
    }

    #[test]
    fn grid_of_cosine() {
        let az = AsymZolotarev::new(datum(&[1.0], 1.0), 1).unwrap();
        let g = az.sample_grid(4).unwrap();
        let expect = [1.0, 0.0, -1.0, 0.0];
        for ((phi, v), (k, e)) in g.iter().zip(expect.iter().enumerate()) {
            assert!((phi - k as f64 * PI / 2.0).abs() < 1e-15);
            assert!((v - e).abs() < 1e-15);
        }
        assert!(matches!(
            az.sample_grid(3),
            Err(BlaschkeError::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn sup_of_minus_half_datum() {
        let az = AsymZolotarev::new(datum(&[-0.5, 1.0], 1.0), 8).unwrap();
        let max = az
            .sample_grid(1024)
            .unwrap()
            .iter()
            .map(|(_, v)| v.abs())
            .fold(0.0, f64::max);
        assert!((0.999..=1.0 + 1e-15).contains(&max));
    }

    #[test]
    fn rejects_bad_data() {
        assert!(matches!(
            BlaschkeDatum::new(ComplexPoly::from_real(&[0.5, 2.0]), c(1.0, 0.0)),
            Err(BlaschkeError::NotMonic(_))
        ));
        assert!(matches!(
            BlaschkeDatum::new(ComplexPoly::from_real(&[-1.5, 1.0]), c(1.0, 0.0)),
            Err(BlaschkeError::ZeroOutsideDisk(_))
        ));
        assert!(AsymZolotarev::new(datum(&[0.1, 1.0], 1.0), 1).is_err());
    }

    #[test]
    fn fourier_of_known_signal() {
        let n = 16;
        let s: Vec<f64> = (0..n)
            .map(|k| {
                let t = TAU * k as f64 / n as f64;
                0.5 + 2.0 * (3.0 * t).cos() - 1.5 * (3.0 * t).sin() + 0.25 * (5.0 * t).sin()
            })
            .collect();
        let (a0, _) = fourier_coefficient(&s, 0);
        let (a3, b3) = fourier_coefficient(&s, 3);
        let (a5, b5) = fourier_coefficient(&s, 5);
        assert!((a0 - 0.5).abs() < 1e-14);
        assert!((a3 - 2.0).abs() < 1e-14 && (b3 + 1.5).abs() < 1e-14);
        assert!(a5.abs() < 1e-14 && (b5 - 0.25).abs() < 1e-14);
    }

    #[test]
    fn interlacing_helpers() {
        let zr = sign_changes(|t| (3.0 * t).cos(), 96);
        let zs = sign_changes(|t| (3.0 * t).sin(), 96);
        assert_eq!(zr.len(), 6);
        assert_eq!(zs.len(), 6);
        assert!(strictly_interlace(&zr, &zs));
        assert!(!strictly_interlace(&zr, &zr));
    }
}
