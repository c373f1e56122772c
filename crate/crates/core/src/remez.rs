//! Periodic Remez exchange for trigonometric polynomials with fixed
//! leading coefficients.
//!
//! Given `τ₀..τ_l` and a degree `n`, the target is
//! `f(φ) = Σ_j Re{conj(τ_j) e^{i(n−j)φ}}` and the free part ranges over
//! trigonometric polynomials of degree `n − l − 1`, a Haar space of
//! dimension `2(n − l) − 1` on the circle. The best approximation is
//! certified by `2(n − l)` alternation points.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::blaschke::AsymZolotarev;
use crate::cf_schur::{CfError, CoefficientSequence};
use crate::numerics::{golden_max, periodic_sup, Lu, NumericsError, RealMatrix};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum RemezError {
    #[error("degree n = {n} leaves no free coefficients for l = {l}")]
    NoFreeCoefficients { n: usize, l: usize },
    #[error("cosine and sine arrays must have equal length")]
    ShapeMismatch,
    #[error("exchange did not converge in {iterations} iterations (levelled {levelled:e}, max error {max_error:e})")]
    NotConverged { iterations: usize, levelled: f64, max_error: f64 },
    #[error("reference degenerated at iteration {iteration} (condition estimate {condition:e})")]
    Degenerate { iteration: usize, condition: f64 },
    #[error("only {found} alternating extrema found, need {needed}")]
    LostAlternation { found: usize, needed: usize },
    #[error(transparent)]
    Coefficients(#[from] CfError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// `t(φ) = Σ_k a_k cos kφ + b_k sin kφ`, `k = 0..=degree`; `b₀` is unused.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigPoly {
    a: Vec<f64>,
    b: Vec<f64>,
}

impl TrigPoly {
    pub fn new(a: Vec<f64>, mut b: Vec<f64>) -> Result<Self, RemezError> {
        if a.len() != b.len() || a.is_empty() {
            return Err(RemezError::ShapeMismatch);
        }
        b[0] = 0.0;
        Ok(Self { a, b })
    }

    pub fn zero(degree: usize) -> Self {
        Self { a: vec![0.0; degree + 1], b: vec![0.0; degree + 1] }
    }

    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    pub fn cos_coeffs(&self) -> &[f64] {
        &self.a
    }

    pub fn sin_coeffs(&self) -> &[f64] {
        &self.b
    }

    pub fn max_coeff(&self) -> f64 {
        self.a.iter().chain(&self.b).map(|v| v.abs()).fold(0.0, f64::max)
    }

    pub fn eval(&self, phi: f64) -> f64 {
        let step = Complex64::from_polar(1.0, phi);
        let mut z = Complex64::new(1.0, 0.0);
        let mut acc = 0.0;
        for (a, b) in self.a.iter().zip(&self.b) {
            acc += a * z.re + b * z.im;
            z *= step;
        }
        acc
    }
}

/// Problem data: degree `n` and the prescribed `τ₀..τ_l`. The polynomial
/// carries `conj(τ_j)` at frequency `n − j`, i.e. `a_j cos + b_j sin` for
/// `τ_j = a_j + i b_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedHead {
    n: usize,
    taus: CoefficientSequence,
}

impl FixedHead {
    pub fn new(n: usize, taus: CoefficientSequence) -> Result<Self, RemezError> {
        let l = taus.degree();
        if n < l + 1 {
            return Err(RemezError::NoFreeCoefficients { n, l });
        }
        Ok(Self { n, taus })
    }

    pub fn from_real(n: usize, taus: &[f64]) -> Result<Self, RemezError> {
        Self::new(n, CoefficientSequence::from_real(taus)?)
    }

    /// Maps leading algebraic coefficients `A_j` of `Σ A_j x^{n−j}` on
    /// `[−1, 1]` to the Chebyshev coefficients of `T_{n−j}`, which are the
    /// trigonometric head under `x = cos φ`.
    pub fn from_algebraic(n: usize, leading: &[f64]) -> Result<Self, RemezError> {
        let l = leading.len().saturating_sub(1);
        if leading.is_empty() || n < l + 1 {
            return Err(RemezError::NoFreeCoefficients { n, l });
        }
        let cheb: Vec<f64> = (0..=l)
            .map(|j| {
                (0..=j)
                    .filter(|i| (j - i) % 2 == 0)
                    .map(|i| {
                        let k = n - i;
                        let s = (j - i) / 2;
                        leading[i] * 2f64.powi(1 - k as i32) * binomial(k, s)
                    })
                    .sum()
            })
            .collect();
        Self::from_real(n, &cheb)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.taus.degree()
    }

    pub fn taus(&self) -> &CoefficientSequence {
        &self.taus
    }

    /// Degree of the free part, `n − l − 1`.
    pub fn free_degree(&self) -> usize {
        self.n - self.l() - 1
    }

    /// The fixed leading part `Σ_j Re{conj(τ_j) e^{i(n−j)φ}}`.
    pub fn target(&self, phi: f64) -> f64 {
        self.taus
            .taus()
            .iter()
            .enumerate()
            .map(|(j, t)| {
                let k = (self.n - j) as f64 * phi;
                t.re * k.cos() + t.im * k.sin()
            })
            .sum()
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RemezOptions {
    /// Stop once `(max|e| − |h|)/max|e|` falls below this.
    pub tol: f64,
    pub max_iter: usize,
    pub grid_min: usize,
    /// Grid nodes per alternation pair.
    pub grid_per_pair: usize,
    /// Condition estimate that triggers the perturbed restart.
    pub condition_limit: f64,
}

impl Default for RemezOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 60,
            grid_min: 4096,
            grid_per_pair: 32,
            condition_limit: 1e12,
        }
    }
}

/// Certified best approximation.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimaxResult {
    pub head: FixedHead,
    /// Optimal free part, degree `n − l − 1`.
    pub correction: TrigPoly,
    /// Minimal deviation `E_n`.
    pub deviation: f64,
    /// `2(n − l)` alternation angles, increasing in `[0, 2π)`.
    pub reference: Vec<f64>,
    pub levelled_error: f64,
    pub iterations: usize,
}

impl MinimaxResult {
    /// `Z_n(φ) = f(φ) + correction(φ)`.
    pub fn eval_error(&self, phi: f64) -> f64 {
        self.head.target(phi) + self.correction.eval(phi)
    }

    /// Checks `2(n − l)` reference points with alternating signs and
    /// `|Z_n| >= E_n (1 − rel_tol)` on each of them.
    pub fn alternation_certificate(&self, rel_tol: f64) -> bool {
        let need = 2 * (self.head.n() - self.head.l());
        if self.reference.len() != need {
            return false;
        }
        let vals: Vec<f64> = self.reference.iter().map(|&p| self.eval_error(p)).collect();
        let big = vals.iter().all(|v| v.abs() >= self.deviation * (1.0 - rel_tol));
        let alternating = (0..need).all(|k| vals[k].signum() != vals[(k + 1) % need].signum());
        let sorted = self.reference.windows(2).all(|w| w[0] < w[1]);
        big && alternating && sorted
    }

    /// `(sup |Z_n − asymptotic|, |E_n − |γ||)`.
    pub fn compare_asymptotic(&self, az: &AsymZolotarev) -> (f64, f64) {
        let grid = 4096.max(32 * (self.head.n() + self.head.l()));
        let sup_gap = periodic_sup(|t| self.eval_error(t) - az.eval(t), grid, 8).1;
        let e_gap = (self.deviation - az.datum().gamma().norm()).abs();
        (sup_gap, e_gap)
    }
}

/// Error function `f + t` for a candidate free part in packed form
/// `(a₀, a₁, b₁, …, a_{N−1}, b_{N−1})`.
struct ErrorFn<'a> {
    head: &'a FixedHead,
    coeffs: &'a [f64],
}

impl ErrorFn<'_> {
    fn eval(&self, phi: f64) -> f64 {
        let step = Complex64::from_polar(1.0, phi);
        let mut z = step;
        let mut acc = self.coeffs[0];
        for pair in self.coeffs[1..].chunks(2) {
            acc += pair[0] * z.re + pair[1] * z.im;
            z *= step;
        }
        acc + self.head.target(phi)
    }
}

fn basis_row(phi: f64, pairs: usize, out: &mut [f64]) {
    out[0] = 1.0;
    let step = Complex64::from_polar(1.0, phi);
    let mut z = step;
    for k in 1..pairs {
        out[2 * k - 1] = z.re;
        out[2 * k] = z.im;
        z *= step;
    }
}

/// Solves the levelled system `f(φ_k) + t(φ_k) = s_k h`.
fn levelled_solve(
    head: &FixedHead,
    reference: &[f64],
    signs: &[f64],
    pairs: usize,
) -> Result<(Vec<f64>, f64, f64), NumericsError> {
    let size = 2 * pairs;
    let mut m = RealMatrix::zeros(size, size);
    let mut row = vec![0.0; size - 1];
    let mut rhs = vec![0.0; size];
    for (k, (&phi, &s)) in reference.iter().zip(signs).enumerate() {
        basis_row(phi, pairs, &mut row);
        for (j, &v) in row.iter().enumerate() {
            m[(k, j)] = v;
        }
        m[(k, size - 1)] = -s;
        rhs[k] = -head.target(phi);
    }
    let lu = Lu::factor(&m)?;
    let x = lu.solve(&rhs);
    let h = x[size - 1];
    Ok((x[..size - 1].to_vec(), h, lu.pivot_ratio()))
}

#[derive(Clone, Copy, Debug)]
struct Extremum {
    phi: f64,
    value: f64,
}

/// All local extrema of `e` on the grid, polished by golden-section search.
fn locate_extrema(e: &ErrorFn, grid: usize) -> Vec<Extremum> {
    let h = TAU / grid as f64;
    let vals: Vec<f64> = (0..grid).map(|k| e.eval(k as f64 * h)).collect();
    let mut out = Vec::new();
    for k in 0..grid {
        let prev = vals[(k + grid - 1) % grid];
        let next = vals[(k + 1) % grid];
        let v = vals[k];
        let is_max = v > 0.0 && v >= prev && v >= next;
        let is_min = v < 0.0 && v <= prev && v <= next;
        if !(is_max || is_min) {
            continue;
        }
        let s = if is_max { 1.0 } else { -1.0 };
        let x = k as f64 * h;
        let (phi, sv) = golden_max(|t| s * e.eval(t), x - h, x + h, 1e-12);
        out.push(Extremum { phi: phi.rem_euclid(TAU), value: s * sv });
    }
    out.sort_by(|a, b| a.phi.partial_cmp(&b.phi).unwrap());
    out
}

/// Collapses runs of equal sign (cyclically) to their largest member.
fn merge_same_sign(ext: Vec<Extremum>) -> Vec<Extremum> {
    let mut merged: Vec<Extremum> = Vec::with_capacity(ext.len());
    for x in ext {
        match merged.last_mut() {
            Some(last) if last.value.signum() == x.value.signum() => {
                if x.value.abs() > last.value.abs() {
                    *last = x;
                }
            }
            _ => merged.push(x),
        }
    }
    while merged.len() > 1
        && merged[0].value.signum() == merged[merged.len() - 1].value.signum()
    {
        let last = merged.pop().unwrap();
        if last.value.abs() > merged[0].value.abs() {
            merged[0] = last;
        }
    }
    merged
}

/// Drops adjacent pairs until `target` alternating points remain; each
/// removed pair holds the current smallest `|e|`.
fn thin_to(mut ext: Vec<Extremum>, target: usize) -> Vec<Extremum> {
    while ext.len() > target {
        let n = ext.len();
        let k = (0..n)
            .min_by(|&i, &j| ext[i].value.abs().partial_cmp(&ext[j].value.abs()).unwrap())
            .unwrap();
        let prev = (k + n - 1) % n;
        let next = (k + 1) % n;
        let partner = if ext[prev].value.abs() <= ext[next].value.abs() { prev } else { next };
        let (hi, lo) = if k > partner { (k, partner) } else { (partner, k) };
        ext.remove(hi);
        ext.remove(lo);
    }
    ext
}

/// Best approximation of the fixed head from trigonometric polynomials of
/// degree `n − l − 1`, by multi-point exchange.
pub fn solve(head: &FixedHead, opts: &RemezOptions) -> Result<MinimaxResult, RemezError> {
    let pairs = head.n() - head.l();
    let size = 2 * pairs;
    let grid = opts.grid_min.max(opts.grid_per_pair * pairs);

    let mut reference: Vec<f64> = (0..size)
        .map(|k| PI / (2.0 * pairs as f64) + k as f64 * PI / pairs as f64)
        .collect();
    let mut signs: Vec<f64> = (0..size).map(|k| if k % 2 == 0 { 1.0 } else { -1.0 }).collect();
    let mut restarted = false;
    let mut last = (0.0, f64::INFINITY);

    for iteration in 1..=opts.max_iter {
        let solved = levelled_solve(head, &reference, &signs, pairs);
        let (coeffs, h, _) = match solved {
            Ok(v) if v.2 <= opts.condition_limit => v,
            other => {
                let condition = match other {
                    Ok(v) => v.2,
                    Err(_) => f64::INFINITY,
                };
                if restarted {
                    return Err(RemezError::Degenerate { iteration, condition });
                }
                restarted = true;
                jitter(&mut reference);
                continue;
            }
        };
        let e = ErrorFn { head, coeffs: &coeffs };
        let mut candidates = locate_extrema(&e, grid);
        candidates.extend(reference.iter().map(|&phi| Extremum { phi, value: e.eval(phi) }));
        candidates.sort_by(|a, b| a.phi.partial_cmp(&b.phi).unwrap());
        let extrema = merge_same_sign(candidates);
        if extrema.len() < size {
            return Err(RemezError::LostAlternation { found: extrema.len(), needed: size });
        }
        let max_error = extrema.iter().map(|x| x.value.abs()).fold(0.0, f64::max);
        let mut chosen = thin_to(extrema, size);
        chosen.sort_by(|a, b| a.phi.partial_cmp(&b.phi).unwrap());
        last = (h.abs(), max_error);

        let converged = max_error == 0.0 || (max_error - h.abs()) / max_error <= opts.tol;
        reference = chosen.iter().map(|x| x.phi).collect();
        signs = chosen.iter().map(|x| x.value.signum()).collect();
        if converged {
            return Ok(MinimaxResult {
                head: head.clone(),
                correction: unpack(&coeffs, pairs),
                deviation: max_error,
                reference,
                levelled_error: h.abs(),
                iterations: iteration,
            });
        }
    }
    Err(RemezError::NotConverged {
        iterations: opts.max_iter,
        levelled: last.0,
        max_error: last.1,
    })
}

fn jitter(reference: &mut [f64]) {
    let spacing = TAU / reference.len() as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e3e2);
    for phi in reference.iter_mut() {
        *phi = (*phi + 1e-3 * spacing * rng.gen_range(-1.0..1.0)).rem_euclid(TAU);
    }
    reference.sort_by(|a, b| a.partial_cmp(b).unwrap());
}

fn unpack(coeffs: &[f64], pairs: usize) -> TrigPoly {
    let mut a = vec![0.0; pairs];
    let mut b = vec![0.0; pairs];
    a[0] = coeffs[0];
    for k in 1..pairs {
        a[k] = coeffs[2 * k - 1];
        b[k] = coeffs[2 * k];
    }
    TrigPoly { a, b }
}
