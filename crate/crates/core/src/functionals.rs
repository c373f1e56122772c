//! Sharp bounds for linear functionals of the leading coefficients.
//!
//! For weights `μ₀..μ_l` the constant `η_l` is the maximum of
//! `|Σ μ_{l−j} c_j|` over functions `f = Σ c_j z^j` bounded by one in the
//! disk. It also bounds `|Σ μ_{l−j} τ_j| / E_n(τ)` for every head `τ`.

use std::f64::consts::TAU;

use minilp::{ComparisonOp, OptimizationDirection, Problem};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::blaschke::{taylor_ratio, BlaschkeDatum, BlaschkeError};
use crate::cf_schur::{CfError, CoefficientSequence};
use crate::numerics::{golden_max, periodic_sup, quad_periodic_from, ComplexPoly, NumericsError};
use crate::remez::{self, FixedHead, RemezError, RemezOptions};

/// Largest `l` accepted by [`brute_force`].
pub const BRUTE_FORCE_MAX_L: usize = 3;
/// Multi-starts per Blaschke degree in [`brute_force`].
pub const BRUTE_FORCE_STARTS: usize = 20;
const BRUTE_FORCE_SEED: u64 = 0x5eed_e7a1;
const ZERO_MARGIN: f64 = 1e-9;
const POSITIVE_GRID: usize = 4096;
const POSITIVE_SLACK: f64 = 1e-12;
const LANDAU_TOL: f64 = 1e-10;
const RHO_MAX: f64 = 1.0 - 1e-9;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FunctionalError {
    #[error("weights are empty")]
    Empty,
    #[error("weights are all zero")]
    AllZero,
    #[error("μ₀ = 0 has no square-root branch")]
    BranchPoint,
    #[error("brute-force search supports l <= {max}, got l = {l}")]
    UnsupportedSize { l: usize, max: usize },
    #[error("square-root head has a zero in the closed disk")]
    NotZeroFree,
    #[error("degree n = {n} is below the required {required}")]
    DegreeTooSmall { n: usize, required: usize },
    #[error("Landau extremal for l = {l}: coefficient sum {sum} (alternate indexing {alternate}) differs from {target}")]
    LandauValidation { l: usize, sum: f64, alternate: f64, target: f64 },
    #[error("linear program failed: {0}")]
    LinearProgram(String),
    #[error(transparent)]
    Remez(#[from] RemezError),
    #[error(transparent)]
    Blaschke(#[from] BlaschkeError),
    #[error(transparent)]
    Coefficients(#[from] CfError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// The weights `μ₀..μ_l`.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalWeights {
    mus: Vec<Complex64>,
}

impl FunctionalWeights {
    pub fn new(mus: Vec<Complex64>) -> Result<Self, FunctionalError> {
        if mus.is_empty() {
            return Err(FunctionalError::Empty);
        }
        if mus.iter().all(|m| m.norm() == 0.0) {
            return Err(FunctionalError::AllZero);
        }
        Ok(Self { mus })
    }

    pub fn from_real(mus: &[f64]) -> Result<Self, FunctionalError> {
        Self::new(mus.iter().map(|&m| Complex64::new(m, 0.0)).collect())
    }

    pub fn mus(&self) -> &[Complex64] {
        &self.mus
    }

    pub fn l(&self) -> usize {
        self.mus.len() - 1
    }

    /// `Σ_j μ_{l−j} c_j` over the first `l + 1` entries of `c`.
    pub fn apply(&self, c: &[Complex64]) -> Complex64 {
        let l = self.l();
        (0..=l).map(|j| self.mus[l - j] * c.get(j).copied().unwrap_or_default()).sum()
    }

    pub fn scaled(&self, s: f64) -> Result<Self, FunctionalError> {
        Self::new(self.mus.iter().map(|m| m * s).collect())
    }
}

/// Square root `Σ λ_j z^j` of `μ₀ + μ₁z + … + μ_l z^l`, truncated at `z^l`.
#[derive(Clone, Debug, PartialEq)]
pub struct SqrtHead {
    pub lambdas: Vec<Complex64>,
    /// `s*(z) = Σ λ_j z^j`.
    pub s_star: ComplexPoly,
    /// No zero of `s*` in `|z| <= 1 + 1e-9`.
    pub zero_free: bool,
}

impl SqrtHead {
    /// `s(z) = z^l conj(s*(1/conj z))`, of nominal degree `l`.
    pub fn s(&self) -> ComplexPoly {
        ComplexPoly::new(self.lambdas.iter().rev().map(|c| c.conj()).collect())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.lambdas.iter().map(|c| c.norm_sqr()).sum()
    }
}

pub fn sqrt_head(w: &FunctionalWeights) -> Result<SqrtHead, FunctionalError> {
    let mus = w.mus();
    if mus[0].norm() == 0.0 {
        return Err(FunctionalError::BranchPoint);
    }
    let l = w.l();
    let mut lambdas = vec![mus[0].sqrt()];
    for k in 1..=l {
        let cross: Complex64 = (1..k).map(|j| lambdas[j] * lambdas[k - j]).sum();
        lambdas.push((mus[k] - cross) / (2.0 * lambdas[0]));
    }
    let s_star = ComplexPoly::new(lambdas.clone());
    let zero_free = if s_star.degree() == 0 {
        true
    } else {
        s_star.roots(1e-13)?.iter().all(|z| z.norm() > 1.0 + ZERO_MARGIN)
    };
    Ok(SqrtHead { lambdas, s_star, zero_free })
}

/// A function of modulus one on the circle.
#[derive(Clone, Debug, PartialEq)]
pub enum Extremal {
    Blaschke(BlaschkeDatum),
    Constant(Complex64),
}

impl Extremal {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            Extremal::Blaschke(d) => d.eval(z),
            Extremal::Constant(c) => *c,
        }
    }

    /// Taylor coefficients through `z^order`.
    pub fn taylor(&self, order: usize) -> Vec<Complex64> {
        match self {
            Extremal::Blaschke(d) => d.taylor(order),
            Extremal::Constant(c) => {
                let mut out = vec![Complex64::default(); order + 1];
                out[0] = *c;
                out
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaBranch {
    SqrtCase,
    PositiveCase,
    BruteForce,
}

impl EtaBranch {
    pub fn name(self) -> &'static str {
        match self {
            EtaBranch::SqrtCase => "sqrt_case",
            EtaBranch::PositiveCase => "positive_case",
            EtaBranch::BruteForce => "brute_force",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EtaSolution {
    pub eta: f64,
    pub branch: EtaBranch,
    /// Rotated so that `Σ μ_{l−j} c_j = eta` is real and positive.
    pub extremal: Extremal,
    pub lambdas: Option<Vec<Complex64>>,
}

pub fn eta(w: &FunctionalWeights) -> Result<EtaSolution, FunctionalError> {
    match sqrt_head(w) {
        Ok(sq) if sq.zero_free => return sqrt_case(w, sq),
        Ok(_) | Err(FunctionalError::BranchPoint) => {}
        Err(e) => return Err(e),
    }
    if let Some(sol) = positive_case(w) {
        return Ok(sol);
    }
    brute_force(w, BRUTE_FORCE_SEED)
}

fn sqrt_case(w: &FunctionalWeights, sq: SqrtHead) -> Result<EtaSolution, FunctionalError> {
    let p = sq.s().scale(Complex64::new(1.0, 0.0) / sq.lambdas[0].conj());
    let datum = BlaschkeDatum::new(p, Complex64::new(1.0, 0.0))?;
    let extremal = rotate(w, datum);
    Ok(EtaSolution {
        eta: sq.norm_sqr(),
        branch: EtaBranch::SqrtCase,
        extremal,
        lambdas: Some(sq.lambdas),
    })
}

/// Multiplies `γ` by the phase that makes the functional real positive.
fn rotate(w: &FunctionalWeights, datum: BlaschkeDatum) -> Extremal {
    let v = w.apply(&datum.taylor(w.l()));
    let phase = if v.norm() > 0.0 { v.conj() / v.norm() } else { Complex64::new(1.0, 0.0) };
    let gamma = datum.gamma() * phase;
    let p = datum.p().clone();
    Extremal::Blaschke(BlaschkeDatum::new(p, gamma).unwrap_or(datum))
}

/// `Re{ε(μ₀e^{ilφ} + … + μ_{l−1}e^{iφ} + μ_l/2)} >= 0` with `ε` the phase
/// that makes `εμ_l` real positive.
fn positive_case(w: &FunctionalWeights) -> Option<EtaSolution> {
    let mus = w.mus();
    let l = w.l();
    let last = mus[l];
    if last.norm() == 0.0 {
        return None;
    }
    let eps = last.conj() / last.norm();
    let g = |phi: f64| {
        let z = Complex64::from_polar(1.0, phi);
        let mut acc = last * 0.5;
        let mut zk = z;
        for j in (0..l).rev() {
            acc += mus[j] * zk;
            zk *= z;
        }
        (eps * acc).re
    };
    let scale = mus.iter().map(|m| m.norm()).fold(0.0, f64::max);
    let h = TAU / POSITIVE_GRID as f64;
    let (k_min, v_min) = (0..POSITIVE_GRID)
        .map(|k| (k, g(k as f64 * h)))
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    let x = k_min as f64 * h;
    let refined = -golden_max(|t| -g(t), x - h, x + h, 1e-12).1;
    if v_min.min(refined) < -POSITIVE_SLACK * scale {
        return None;
    }
    Some(EtaSolution {
        eta: last.norm(),
        branch: EtaBranch::PositiveCase,
        extremal: Extremal::Constant(eps),
        lambdas: None,
    })
}

/// `|Σ μ_{l−j} c_j|` for the Blaschke product with zeros `ρ_k e^{iθ_k}`,
/// packed as `(ρ₁, θ₁, ρ₂, θ₂, …)`.
fn blaschke_value(w: &FunctionalWeights, x: &[f64]) -> f64 {
    w.apply(&taylor_ratio(&zeros_poly(x), w.l())).norm()
}

fn zeros_poly(x: &[f64]) -> ComplexPoly {
    let zeros: Vec<Complex64> = x.chunks(2).map(|z| Complex64::from_polar(z[0], z[1])).collect();
    ComplexPoly::from_roots(&zeros)
}

/// Coordinate ascent with steps halving from `(0.2, 0.5)` down to `1e-8`.
fn coordinate_ascent(w: &FunctionalWeights, mut x: Vec<f64>) -> (Vec<f64>, f64) {
    let mut best = blaschke_value(w, &x);
    let mut scale = 1.0;
    while scale > 1e-8 {
        let mut improved = false;
        for i in 0..x.len() {
            let step = if i % 2 == 0 { 0.2 * scale } else { 0.5 * scale };
            for dir in [1.0, -1.0] {
                let mut y = x.clone();
                y[i] += dir * step;
                if i % 2 == 0 {
                    y[i] = y[i].clamp(0.0, RHO_MAX);
                }
                let v = blaschke_value(w, &y);
                if v > best {
                    best = v;
                    x = y;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            scale *= 0.5;
        }
    }
    (x, best)
}

/// Maximizes `|Σ μ_{l−j} c_j|` over Blaschke products of degree `0..=l`
/// by multi-start coordinate ascent on the zeros.
pub fn brute_force(w: &FunctionalWeights, seed: u64) -> Result<EtaSolution, FunctionalError> {
    let l = w.l();
    if l > BRUTE_FORCE_MAX_L {
        return Err(FunctionalError::UnsupportedSize { l, max: BRUTE_FORCE_MAX_L });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = (Vec::new(), blaschke_value(w, &[]));
    for d in 1..=l {
        for _ in 0..BRUTE_FORCE_STARTS {
            let x0: Vec<f64> = (0..d)
                .flat_map(|_| [rng.gen_range(0.0..0.95), rng.gen_range(0.0..TAU)])
                .collect();
            let cand = coordinate_ascent(w, x0);
            if cand.1 > best.1 {
                best = cand;
            }
        }
    }
    let datum = BlaschkeDatum::new(zeros_poly(&best.0), Complex64::new(1.0, 0.0))?;
    Ok(EtaSolution {
        eta: best.1,
        branch: EtaBranch::BruteForce,
        extremal: rotate(w, datum),
        lambdas: None,
    })
}

/// `(2ν−1)!!/(2ν)!!` for `ν = 0..=l`.
fn half_binomials(l: usize) -> Vec<f64> {
    let mut out = vec![1.0];
    for nu in 1..=l {
        out.push(out[nu - 1] * (2 * nu - 1) as f64 / (2 * nu) as f64);
    }
    out
}

/// `1 + Σ_{j=1}^{l} ((2j−1)!!/(2j)!!)²`.
pub fn landau_constant(l: usize) -> f64 {
    half_binomials(l).iter().map(|w| w * w).sum()
}

/// `p/p*` with `p*(z) = Σ_{ν=0}^{l} w_ν z^ν`, `w_ν = (2ν−1)!!/(2ν)!!`.
/// Its first `l + 1` Taylor coefficients sum to the Landau constant.
pub fn landau_extremal(l: usize) -> Result<BlaschkeDatum, FunctionalError> {
    let w = half_binomials(l);
    let p = ComplexPoly::from_real(&w.iter().rev().copied().collect::<Vec<_>>());
    let datum = BlaschkeDatum::new(p, Complex64::new(1.0, 0.0))?;
    let target = landau_constant(l);
    let sum: f64 = datum.taylor(l).iter().map(|c| c.re).sum();
    if (sum - target).abs() > LANDAU_TOL {
        return Err(FunctionalError::LandauValidation {
            l,
            sum,
            alternate: landau_alternate_sum(l),
            target,
        });
    }
    Ok(datum)
}

/// Coefficient sum for the ratio whose sums both start at `ν = 1`, with the
/// common factor `z` removed from the denominator.
fn landau_alternate_sum(l: usize) -> f64 {
    let w = half_binomials(l);
    if l == 0 {
        return f64::NAN;
    }
    let num: Vec<f64> = (1..=l).map(|nu| w[l + 1 - nu]).collect();
    let den: Vec<f64> = w[1..].to_vec();
    let mut out: Vec<f64> = Vec::with_capacity(l + 1);
    for k in 0..=l {
        let mut acc = num.get(k).copied().unwrap_or(0.0);
        for j in 1..=k.min(den.len() - 1) {
            acc -= den[j] * out[k - j];
        }
        out.push(acc / den[0]);
    }
    out.iter().sum()
}

fn check_degree(n: usize, required: usize) -> Result<(), FunctionalError> {
    if n < required {
        return Err(FunctionalError::DegreeTooSmall { n, required });
    }
    Ok(())
}

/// `|Σ μ_{l−j} c_j| / E_n(c)` for the Taylor head `c` of the extremal.
pub fn least_upper_bound_ratio(
    w: &FunctionalWeights,
    n: usize,
    opts: &RemezOptions,
) -> Result<f64, FunctionalError> {
    check_degree(n, w.l() + 2)?;
    let sol = eta(w)?;
    let c = sol.extremal.taylor(w.l());
    let head = FixedHead::new(n, CoefficientSequence::new(c.clone())?)?;
    let e = remez::solve(&head, opts)?.deviation;
    Ok(w.apply(&c).norm() / e)
}

/// `‖Σ τ_j cos(n−j)φ‖_∞ / E_n(τ)`.
pub fn clenshaw_ratio(taus: &[f64], n: usize, opts: &RemezOptions) -> Result<f64, FunctionalError> {
    check_degree(n, taus.len() + 1)?;
    let head = FixedHead::from_real(n, taus)?;
    let grid = 4096.max(32 * n);
    let sup = periodic_sup(|t| head.target(t), grid, 8).1;
    let e = remez::solve(&head, opts)?.deviation;
    Ok(sup / e)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct L1Deviation {
    /// `∫|f + t|` over the circle for the grid-optimal `t`, integrated
    /// adaptively.
    pub computed: f64,
    /// Optimum of the discretized program.
    pub discrete: f64,
    /// `4 Σ |λ_j|²`.
    pub predicted: f64,
}

/// Least `L¹` deviation of `Re{Σ μ_j e^{i(n−j)φ}} + t(φ)` over
/// trigonometric `t` of degree `n − l − 1`.
pub fn l1_min_deviation(w: &FunctionalWeights, n: usize) -> Result<L1Deviation, FunctionalError> {
    let l = w.l();
    check_degree(n, 2 * l + 2)?;
    let sq = sqrt_head(w)?;
    if !sq.zero_free {
        return Err(FunctionalError::NotZeroFree);
    }
    let mus = w.mus().to_vec();
    let target = move |phi: f64| -> f64 {
        mus.iter()
            .enumerate()
            .map(|(j, m)| (m * Complex64::from_polar(1.0, (n - j) as f64 * phi)).re)
            .sum()
    };
    let pairs = n - l;
    let nodes = 32 * n;
    let dphi = TAU / nodes as f64;

    let mut lp = Problem::new(OptimizationDirection::Minimize);
    let free: Vec<_> = (0..2 * pairs - 1)
        .map(|_| lp.add_var(0.0, (f64::NEG_INFINITY, f64::INFINITY)))
        .collect();
    let mut basis = vec![0.0; 2 * pairs - 1];
    for i in 0..nodes {
        let phi = i as f64 * dphi;
        trig_basis(phi, pairs, &mut basis);
        let up = lp.add_var(dphi, (0.0, f64::INFINITY));
        let down = lp.add_var(dphi, (0.0, f64::INFINITY));
        let mut expr: Vec<(minilp::Variable, f64)> =
            free.iter().zip(&basis).map(|(&v, &b)| (v, b)).collect();
        expr.push((up, -1.0));
        expr.push((down, 1.0));
        lp.add_constraint(expr.as_slice(), ComparisonOp::Eq, -target(phi));
    }
    let sol = lp.solve().map_err(|e| FunctionalError::LinearProgram(e.to_string()))?;
    let coeffs: Vec<f64> = free.iter().map(|&v| sol[v]).collect();
    let err = |phi: f64| {
        let mut b = vec![0.0; 2 * pairs - 1];
        trig_basis(phi, pairs, &mut b);
        target(phi) + b.iter().zip(&coeffs).map(|(x, y)| x * y).sum::<f64>()
    };
    let min_level = (usize::BITS - (4 * n).leading_zeros()).max(5);
    let computed = quad_periodic_from(|t| err(t).abs(), 1e-7, min_level)?;
    Ok(L1Deviation { computed, discrete: sol.objective(), predicted: 4.0 * sq.norm_sqr() })
}

/// `(1, cos φ, sin φ, …, cos(N−1)φ, sin(N−1)φ)`.
fn trig_basis(phi: f64, pairs: usize, out: &mut [f64]) {
    out[0] = 1.0;
    let step = Complex64::from_polar(1.0, phi);
    let mut z = step;
    for k in 1..pairs {
        out[2 * k - 1] = z.re;
        out[2 * k] = z.im;
        z *= step;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sqrt_of_one_plus_z() {
        let sq = sqrt_head(&FunctionalWeights::from_real(&[1.0, 1.0]).unwrap()).unwrap();
        assert!((sq.lambdas[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((sq.lambdas[1] - c(0.5, 0.0)).norm() < 1e-15);
        assert!(sq.zero_free);
    }

    #[test]
    fn sqrt_of_constant() {
        let sq = sqrt_head(&FunctionalWeights::from_real(&[1.0]).unwrap()).unwrap();
        assert_eq!(sq.lambdas, vec![c(1.0, 0.0)]);
        assert!(sq.zero_free);
    }

    #[test]
    fn sqrt_of_quadratic() {
        let sq = sqrt_head(&FunctionalWeights::from_real(&[1.0, 1.0, 1.0]).unwrap()).unwrap();
        let want = [1.0, 0.5, 0.375];
        for (a, b) in sq.lambdas.iter().zip(want) {
            assert!((a - c(b, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn sqrt_rejects_branch_point() {
        let r = sqrt_head(&FunctionalWeights::from_real(&[0.0, 1.0]).unwrap());
        assert_eq!(r, Err(FunctionalError::BranchPoint));
    }

    #[test]
    fn weights_validation() {
        assert_eq!(FunctionalWeights::new(vec![]), Err(FunctionalError::Empty));
        assert_eq!(FunctionalWeights::from_real(&[0.0, 0.0]), Err(FunctionalError::AllZero));
    }

    #[test]
    fn eta_landau_l1() {
        let s = eta(&FunctionalWeights::from_real(&[1.0, 1.0]).unwrap()).unwrap();
        assert_eq!(s.branch, EtaBranch::SqrtCase);
        assert!((s.eta - 1.25).abs() < 1e-14);
    }

    #[test]
    fn eta_first_coefficient() {
        let s = eta(&FunctionalWeights::from_real(&[0.0, 1.0]).unwrap()).unwrap();
        assert_eq!(s.branch, EtaBranch::PositiveCase);
        assert!((s.eta - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eta_landau_l2() {
        let s = eta(&FunctionalWeights::from_real(&[1.0, 1.0, 1.0]).unwrap()).unwrap();
        assert!((s.eta - 1.390625).abs() < 1e-12);
    }

    #[test]
    fn extremal_attains_eta() {
        for mus in [vec![c(1.0, 0.0), c(1.0, 0.0)], vec![c(0.3, 1.0), c(-0.2, 0.1), c(0.1, 0.0)]] {
            let w = FunctionalWeights::new(mus).unwrap();
            let s = eta(&w).unwrap();
            let v = w.apply(&s.extremal.taylor(w.l()));
            assert!((v - c(s.eta, 0.0)).norm() < 1e-10, "{v} vs {}", s.eta);
        }
    }

    #[test]
    fn brute_force_matches_sqrt_case() {
        let w = FunctionalWeights::from_real(&[1.0, 1.0]).unwrap();
        let s = brute_force(&w, 1).unwrap();
        assert!((s.eta - 1.25).abs() < 1e-8, "{}", s.eta);
    }

    #[test]
    fn brute_force_size_limit() {
        let w = FunctionalWeights::from_real(&[1.0; 5]).unwrap();
        assert_eq!(
            brute_force(&w, 1),
            Err(FunctionalError::UnsupportedSize { l: 4, max: BRUTE_FORCE_MAX_L })
        );
    }

    #[test]
    fn landau_constants() {
        assert_eq!(landau_constant(0), 1.0);
        assert_eq!(landau_constant(1), 1.25);
        assert_eq!(landau_constant(2), 1.390625);
        assert_eq!(landau_constant(3), 1.48828125);
    }

    #[test]
    fn landau_extremal_l1() {
        let d = landau_extremal(1).unwrap();
        let t = d.taylor(1);
        assert!((t[0] - c(0.5, 0.0)).norm() < 1e-15);
        assert!((t[1] - c(0.75, 0.0)).norm() < 1e-15);
        for k in 0..16 {
            let z = Complex64::from_polar(1.0, k as f64 * 0.4);
            assert!((d.eval(z).norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn landau_extremal_sums() {
        for l in 1..=6 {
            let d = landau_extremal(l).unwrap();
            let s: f64 = d.taylor(l).iter().map(|c| c.re).sum();
            assert!((s - landau_constant(l)).abs() < 1e-10);
        }
    }

    #[test]
    fn ratio_first_coefficient() {
        let w = FunctionalWeights::from_real(&[0.0, 1.0]).unwrap();
        let r = least_upper_bound_ratio(&w, 9, &RemezOptions::default()).unwrap();
        assert!((r - 1.0).abs() < 1e-9, "{r}");
    }

    #[test]
    fn ratio_landau_n20() {
        let w = FunctionalWeights::from_real(&[1.0, 1.0]).unwrap();
        let r = least_upper_bound_ratio(&w, 20, &RemezOptions::default()).unwrap();
        assert!((1.25 / 1.01..=1.25 + 1e-9).contains(&r), "{r}");
    }

    #[test]
    fn clenshaw_single_coefficient() {
        let r = clenshaw_ratio(&[1.0], 7, &RemezOptions::default()).unwrap();
        assert!((r - 1.0).abs() < 1e-9, "{r}");
    }

    #[test]
    fn clenshaw_landau_head() {
        let r = clenshaw_ratio(&[0.5, 0.75], 30, &RemezOptions::default()).unwrap();
        assert!((1.23..=1.25 + 1e-9).contains(&r), "{r}");
    }

    #[test]
    fn l1_pure_cosine() {
        let w = FunctionalWeights::from_real(&[1.0]).unwrap();
        let d = l1_min_deviation(&w, 8).unwrap();
        assert_eq!(d.predicted, 4.0);
        assert!((d.computed - 4.0).abs() < 2e-3, "{d:?}");
    }

    #[test]
    fn l1_requires_zero_free() {
        let w = FunctionalWeights::from_real(&[1.0, 2.0]).unwrap();
        assert_eq!(l1_min_deviation(&w, 8), Err(FunctionalError::NotZeroFree));
    }
}
