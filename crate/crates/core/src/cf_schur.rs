//! Carathéodory–Fejér / Schur interpolation by a scaled Blaschke product.
//!
//! Given Taylor data `τ₀..τ_m`, find the smallest degree `l`, a monic
//! polynomial `p` with all zeros in the open unit disk, and a scalar `γ`
//! such that `γ p(z)/p*(z) = τ₀ + τ₁z + … + τ_m z^m + O(z^{m+1})`.
//! `|γ|` is the largest singular value of the Hankel section built from
//! `τ₀..τ_l`; for real data it is the signed eigenvalue of largest modulus.

use num_complex::Complex64;
use thiserror::Error;

use crate::blaschke::taylor_ratio;
use crate::numerics::{
    determinant, eig_hermitian, least_squares, ComplexMatrix, ComplexPoly, HermitianMatrix,
    NumericsError, RealMatrix,
};

const REAL_TOL: f64 = 1e-14;
const EIG_TOL: f64 = 1e-14;
const ROOT_TOL: f64 = 1e-13;
/// Relative gap under which `+σ` and `−σ` count as a tie.
const TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CfError {
    #[error("coefficient sequence is empty")]
    Empty,
    #[error("coefficient sequence is identically zero")]
    AllZero,
    #[error("section degree {l} exceeds sequence degree {m}")]
    DegreeTooLarge { l: usize, m: usize },
    #[error("Hankel section of degree {l} is identically zero")]
    DegenerateSection { l: usize },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("no degree l <= {m} produced a validated solution: {rejections:?}")]
    NoValidatedDegree { m: usize, rejections: Vec<(usize, Rejection)> },
}

/// Why a candidate `(l, γ)` was not accepted by [`blaschke_match`].
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Rejection {
    #[error("matching system is singular")]
    SingularSystem,
    #[error("zero margin {margin:e} is not above {required:e}")]
    ZeroMargin { margin: f64, required: f64 },
    #[error("Taylor residual {residual:e} exceeds {allowed:e}")]
    Residual { residual: f64, allowed: f64 },
    #[error("root finding failed: {0}")]
    Roots(NumericsError),
}

/// Prescribed leading coefficients `τ₀..τ_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientSequence {
    taus: Vec<Complex64>,
    is_real: bool,
}

impl CoefficientSequence {
    pub fn new(taus: Vec<Complex64>) -> Result<Self, CfError> {
        if taus.is_empty() {
            return Err(CfError::Empty);
        }
        if taus.iter().all(|t| t.norm() == 0.0) {
            return Err(CfError::AllZero);
        }
        let is_real = taus.iter().all(|t| t.im.abs() <= REAL_TOL);
        Ok(Self { taus, is_real })
    }

    pub fn from_real(taus: &[f64]) -> Result<Self, CfError> {
        Self::new(taus.iter().map(|&t| Complex64::new(t, 0.0)).collect())
    }

    pub fn taus(&self) -> &[Complex64] {
        &self.taus
    }

    /// Highest prescribed index `m`.
    pub fn degree(&self) -> usize {
        self.taus.len() - 1
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    pub fn max_modulus(&self) -> f64 {
        self.taus.iter().map(|t| t.norm()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, c: Complex64) -> Result<Self, CfError> {
        Self::new(self.taus.iter().map(|&t| t * c).collect())
    }

    /// `τ₀..τ_k`.
    pub fn truncated(&self, k: usize) -> Result<Self, CfError> {
        Self::new(self.taus[..=k.min(self.degree())].to_vec())
    }

    fn tau(&self, j: usize) -> Complex64 {
        self.taus[j]
    }
}

/// Validation thresholds for [`blaschke_match`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CfOptions {
    /// Required `1 − max|zero of p|`.
    pub zero_margin: f64,
    /// Allowed Taylor mismatch, relative to `max(1, max|τ_j|)`.
    pub residual_tol: f64,
}

impl Default for CfOptions {
    fn default() -> Self {
        Self { zero_margin: 1e-9, residual_tol: 1e-8 }
    }
}

/// Validated Schur datum: `γ p/p*` matches the sequence through order `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct CfSolution {
    pub l: usize,
    pub p: ComplexPoly,
    pub gamma: Complex64,
    pub residual: f64,
    pub zero_margin: f64,
}

impl CfSolution {
    /// Largest zero modulus of `p` (zero when `l = 0`).
    pub fn zero_radius(&self) -> f64 {
        1.0 - self.zero_margin
    }
}

/// Extremal eigen/singular value of a Hankel section.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharValue {
    pub modulus: f64,
    /// Real data only: the signed eigenvalue of largest modulus.
    pub signed: Option<f64>,
    /// Real data only: `−signed` is also an eigenvalue up to rounding.
    pub opposite_tie: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HankelSpectrum {
    pub matrix_order: usize,
    /// Eigenvalues (real data) or singular values (complex data),
    /// descending by modulus.
    pub char_values: Vec<f64>,
    pub real: bool,
}

/// `(l+1)×(l+1)` section with `A[i][j] = τ_{l−i−j}` for `i + j <= l`,
/// zero below the anti-diagonal.
pub fn hankel_section(seq: &CoefficientSequence, l: usize) -> Result<ComplexMatrix, CfError> {
    if l > seq.degree() {
        return Err(CfError::DegreeTooLarge { l, m: seq.degree() });
    }
    Ok(ComplexMatrix::from_fn(l + 1, l + 1, |i, j| {
        if i + j <= l {
            seq.tau(l - i - j)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

pub fn hankel_spectrum(seq: &CoefficientSequence, l: usize) -> Result<HankelSpectrum, CfError> {
    let a = hankel_section(seq, l)?;
    if a.max_abs() == 0.0 {
        return Err(CfError::DegenerateSection { l });
    }
    let char_values = if seq.is_real() {
        let sym = ComplexMatrix::from_fn(l + 1, l + 1, |i, j| Complex64::new(a[(i, j)].re, 0.0));
        eig_hermitian(&HermitianMatrix::new(sym)?, EIG_TOL)?.values
    } else {
        let gram = a.adjoint().matmul(&a);
        let gram = symmetrize(&gram);
        eig_hermitian(&HermitianMatrix::new(gram)?, EIG_TOL)?
            .values
            .into_iter()
            .map(|v| v.max(0.0).sqrt())
            .collect()
    };
    Ok(HankelSpectrum { matrix_order: l + 1, char_values, real: seq.is_real() })
}

/// `|γ|` for the degree-`l` section; for real data also the sign.
pub fn largest_char_value(seq: &CoefficientSequence, l: usize) -> Result<CharValue, CfError> {
    let spec = hankel_spectrum(seq, l)?;
    let top = spec.char_values[0];
    if !spec.real {
        return Ok(CharValue { modulus: top.abs(), signed: None, opposite_tie: false });
    }
    let opposite_tie = spec
        .char_values
        .iter()
        .skip(1)
        .any(|&v| (v + top).abs() <= TIE_TOL * top.abs());
    Ok(CharValue { modulus: top.abs(), signed: Some(top), opposite_tie })
}

/// Solves `γ p(z) ≡ τ(z) p*(z) (mod z^{m+1})` for the monic degree-`l`
/// polynomial `p` and the phase of `γ`, then validates the zeros and the
/// Taylor residual.
pub fn blaschke_match(
    seq: &CoefficientSequence,
    l: usize,
    cv: &CharValue,
    opts: &CfOptions,
) -> Result<CfSolution, Rejection> {
    match cv.signed {
        Some(g) if seq.is_real() => {
            let first = match_real(seq, l, g).and_then(|p| validate(seq, p, Complex64::new(g, 0.0), opts));
            if first.is_ok() || !cv.opposite_tie {
                return first;
            }
            match_real(seq, l, -g).and_then(|p| validate(seq, p, Complex64::new(-g, 0.0), opts))
        }
        _ => {
            let (p, gamma) = match_complex(seq, l, cv.modulus)?;
            validate(seq, p, gamma, opts)
        }
    }
}

/// Searches `l = 0, 1, …, m` for the first validated Schur datum.
pub fn solve_cf(seq: &CoefficientSequence) -> Result<CfSolution, CfError> {
    solve_cf_with(seq, &CfOptions::default())
}

pub fn solve_cf_with(seq: &CoefficientSequence, opts: &CfOptions) -> Result<CfSolution, CfError> {
    let m = seq.degree();
    let mut rejections = Vec::new();
    for l in 0..=m {
        let cv = match largest_char_value(seq, l) {
            Ok(cv) => cv,
            Err(CfError::DegenerateSection { .. }) => {
                rejections.push((l, Rejection::SingularSystem));
                continue;
            }
            Err(e) => return Err(e),
        };
        match blaschke_match(seq, l, &cv, opts) {
            Ok(sol) => return Ok(sol),
            Err(r) => rejections.push((l, r)),
        }
    }
    Err(CfError::NoValidatedDegree { m, rejections })
}

/// Fejér's condition `τ_m >= τ_{m−1} >= … >= τ₀ > 0` on real data.
pub fn fejer_monotone_check(seq: &CoefficientSequence) -> bool {
    if !seq.is_real() {
        return false;
    }
    let t: Vec<f64> = seq.taus().iter().map(|c| c.re).collect();
    t[0] > 0.0 && t.windows(2).all(|w| w[1] >= w[0])
}

/// `D_{l+1}(λ)`: determinant of `[[λI, U], [L, λI]]` with `U` the upper
/// triangular Toeplitz matrix of `τ` and `L` the lower triangular Toeplitz
/// matrix of `conj τ`.
pub fn schur_determinant(seq: &CoefficientSequence, l: usize, lambda: Complex64) -> Complex64 {
    let k = l + 1;
    let zero = Complex64::new(0.0, 0.0);
    let m = ComplexMatrix::from_fn(2 * k, 2 * k, |i, j| match (i < k, j < k) {
        (true, true) | (false, false) => {
            if i == j {
                lambda
            } else {
                zero
            }
        }
        (true, false) => {
            let (r, c) = (i, j - k);
            if c >= r {
                seq.tau(c - r)
            } else {
                zero
            }
        }
        (false, true) => {
            let (r, c) = (i - k, j);
            if r >= c {
                seq.tau(r - c).conj()
            } else {
                zero
            }
        }
    });
    determinant(&m)
}

/// `Δ(λ) = det(A − λI)` for the real Hankel section `A`.
pub fn hankel_char_poly(seq: &CoefficientSequence, l: usize, lambda: f64) -> Result<f64, CfError> {
    let a = hankel_section(seq, l)?;
    let m = RealMatrix::from_fn(l + 1, l + 1, |i, j| {
        a[(i, j)].re - if i == j { lambda } else { 0.0 }
    });
    Ok(determinant(&m))
}

fn symmetrize(m: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.rows(), m.cols(), |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5)
}

/// Real data: unknowns are the non-leading coefficients `c₀..c_{l−1}`;
/// all `m + 1` coefficient equations are solved in least squares.
fn match_real(seq: &CoefficientSequence, l: usize, gamma: f64) -> Result<ComplexPoly, Rejection> {
    if l == 0 {
        return Ok(ComplexPoly::one());
    }
    let m = seq.degree();
    let tau = |j: usize| seq.tau(j).re;
    // Equation k: γ p_k − Σ_{j<=min(k,l)} τ_{k−j} p_{l−j} = 0, p_l = 1.
    let a = RealMatrix::from_fn(m + 1, l, |k, i| {
        let diag = if k == i { gamma } else { 0.0 };
        let conv = if l - i <= k { tau(k - (l - i)) } else { 0.0 };
        diag - conv
    });
    let rhs: Vec<f64> = (0..=m)
        .map(|k| tau(k) - if k == l { gamma } else { 0.0 })
        .collect();
    let c = least_squares(&a, &rhs).map_err(|_| Rejection::SingularSystem)?;
    let mut coeffs: Vec<f64> = c;
    coeffs.push(1.0);
    Ok(ComplexPoly::from_real(&coeffs))
}

/// Complex data: with `x = e^{iθ/2} p` the matching condition becomes the
/// real-linear homogeneous system `σ x ≡ τ x* (mod z^{m+1})`. Its null
/// vector gives `p = x / x_l` and `γ = σ (x_l/|x_l|)²`.
fn match_complex(
    seq: &CoefficientSequence,
    l: usize,
    sigma: f64,
) -> Result<(ComplexPoly, Complex64), Rejection> {
    let m = seq.degree();
    let cols = 2 * (l + 1);
    let mut k_mat = RealMatrix::zeros(2 * (m + 1), cols);
    for k in 0..=m {
        let (re_row, im_row) = (2 * k, 2 * k + 1);
        if k <= l {
            k_mat[(re_row, k)] += sigma;
            k_mat[(im_row, l + 1 + k)] += sigma;
        }
        for j in 0..=k.min(l) {
            let i = l - j;
            let t = seq.tau(k - j);
            // τ conj(x_i) = (a xr + b xi) + i (b xr − a xi)
            k_mat[(re_row, i)] -= t.re;
            k_mat[(re_row, l + 1 + i)] -= t.im;
            k_mat[(im_row, i)] -= t.im;
            k_mat[(im_row, l + 1 + i)] += t.re;
        }
    }
    let gram = k_mat.transpose().matmul(&k_mat);
    let gram = ComplexMatrix::from_fn(cols, cols, |i, j| {
        Complex64::new(0.5 * (gram[(i, j)] + gram[(j, i)]), 0.0)
    });
    let eig = eig_hermitian(
        &HermitianMatrix::new(gram).map_err(|_| Rejection::SingularSystem)?,
        EIG_TOL,
    )
    .map_err(|_| Rejection::SingularSystem)?;
    let null = eig.vector(cols - 1);
    let x: Vec<Complex64> = (0..=l)
        .map(|i| Complex64::new(null[i].re, null[l + 1 + i].re))
        .collect();
    let lead = x[l];
    let scale = x.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if lead.norm() <= 1e-12 * scale {
        return Err(Rejection::SingularSystem);
    }
    let p = ComplexPoly::new(x.iter().map(|&v| v / lead).collect());
    let unit = lead / lead.norm();
    Ok((p, unit * unit * sigma))
}

fn validate(
    seq: &CoefficientSequence,
    p: ComplexPoly,
    gamma: Complex64,
    opts: &CfOptions,
) -> Result<CfSolution, Rejection> {
    let l = p.degree();
    let zero_margin = if l == 0 {
        1.0
    } else {
        let roots = p.roots(ROOT_TOL).map_err(Rejection::Roots)?;
        1.0 - roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    };
    if zero_margin.is_nan() || zero_margin <= opts.zero_margin {
        return Err(Rejection::ZeroMargin { margin: zero_margin, required: opts.zero_margin });
    }
    let m = seq.degree();
    let series = taylor_ratio(&p, m);
    let residual = series
        .iter()
        .zip(seq.taus())
        .map(|(&s, &t)| (gamma * s - t).norm())
        .fold(0.0, f64::max);
    let allowed = opts.residual_tol * seq.max_modulus().max(1.0);
    if residual.is_nan() || residual > allowed {
        return Err(Rejection::Residual { residual, allowed });
    }
    Ok(CfSolution { l, p, gamma, residual, zero_margin })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(t: &[f64]) -> CoefficientSequence {
        CoefficientSequence::from_real(t).unwrap()
    }

    #[test]
    fn rejects_degenerate_sequences() {
        assert_eq!(CoefficientSequence::new(vec![]), Err(CfError::Empty));
        assert_eq!(CoefficientSequence::from_real(&[0.0, 0.0]), Err(CfError::AllZero));
    }

    #[test]
    fn section_layout() {
        let one = hankel_section(&real(&[1.0]), 0).unwrap();
        assert_eq!(one[(0, 0)], c(1.0, 0.0));

        let two = hankel_section(&real(&[1.0, 1.0]), 1).unwrap();
        assert_eq!(two, ComplexMatrix::from_rows(&[vec![c(1.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]));

        let (a, b, cc) = (c(0.1, 0.0), c(0.2, 0.0), c(0.3, 0.0));
        let three = hankel_section(&CoefficientSequence::new(vec![a, b, cc]).unwrap(), 2).unwrap();
        let z = c(0.0, 0.0);
        assert_eq!(
            three,
            ComplexMatrix::from_rows(&[vec![cc, b, a], vec![b, a, z], vec![a, z, z]])
        );
        assert!(matches!(
            hankel_section(&real(&[1.0]), 1),
            Err(CfError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn largest_value_golden_ratio() {
        let cv = largest_char_value(&real(&[1.0, 1.0]), 1).unwrap();
        assert!((cv.signed.unwrap() - 1.618_033_988_749_895).abs() < 1e-14);
    }

    #[test]
    fn largest_value_constant() {
        let cv = largest_char_value(&real(&[-2.5]), 0).unwrap();
        assert_eq!(cv.signed, Some(-2.5));
        let cv = largest_char_value(&CoefficientSequence::new(vec![c(3.0, 4.0)]).unwrap(), 0).unwrap();
        assert!((cv.modulus - 5.0).abs() < 1e-14);
        assert_eq!(cv.signed, None);
    }

    #[test]
    fn match_blaschke_minus_half() {
        let seq = real(&[-0.5, 0.75, 0.375]);
        let cv = CharValue { modulus: 1.0, signed: Some(1.0), opposite_tie: false };
        let sol = blaschke_match(&seq, 1, &cv, &CfOptions::default()).unwrap();
        assert!((sol.p.coeffs()[0] - c(-0.5, 0.0)).norm() < 1e-12);
        assert!((sol.p.coeffs()[1] - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn match_landau_datum() {
        let seq = real(&[0.5, 0.75]);
        let cv = CharValue { modulus: 1.0, signed: Some(1.0), opposite_tie: false };
        let sol = blaschke_match(&seq, 1, &cv, &CfOptions::default()).unwrap();
        assert!((sol.p.coeffs()[0] - c(0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn constant_sequence() {
        let sol = solve_cf(&real(&[-3.0])).unwrap();
        assert_eq!(sol.l, 0);
        assert_eq!(sol.gamma, c(-3.0, 0.0));
        assert_eq!(sol.p, ComplexPoly::one());

        let z = c(0.3, -1.2);
        let sol = solve_cf(&CoefficientSequence::new(vec![z]).unwrap()).unwrap();
        assert_eq!(sol.l, 0);
        assert!((sol.gamma - z).norm() < 1e-14);
    }

    #[test]
    fn solve_golden() {
        let sol = solve_cf(&real(&[1.0, 1.0])).unwrap();
        assert_eq!(sol.l, 1);
        assert!((sol.gamma.re - 1.618_033_988_749_895).abs() < 1e-12);
        assert!((sol.p.coeffs()[0].re - 0.618_033_988_749_895).abs() < 1e-12);
    }

    #[test]
    fn solve_minus_half() {
        let sol = solve_cf(&real(&[-0.5, 0.75])).unwrap();
        assert_eq!(sol.l, 1);
        assert!((sol.gamma - c(1.0, 0.0)).norm() < 1e-12);
        assert!((sol.p.coeffs()[0] - c(-0.5, 0.0)).norm() < 1e-12);
        assert!((sol.zero_radius() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn solve_complex_rotated() {
        // e^{iθ}·(z − a)/(1 − conj(a) z) with complex a
        let a = c(0.3, 0.4);
        let p = ComplexPoly::new(vec![-a, c(1.0, 0.0)]);
        let gamma = Complex64::from_polar(1.7, 0.9);
        let taus: Vec<_> = taylor_ratio(&p, 3).into_iter().map(|t| t * gamma).collect();
        let sol = solve_cf(&CoefficientSequence::new(taus).unwrap()).unwrap();
        assert_eq!(sol.l, 1);
        assert!((sol.gamma - gamma).norm() < 1e-10);
        assert!((sol.p.coeffs()[0] + a).norm() < 1e-10);
    }

    #[test]
    fn fejer_condition() {
        assert!(fejer_monotone_check(&real(&[1.0, 1.0, 1.0])));
        assert!(fejer_monotone_check(&real(&[1.0, 2.0])));
        assert!(!fejer_monotone_check(&real(&[2.0, 1.0])));
        assert!(!fejer_monotone_check(&real(&[0.0, 1.0])));
    }

    #[test]
    fn zero_margin_rejection() {
        let seq = real(&[1.0, 0.0]);
        let cv = CharValue { modulus: 1.0, signed: Some(1.0), opposite_tie: false };
        let opts = CfOptions::default();
        assert!(blaschke_match(&seq, 1, &cv, &opts).is_err());
    }
}
