//! Dense complex polynomials and an Aberth–Ehrlich root finder.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::NumericsError;

const ABERTH_MAX_ITER: usize = 500;
const ROOT_SEED: u64 = 0x5eed_cf00;

/// Polynomial with complex coefficients in ascending order:
/// `coeffs[k]` multiplies `z^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    /// Builds a polynomial, trimming trailing zero coefficients. An empty or
    /// all-zero input yields the zero polynomial `[0]`.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == Complex64::new(0.0, 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![Complex64::new(1.0, 0.0)])
    }

    /// Monic polynomial `prod (z - r)`.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.im.abs() <= tol)
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Self {
        let lead = self.leading();
        Self::new(self.coeffs.iter().map(|&c| c / lead).collect())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value and first derivative by a single Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::new(vec![Complex64::new(0.0, 0.0)]);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Reciprocal polynomial `z^d conj(p(1/conj z))`: coefficients reversed
    /// and conjugated. On `|z| = 1` it has the same modulus as `p`.
    pub fn reciprocal(&self) -> Self {
        Self::new(self.coeffs.iter().rev().map(|c| c.conj()).collect())
    }

    /// All `degree` roots, found by simultaneous Aberth–Ehrlich iteration.
    ///
    /// A root is accepted once its backward residual satisfies
    /// `|p(root)| <= tol * max|coeff| * (degree + 1)` or its Aberth step
    /// stalls at the rounding level.
    pub fn roots(&self, tol: f64) -> Result<Vec<Complex64>, NumericsError> {
        let deg = self.degree();
        if deg == 0 {
            return Err(NumericsError::DegreeTooLow);
        }
        let lead = self.leading();
        if lead.norm() == 0.0 {
            return Err(NumericsError::DegreeTooLow);
        }
        if deg == 1 {
            return Ok(vec![-self.coeffs[0] / lead]);
        }
        let scale = self.max_coeff_norm();
        let accept = tol * scale * (deg as f64 + 1.0);

        let mut z = initial_guesses(self);
        let mut done = vec![false; deg];
        for _ in 0..ABERTH_MAX_ITER {
            let mut all_done = true;
            for i in 0..deg {
                if done[i] {
                    continue;
                }
                let (p, dp) = self.eval_with_derivative(z[i]);
                if p.norm() <= accept {
                    done[i] = true;
                    continue;
                }
                all_done = false;
                let ratio = p / dp;
                let repulsion: Complex64 = (0..deg)
                    .filter(|&j| j != i)
                    .map(|j| (z[i] - z[j]).inv())
                    .sum();
                let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
                if !step.is_finite() {
                    continue;
                }
                z[i] -= step;
                if step.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE) {
                    done[i] = true;
                }
            }
            if all_done {
                return Ok(z);
            }
        }
        let worst = z.iter().map(|&r| self.eval(r).norm()).fold(0.0, f64::max);
        if worst <= accept * 1e3 {
            // Multiple roots can only be resolved to sqrt-epsilon accuracy;
            // their residual is still tiny.
            return Ok(z);
        }
        Err(NumericsError::RootsNotConverged { best: z, residual: worst })
    }
}

/// Starting points on a circle whose radius is the geometric mean of the
/// root moduli, jittered by a fixed-seed random factor.
fn initial_guesses(p: &ComplexPoly) -> Vec<Complex64> {
    let deg = p.degree();
    let c0 = p.coeffs[0].norm();
    let lead = p.leading().norm();
    let mut radius = if c0 > 0.0 { (c0 / lead).powf(1.0 / deg as f64) } else { 0.5 };
    if !radius.is_finite() || radius == 0.0 {
        radius = 1.0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ROOT_SEED);
    radius *= rng.gen_range(0.9..1.1);
    let offset = rng.gen_range(0.0..std::f64::consts::TAU);
    (0..deg)
        .map(|k| {
            let theta = offset + std::f64::consts::TAU * k as f64 / deg as f64;
            Complex64::from_polar(radius, theta)
        })
        .collect()
}
