//! Cyclic Jacobi eigensolver for Hermitian matrices.

use num_complex::Complex64;

use super::linear::ComplexMatrix;
use super::NumericsError;

const HERMITIAN_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// Square complex matrix equal to its conjugate transpose.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    inner: ComplexMatrix,
}

impl HermitianMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self, NumericsError> {
        if !m.is_square() || m.rows() == 0 {
            return Err(NumericsError::DimensionMismatch {
                expected: m.rows(),
                found: m.cols(),
            });
        }
        let n = m.rows();
        for i in 0..n {
            for j in i..n {
                let gap = (m[(i, j)] - m[(j, i)].conj()).norm();
                if gap > HERMITIAN_TOL {
                    return Err(NumericsError::NotHermitian { row: i, col: j, gap });
                }
            }
        }
        Ok(Self { inner: m })
    }

    pub fn from_real_symmetric(rows: &[Vec<f64>]) -> Result<Self, NumericsError> {
        let m = ComplexMatrix::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&v| Complex64::new(v, 0.0)).collect())
                .collect::<Vec<_>>(),
        );
        Self::new(m)
    }

    pub fn order(&self) -> usize {
        self.inner.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.inner
    }
}

/// Eigenpairs of a Hermitian matrix, ordered by descending `|λ|`.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        (0..self.vectors.rows()).map(|i| self.vectors[(i, k)]).collect()
    }
}

/// Diagonalizes `a` by cyclic complex Jacobi rotations until the
/// off-diagonal Frobenius mass is below `tol * ‖A‖_F`.
pub fn eig_hermitian(a: &HermitianMatrix, tol: f64) -> Result<HermitianEigen, NumericsError> {
    let n = a.order();
    let mut m = a.inner.clone();
    let mut v = ComplexMatrix::identity(n);
    let frob = frobenius(&m);
    if frob == 0.0 {
        return Ok(finish(m, v));
    }
    let target = tol * frob;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal(&m) <= target {
            return Ok(finish(m, v));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if off_diagonal(&m) <= target {
        return Ok(finish(m, v));
    }
    Err(NumericsError::EigenNotConverged { off_diagonal: off_diagonal(&m) })
}

fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    // Phase diag(1, e^{-iα}) makes the pivot real, then a real rotation
    // annihilates it.
    let phase = apq / mag;
    let theta = (aqq - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let ph = phase.conj();
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = -ph * s;
    let u_qq = ph * c;

    let n = m.rows();
    for k in 0..n {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp * u_pp + mkq * u_qp;
        m[(k, q)] = mkp * u_pq + mkq * u_qq;
    }
    for k in 0..n {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = u_pp.conj() * mpk + u_qp.conj() * mqk;
        m[(q, k)] = u_pq.conj() * mpk + u_qq.conj() * mqk;
    }
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * u_pp + vkq * u_qp;
        v[(k, q)] = vkp * u_pq + vkq * u_qq;
    }
}

fn frobenius(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            s += m[(i, j)].norm_sqr();
        }
    }
    s.sqrt()
}

fn off_diagonal(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn finish(m: ComplexMatrix, v: ComplexMatrix) -> HermitianEigen {
    let n = m.rows();
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&a, &b| {
        diag[b]
            .abs()
            .partial_cmp(&diag[a].abs())
            .unwrap()
            .then(diag[b].partial_cmp(&diag[a]).unwrap())
    });
    let values = order.iter().map(|&k| diag[k]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    HermitianEigen { values, vectors }
}
