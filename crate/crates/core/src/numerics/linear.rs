//! Dense matrices and LU solves with scaled partial pivoting.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use super::NumericsError;

/// Relative pivot size (against the original row scale) below which a
/// matrix is reported singular.
pub const SINGULAR_PIVOT: f64 = 1e-13;

/// Field operations needed by the dense kernels; implemented for `f64`
/// and `Complex64`.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn modulus(self) -> f64;
    fn conjugate(self) -> Self;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn conjugate(self) -> Self {
        self
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn conjugate(self) -> Self {
        self.conj()
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RealMatrix = Matrix<f64>;
pub type ComplexMatrix = Matrix<Complex64>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conjugate())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    /// Max absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|a| a.modulus()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.modulus()).fold(0.0, f64::max)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// LU factors `P A = L U` stored in place.
#[derive(Clone, Debug)]
pub struct Lu<T> {
    lu: Matrix<T>,
    perm: Vec<usize>,
}

impl<T: Scalar> Lu<T> {
    pub fn factor(a: &Matrix<T>) -> Result<Self, NumericsError> {
        if !a.is_square() {
            return Err(NumericsError::DimensionMismatch {
                expected: a.rows,
                found: a.cols,
            });
        }
        let n = a.rows;
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let scale: Vec<f64> = (0..n)
            .map(|i| a.row(i).iter().map(|v| v.modulus()).fold(0.0, f64::max))
            .collect();
        if let Some(row) = scale.iter().position(|&s| s == 0.0) {
            return Err(NumericsError::Singular { row, pivot: 0.0 });
        }

        for k in 0..n {
            let (best, best_rel) = (k..n)
                .map(|i| (i, lu[(i, k)].modulus() / scale[perm[i]]))
                .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best_rel < SINGULAR_PIVOT {
                return Err(NumericsError::Singular {
                    row: k,
                    pivot: best_rel,
                });
            }
            if best != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(best, j)];
                    lu[(best, j)] = tmp;
                }
                perm.swap(k, best);
            }
            let pivot = lu[(k, k)];
            for i in k + 1..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                if factor == T::zero() {
                    continue;
                }
                for j in k + 1..n {
                    let v = lu[(k, j)];
                    lu[(i, j)] = lu[(i, j)] - factor * v;
                }
            }
        }
        Ok(Self { lu, perm })
    }

    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.lu.rows;
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let mut s = x[i];
            for (j, &xj) in x.iter().enumerate().take(i) {
                s = s - self.lu[(i, j)] * xj;
            }
            x[i] = s;
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for (j, &xj) in x.iter().enumerate().skip(i + 1) {
                s = s - self.lu[(i, j)] * xj;
            }
            x[i] = s / self.lu[(i, i)];
        }
        x
    }

    /// Crude condition estimate: ratio of largest to smallest pivot of `U`.
    pub fn pivot_ratio(&self) -> f64 {
        let n = self.lu.rows;
        let diag = (0..n).map(|i| self.lu[(i, i)].modulus());
        let (lo, hi) = diag.fold((f64::INFINITY, 0.0f64), |(lo, hi), d| (lo.min(d), hi.max(d)));
        hi / lo
    }
}

/// Solves `A x = b`, checking the relative residual
/// `‖Ax − b‖ <= 1e-10 (‖A‖‖x‖ + ‖b‖)`.
pub fn solve_linear<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<Vec<T>, NumericsError> {
    if b.len() != a.rows {
        return Err(NumericsError::DimensionMismatch {
            expected: a.rows,
            found: b.len(),
        });
    }
    let x = Lu::factor(a)?.solve(b);
    let ax = a.matvec(&x);
    let residual = ax
        .iter()
        .zip(b)
        .map(|(&u, &v)| (u - v).modulus())
        .fold(0.0, f64::max);
    let xnorm = x.iter().map(|v| v.modulus()).fold(0.0, f64::max);
    let bnorm = b.iter().map(|v| v.modulus()).fold(0.0, f64::max);
    let bound = 1e-10 * (a.norm_inf() * xnorm + bnorm);
    if residual > bound {
        return Err(NumericsError::IllConditioned { residual, bound });
    }
    Ok(x)
}

/// Determinant by Gaussian elimination with partial pivoting. Exactly
/// singular input returns zero.
pub fn determinant<T: Scalar>(a: &Matrix<T>) -> T {
    assert!(a.is_square());
    let n = a.rows;
    let mut m = a.clone();
    let mut det = T::one();
    for k in 0..n {
        let best = (k..n)
            .max_by(|&i, &j| m[(i, k)].modulus().partial_cmp(&m[(j, k)].modulus()).unwrap())
            .unwrap();
        if m[(best, k)].modulus() == 0.0 {
            return T::zero();
        }
        if best != k {
            for j in 0..n {
                let tmp = m[(k, j)];
                m[(k, j)] = m[(best, j)];
                m[(best, j)] = tmp;
            }
            det = -det;
        }
        let pivot = m[(k, k)];
        det = det * pivot;
        for i in k + 1..n {
            let factor = m[(i, k)] / pivot;
            for j in k + 1..n {
                let v = m[(k, j)];
                m[(i, j)] = m[(i, j)] - factor * v;
            }
        }
    }
    det
}

/// Least-squares solution of an overdetermined real system through the
/// normal equations.
pub fn least_squares(a: &RealMatrix, b: &[f64]) -> Result<Vec<f64>, NumericsError> {
    let at = a.transpose();
    let ata = at.matmul(a);
    let atb = at.matvec(b);
    Ok(Lu::factor(&ata)?.solve(&atb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_returns_rhs() {
        let a = ComplexMatrix::identity(3);
        let b = vec![c(1.0, 2.0), c(-1.0, 0.0), c(0.0, 3.0)];
        assert_eq!(solve_linear(&a, &b).unwrap(), b);
    }

    #[test]
    fn diagonal() {
        let a = RealMatrix::from_rows(&[vec![2.0, 0.0], vec![0.0, 4.0]]);
        assert_eq!(solve_linear(&a, &[2.0, 4.0]).unwrap(), vec![1.0, 1.0]);
    }

    #[test]
    fn vandermonde_two_nodes() {
        // rows (1, x) at x = 0, 1; values 1, 2 → 1 + x
        let a = RealMatrix::from_rows(&[vec![1.0, 0.0], vec![1.0, 1.0]]);
        let x = solve_linear(&a, &[1.0, 2.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-15 && (x[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn singular_is_reported() {
        let a = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(matches!(
            solve_linear(&a, &[1.0, 1.0]),
            Err(NumericsError::Singular { .. })
        ));
    }

    #[test]
    fn complex_system() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(1.0, 1.0), c(2.0, 0.0)],
            vec![c(0.0, -1.0), c(3.0, 1.0)],
        ]);
        let x_true = vec![c(0.5, -0.25), c(-1.0, 2.0)];
        let b = a.matvec(&x_true);
        let x = solve_linear(&a, &b).unwrap();
        for (u, v) in x.iter().zip(&x_true) {
            assert!((u - v).norm() < 1e-14);
        }
    }

    #[test]
    fn determinant_small() {
        let a = RealMatrix::from_rows(&[vec![0.0, 2.0], vec![3.0, 1.0]]);
        assert_eq!(determinant(&a), -6.0);
        let s = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert_eq!(determinant(&s), 0.0);
    }

    #[test]
    fn least_squares_fits_line() {
        let a = RealMatrix::from_fn(5, 2, |i, j| if j == 0 { 1.0 } else { i as f64 });
        let b: Vec<f64> = (0..5).map(|i| 3.0 - 0.5 * i as f64).collect();
        let x = least_squares(&a, &b).unwrap();
        assert!((x[0] - 3.0).abs() < 1e-12 && (x[1] + 0.5).abs() < 1e-12);
    }
}
