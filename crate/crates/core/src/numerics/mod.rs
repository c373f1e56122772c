//! Domain-free dense numerical kernels.

mod eigen;
mod linear;
mod poly;
mod quad;

pub use eigen::{eig_hermitian, HermitianEigen, HermitianMatrix};
pub use linear::{
    determinant, least_squares, solve_linear, ComplexMatrix, Lu, Matrix, RealMatrix, Scalar, SINGULAR_PIVOT,
};
pub use poly::ComplexPoly;
pub use quad::{
    golden_max, periodic_sup, quad_periodic, quad_periodic_from, QUAD_MAX_LEVEL, QUAD_MIN_LEVEL,
};

use num_complex::Complex64;
use thiserror::Error;

/// Default tolerance shared by the kernels.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum NumericsError {
    #[error("polynomial must have degree at least 1")]
    DegreeTooLow,
    #[error("root finder did not converge (worst residual {residual:e})")]
    RootsNotConverged { best: Vec<Complex64>, residual: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular at elimination step {row} (relative pivot {pivot:e})")]
    Singular { row: usize, pivot: f64 },
    #[error("solution residual {residual:e} exceeds {bound:e}")]
    IllConditioned { residual: f64, bound: f64 },
    #[error("matrix is not Hermitian at ({row}, {col}), gap {gap:e}")]
    NotHermitian { row: usize, col: usize, gap: f64 },
    #[error("Jacobi sweeps did not converge (off-diagonal mass {off_diagonal:e})")]
    EigenNotConverged { off_diagonal: f64 },
    #[error("quadrature did not converge: last {last}, previous {previous}")]
    QuadratureNotConverged { last: f64, previous: f64 },
}
