//! Asymptotically optimal trigonometric polynomials with prescribed leading
//! coefficients.
//!
//! The pipeline: [`cf_schur`] turns the prescribed coefficients into a
//! scaled Blaschke product, [`blaschke`] evaluates the reflected product
//! that approximates the minimal polynomial, and [`remez`] computes the
//! exact minimal polynomial as an independent check. [`functionals`]
//! evaluates the sharp coefficient bounds built on the same objects.

pub mod blaschke;
pub mod cf_schur;
pub mod fit;
pub mod functionals;
pub mod numerics;
pub mod remez;

pub use blaschke::{AsymZolotarev, BlaschkeDatum};
pub use cf_schur::{solve_cf, CfSolution, CoefficientSequence};

