//! Least-squares geometric-rate fits on `(n, gap)` series.

use thiserror::Error;

/// Fewest positive points accepted by [`fit_geometric`].
pub const MIN_POINTS: usize = 5;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FitError {
    #[error("need at least {needed} usable points, found {found}")]
    InsufficientData { found: usize, needed: usize },
}

/// `gap ≈ exp(intercept) · ratioⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricFit {
    pub ratio: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the line fit in `ln gap`.
    pub residual: f64,
    pub used: usize,
    /// Points discarded for being zero or below the floor.
    pub dropped: usize,
}

/// Least-squares line through `(n, ln gap)`; non-positive gaps are dropped.
pub fn fit_geometric(series: &[(f64, f64)]) -> Result<GeometricFit, FitError> {
    fit_geometric_above(series, 0.0)
}

/// As [`fit_geometric`], dropping every gap `<= floor` as well. Used when
/// the gaps reach the accuracy of the solver that produced them.
pub fn fit_geometric_above(series: &[(f64, f64)], floor: f64) -> Result<GeometricFit, FitError> {
    let pts: Vec<(f64, f64)> = series
        .iter()
        .filter(|(_, g)| *g > floor && *g > 0.0 && g.is_finite())
        .map(|&(n, g)| (n, g.ln()))
        .collect();
    let dropped = series.len() - pts.len();
    if pts.len() < MIN_POINTS {
        return Err(FitError::InsufficientData { found: pts.len(), needed: MIN_POINTS });
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    let intercept = my - slope * mx;
    let residual = (pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum::<f64>()
        / k)
        .sqrt();
    Ok(GeometricFit { ratio: slope.exp(), intercept, residual, used: pts.len(), dropped })
}
