//! Periodic trapezoid quadrature and one-dimensional extremum search.

use std::f64::consts::TAU;

use super::NumericsError;

/// Largest refinement level: `2^22` nodes.
pub const QUAD_MAX_LEVEL: u32 = 22;
/// First level compared; 32 nodes. Coarser grids alias too easily.
pub const QUAD_MIN_LEVEL: u32 = 5;

/// Integral of a `2π`-periodic function over `[0, 2π)` by the trapezoid
/// rule on `2^k` equispaced nodes. The level doubles until two successive
/// estimates differ by less than `tol`.
pub fn quad_periodic(f: impl Fn(f64) -> f64, tol: f64) -> Result<f64, NumericsError> {
    quad_periodic_from(f, tol, QUAD_MIN_LEVEL)
}

/// As [`quad_periodic`], starting at `2^min_level` nodes. Callers that
/// know the bandwidth of `f` should pass a level above it.
pub fn quad_periodic_from(
    f: impl Fn(f64) -> f64,
    tol: f64,
    min_level: u32,
) -> Result<f64, NumericsError> {
    let mut level = min_level.max(1);
    let mut nodes = 1usize << level;
    let h = TAU / nodes as f64;
    let mut sum: f64 = (0..nodes).map(|k| f(k as f64 * h)).sum();
    let mut estimate = sum * h;
    loop {
        if level >= QUAD_MAX_LEVEL {
            return Err(NumericsError::QuadratureNotConverged {
                last: estimate,
                previous: f64::NAN,
            });
        }
        level += 1;
        let h_new = TAU / (2 * nodes) as f64;
        sum += (0..nodes).map(|k| f((2 * k + 1) as f64 * h_new)).sum::<f64>();
        nodes *= 2;
        let next = sum * h_new;
        if (next - estimate).abs() < tol {
            return Ok(next);
        }
        if level >= QUAD_MAX_LEVEL {
            return Err(NumericsError::QuadratureNotConverged {
                last: next,
                previous: estimate,
            });
        }
        estimate = next;
    }
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Maximizes `f` on `[a, b]` by golden-section search down to an interval
/// width of `tol`. Returns the best `(x, f(x))` seen, including the
/// bracket ends.
pub fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let fa = f(a);
    let fb = f(b);
    let mut best = if fa >= fb { (a, fa) } else { (b, fb) };
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > tol {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN * (b - a);
            f2 = f(x2);
        }
    }
    for cand in [(x1, f1), (x2, f2)] {
        if cand.1 > best.1 {
            best = cand;
        }
    }
    best
}

/// Sup norm of a `2π`-periodic function: scan `grid` equispaced nodes,
/// then polish the `refine` largest local maxima of `|f|` with
/// golden-section search to `1e-12` in the angle.
pub fn periodic_sup(f: impl Fn(f64) -> f64, grid: usize, refine: usize) -> (f64, f64) {
    let h = TAU / grid as f64;
    let vals: Vec<f64> = (0..grid).map(|k| f(k as f64 * h).abs()).collect();
    let mut peaks: Vec<usize> = (0..grid)
        .filter(|&k| {
            let prev = vals[(k + grid - 1) % grid];
            let next = vals[(k + 1) % grid];
            vals[k] >= prev && vals[k] >= next
        })
        .collect();
    peaks.sort_by(|&a, &b| vals[b].partial_cmp(&vals[a]).unwrap());
    let mut best = (0.0, vals[0]);
    for k in peaks.into_iter().take(refine.max(1)) {
        let x = k as f64 * h;
        let cand = golden_max(|t| f(t).abs(), x - h, x + h, 1e-12);
        if cand.1 > best.1 {
            best = cand;
        }
    }
    (best.0.rem_euclid(TAU), best.1)
}
