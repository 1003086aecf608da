//! Numerical kernels: cosine-kernel density estimation on a fixed 512-point
//! grid and degree-1 LOESS (locally weighted linear regression).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of grid points used for every density / predictor curve.
pub const GRID_POINTS: usize = 512;

/// Equally spaced evaluation grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    points: Vec<f64>,
}

impl Grid {
    /// 512 equally spaced points spanning `[lo, hi]`.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo < hi, "grid range must be non-degenerate");
        let step = (hi - lo) / (GRID_POINTS - 1) as f64;
        let points = (0..GRID_POINTS).map(|i| lo + step * i as f64).collect();
        Grid { lo, hi, points }
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn step(&self) -> f64 {
        (self.hi - self.lo) / (GRID_POINTS - 1) as f64
    }

    /// Index of the grid interval containing `x`, i.e. the largest `i` with
    /// `points[i] <= x`, clamped to `[0, GRID_POINTS-2]`. Caller checks range.
    pub fn bracket(&self, x: f64) -> usize {
        let i = ((x - self.lo) / self.step()).floor() as isize;
        i.clamp(0, GRID_POINTS as isize - 2) as usize
    }
}

/// Kernel density estimate evaluated on a [`Grid`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityEstimate {
    pub grid: Grid,
    pub values: Vec<f64>,
    pub bandwidth: f64,
}

/// LOESS settings. Degree is fixed at 1; only the span varies.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LoessConfig {
    pub span: f64,
}

impl Default for LoessConfig {
    fn default() -> Self {
        LoessConfig { span: 0.75 }
    }
}

/// Silverman's rule-of-thumb bandwidth: `0.9 * min(sd, IQR/1.34) * n^(-1/5)`.
///
/// Degenerate samples (constant data, collapsed IQR with zero sd) fall back
/// to `max(1e-3 * max|x|, 1e-6)` so downstream grids stay non-degenerate.
pub fn bandwidth_nrd0(xs: &[f64]) -> f64 {
    assert!(!xs.is_empty());
    let n = xs.len() as f64;
    let sd = if xs.len() > 1 {
        let mean = xs.iter().sum::<f64>() / n;
        (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    let iqr = quantile_type7(xs, 0.75) - quantile_type7(xs, 0.25);
    let spread = if sd > 0.0 && iqr > 0.0 {
        sd.min(iqr / 1.34)
    } else if sd > 0.0 {
        sd
    } else {
        0.0
    };
    let bw = 0.9 * spread * n.powf(-0.2);
    if bw > 0.0 {
        bw
    } else {
        let amax = xs.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        (1e-3 * amax).max(1e-6)
    }
}

/// Linear-interpolation quantile (R type 7).
fn quantile_type7(xs: &[f64], p: f64) -> f64 {
    let mut s = xs.to_vec();
    s.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let h = (s.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if lo + 1 < s.len() {
        s[lo] + frac * (s[lo + 1] - s[lo])
    } else {
        s[lo]
    }
}

/// Cosine kernel `K(u) = (pi/4) cos(pi u / 2)` on `[-1, 1]`.
pub fn cosine_kernel(u: f64) -> f64 {
    if u.abs() <= 1.0 {
        std::f64::consts::FRAC_PI_4 * (std::f64::consts::FRAC_PI_2 * u).cos()
    } else {
        0.0
    }
}

/// Density value `(1/(n*bw)) * sum_j K((r - x_j)/bw)` at a single point.
pub fn kde_value_at(xs: &[f64], bw: f64, r: f64) -> f64 {
    let sum: f64 = xs.iter().map(|&x| cosine_kernel((r - x) / bw)).sum();
    sum / (xs.len() as f64 * bw)
}

/// Cosine-kernel density estimate on a 512-point grid spanning the data
/// range extended by 3 bandwidths on each side.
pub fn kde_cosine(xs: &[f64], bw: f64) -> DensityEstimate {
    assert!(bw > 0.0);
    let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min) - 3.0 * bw;
    let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 3.0 * bw;
    let grid = Grid::new(lo, hi);
    kde_cosine_on_grid(xs, bw, &grid)
}

/// Same estimate evaluated on a caller-supplied grid (used when two class
/// densities must share one grid).
pub fn kde_cosine_on_grid(xs: &[f64], bw: f64, grid: &Grid) -> DensityEstimate {
    assert!(bw > 0.0);
    let values = grid.points().iter().map(|&r| kde_value_at(xs, bw, r)).collect();
    DensityEstimate { grid: grid.clone(), values, bandwidth: bw }
}

/// Degree-1 LOESS: for each target, fit a tricube-weighted least-squares
/// line over the `ceil(span * n)` nearest x-values and evaluate it there.
///
/// A degenerate local design (all selected x equal) falls back to the
/// weighted mean of the selected y.
pub fn loess_fit(x: &[f64], y: &[f64], cfg: &LoessConfig, targets: &[f64]) -> Result<Vec<f64>> {
    if x.len() != y.len() {
        return Err(Error::InvalidData("loess: x and y lengths differ".into()));
    }
    if x.len() < 2 {
        return Err(Error::InvalidData("loess: need at least 2 points".into()));
    }
    let n = x.len();
    let q = ((cfg.span * n as f64).ceil() as usize).clamp(1, n);

    // Sort once by x; nearest-q selection per target is a window scan.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| x[a].partial_cmp(&x[b]).unwrap());
    let xs: Vec<f64> = order.iter().map(|&i| x[i]).collect();
    let ys: Vec<f64> = order.iter().map(|&i| y[i]).collect();

    let mut out = Vec::with_capacity(targets.len());
    for &t in targets {
        let (lo, hi) = nearest_window(&xs, t, q);
        let dmax = (xs[lo] - t).abs().max((xs[hi - 1] - t).abs());
        let mut sw = 0.0;
        let mut swx = 0.0;
        let mut swy = 0.0;
        let mut swxx = 0.0;
        let mut swxy = 0.0;
        for i in lo..hi {
            let d = (xs[i] - t).abs();
            let w = if dmax > 0.0 {
                let u = d / dmax;
                if u >= 1.0 {
                    0.0
                } else {
                    (1.0 - u * u * u).powi(3)
                }
            } else {
                1.0
            };
            sw += w;
            swx += w * xs[i];
            swy += w * ys[i];
            swxx += w * xs[i] * xs[i];
            swxy += w * xs[i] * ys[i];
        }
        let det = sw * swxx - swx * swx;
        // Center-scale check: det can be tiny purely from magnitude.
        let scale = sw * swxx.max(1.0);
        if det.abs() <= 1e-12 * scale.max(1.0) || sw == 0.0 {
            out.push(if sw > 0.0 { swy / sw } else { f64::NAN });
        } else {
            let slope = (sw * swxy - swx * swy) / det;
            let intercept = (swy - slope * swx) / sw;
            out.push(intercept + slope * t);
        }
    }
    Ok(out)
}

/// Window `[lo, hi)` of the `q` x-values nearest to `t` in sorted `xs`.
fn nearest_window(xs: &[f64], t: f64, q: usize) -> (usize, usize) {
    let n = xs.len();
    let mut lo = xs.partition_point(|&v| v < t);
    let mut hi = lo;
    while hi - lo < q {
        if lo == 0 {
            hi += 1;
        } else if hi == n {
            lo -= 1;
        } else if (t - xs[lo - 1]).abs() <= (xs[hi] - t).abs() {
            lo -= 1;
        } else {
            hi += 1;
        }
    }
    (lo, hi)
}
