//! One marginal predictor per feature: class-conditional densities on a
//! shared grid, the normalized density-difference ratio q with low-density
//! masking, and LOESS smoothing of q.

use serde::{Deserialize, Serialize};

use crate::dataset::BinaryLabels;
use crate::error::Result;
use crate::smoothing::{
    bandwidth_nrd0, kde_cosine_on_grid, loess_fit, DensityEstimate, Grid, LoessConfig, GRID_POINTS,
};

/// Mixture-density level below which q is not evaluated.
pub const LOW_DENSITY_MASK: f64 = 0.1;

/// Empirical class frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassPriors {
    pub pi1: f64,
    pub pi2: f64,
}

impl ClassPriors {
    pub fn from_counts(n1: usize, n2: usize) -> Self {
        let n = (n1 + n2) as f64;
        ClassPriors { pi1: n1 as f64 / n, pi2: n2 as f64 / n }
    }
}

/// A fitted univariate predictor: the smoothed q curve on a 512-point grid.
///
/// Degenerate columns (a class with fewer than 2 observed values, fewer
/// than 2 distinct pooled values, or fewer than 2 unmasked grid points)
/// produce a dead predictor that evaluates to missing everywhere and gets
/// weight 0 downstream.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarginalPredictor {
    pub grid: Option<Grid>,
    /// q before LOESS smoothing; `None` marks masked grid points.
    pub raw_q: Vec<Option<f64>>,
    /// LOESS-smoothed q over the unmasked points; `None` marks masked points.
    pub q_smooth: Vec<Option<f64>>,
    /// Training rows (non-missing in this column) the fit used.
    pub n_train_used: usize,
    pub dead: bool,
}

impl MarginalPredictor {
    pub fn dead(n_train_used: usize) -> Self {
        MarginalPredictor {
            grid: None,
            raw_q: vec![None; GRID_POINTS],
            q_smooth: vec![None; GRID_POINTS],
            n_train_used,
            dead: true,
        }
    }

    pub fn mask(&self) -> Vec<bool> {
        self.q_smooth.iter().map(|v| v.is_none()).collect()
    }
}

/// Class-conditional densities on a shared grid, plus per-feature priors.
///
/// The grid and bandwidth come from the pooled sample; each class density
/// is kernel-estimated, LOESS-smoothed over the grid, and clamped at 0.
/// Priors are class frequencies among the rows observed in this column.
pub fn class_densities(
    col: &[Option<f64>],
    labels: &BinaryLabels,
) -> Option<(DensityEstimate, DensityEstimate, ClassPriors, Grid)> {
    assert_eq!(col.len(), labels.len());
    let mut class1 = Vec::new();
    let mut class2 = Vec::new();
    for (v, &l) in col.iter().zip(labels.iter()) {
        if let Some(x) = v {
            if l == 1 {
                class1.push(*x);
            } else {
                class2.push(*x);
            }
        }
    }
    if class1.len() < 2 || class2.len() < 2 {
        return None;
    }
    let pooled: Vec<f64> = class1.iter().chain(&class2).cloned().collect();
    let distinct = {
        let mut s = pooled.clone();
        s.sort_by(|a, b| a.partial_cmp(b).unwrap());
        s.dedup();
        s.len()
    };
    if distinct < 2 {
        return None;
    }
    let bw = bandwidth_nrd0(&pooled);
    let lo = pooled.iter().cloned().fold(f64::INFINITY, f64::min) - 3.0 * bw;
    let hi = pooled.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 3.0 * bw;
    let grid = Grid::new(lo, hi);
    let priors = ClassPriors::from_counts(class1.len(), class2.len());
    let g1 = smoothed_density(&class1, bw, &grid);
    let g2 = smoothed_density(&class2, bw, &grid);
    Some((g1, g2, priors, grid))
}

fn smoothed_density(xs: &[f64], bw: f64, grid: &Grid) -> DensityEstimate {
    let raw = kde_cosine_on_grid(xs, bw, grid);
    let smoothed = loess_fit(grid.points(), &raw.values, &LoessConfig::default(), grid.points())
        .expect("grid has enough points");
    DensityEstimate {
        grid: grid.clone(),
        values: smoothed.into_iter().map(|v| v.max(0.0)).collect(),
        bandwidth: bw,
    }
}

/// `(g1 - g2) / (pi1*g1 + pi2*g2)`, masked where the mixture density falls
/// below [`LOW_DENSITY_MASK`].
pub fn raw_q(g1: f64, g2: f64, priors: &ClassPriors) -> Option<f64> {
    debug_assert!(g1 >= 0.0 && g2 >= 0.0);
    let mixture = priors.pi1 * g1 + priors.pi2 * g2;
    if mixture < LOW_DENSITY_MASK {
        None
    } else {
        Some((g1 - g2) / mixture)
    }
}

/// Fit one feature's marginal predictor.
pub fn fit_marginal(col: &[Option<f64>], labels: &BinaryLabels) -> Result<MarginalPredictor> {
    let n_train_used = col.iter().filter(|v| v.is_some()).count();
    let Some((g1, g2, priors, grid)) = class_densities(col, labels) else {
        return Ok(MarginalPredictor::dead(n_train_used));
    };
    let raw: Vec<Option<f64>> = (0..GRID_POINTS)
        .map(|i| raw_q(g1.values[i], g2.values[i], &priors))
        .collect();

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (i, q) in raw.iter().enumerate() {
        if let Some(v) = q {
            xs.push(grid.points()[i]);
            ys.push(*v);
        }
    }
    if xs.len() < 2 {
        return Ok(MarginalPredictor::dead(n_train_used));
    }
    let fitted = loess_fit(&xs, &ys, &LoessConfig::default(), &xs)?;
    let mut q_smooth = vec![None; GRID_POINTS];
    let mut k = 0;
    for (i, q) in raw.iter().enumerate() {
        if q.is_some() {
            q_smooth[i] = Some(fitted[k]);
            k += 1;
        }
    }
    Ok(MarginalPredictor { grid: Some(grid), raw_q: raw, q_smooth, n_train_used, dead: false })
}

/// Evaluate a predictor at a point. Inside the grid: linear interpolation,
/// missing if either bracketing point is masked. Outside: the nearest
/// endpoint's value if unmasked. Missing input stays missing.
pub fn evaluate(p: &MarginalPredictor, x: Option<f64>) -> Option<f64> {
    let x = x?;
    if p.dead {
        return None;
    }
    let grid = p.grid.as_ref()?;
    if x <= grid.lo {
        return p.q_smooth[0];
    }
    if x >= grid.hi {
        return p.q_smooth[GRID_POINTS - 1];
    }
    let i = grid.bracket(x);
    let x0 = grid.points()[i];
    let x1 = grid.points()[i + 1];
    // exact hit on a grid point uses that point alone
    if x == x0 {
        return p.q_smooth[i];
    }
    if x == x1 {
        return p.q_smooth[i + 1];
    }
    let (v0, v1) = (p.q_smooth[i]?, p.q_smooth[i + 1]?);
    let t = (x - x0) / (x1 - x0);
    Some(v0 + t * (v1 - v0))
}
