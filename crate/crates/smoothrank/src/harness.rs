//! Benchmark harness: repeated random-split evaluation for classification
//! (mean test AUC) and survival data (mean test concordance index).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::{
    filter_sparse_features, impute_with_donors, knn_impute, stratified_split, BinaryLabels,
    FeatureMatrix, ImputationConfig, Split, SplitSpec,
};
use crate::error::{Error, Result};
use crate::metrics::{aggregate, auc, EvalReport};
use crate::ranker::train;
use crate::survival::{derive_classes, harrell_cindex, select_threshold, SurvivalRecord};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchConfig {
    pub split: SplitSpec,
    pub impute: bool,
    /// Impute the training fold on its own and the test fold from training
    /// donors, instead of imputing the full dataset before splitting.
    pub impute_train_only: bool,
    pub max_missing_frac: f64,
    pub knn: ImputationConfig,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            split: SplitSpec::default(),
            impute: true,
            impute_train_only: false,
            max_missing_frac: 0.2,
            knn: ImputationConfig::default(),
        }
    }
}

/// An [`EvalReport`] plus harness-level bookkeeping.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchOutcome {
    pub report: EvalReport,
    /// Splits redrawn because the training fold had no events (survival only).
    pub resampled_splits: usize,
    /// Test rows dropped for having a missing model score.
    pub dropped_scores: usize,
    /// Splits skipped because training found no predictive features
    /// (possible under null labels); excluded from aggregation.
    pub degenerate_splits: usize,
}

fn prepare(m: &FeatureMatrix, cfg: &BenchConfig) -> Result<FeatureMatrix> {
    let filtered = filter_sparse_features(m, cfg.max_missing_frac)?;
    if cfg.impute && !cfg.impute_train_only {
        knn_impute(&filtered, &cfg.knn)
    } else {
        Ok(filtered)
    }
}

fn fold_matrices(
    m: &FeatureMatrix,
    split: &Split,
    cfg: &BenchConfig,
) -> Result<(FeatureMatrix, FeatureMatrix)> {
    let train_m = m.select_rows(&split.train)?;
    let test_m = m.select_rows(&split.test)?;
    if cfg.impute && cfg.impute_train_only {
        let train_imputed = knn_impute(&train_m, &cfg.knn)?;
        let test_imputed = impute_with_donors(&test_m, &train_m, &cfg.knn, false)?;
        Ok((train_imputed, test_imputed))
    } else {
        Ok((train_m, test_m))
    }
}

/// Repeated-split classification benchmark: per split, train on the
/// training fold and measure the AUC of the scoring function on the test
/// fold (class 1 positive). Test rows with a missing score are dropped.
pub fn bench_rank(m: &FeatureMatrix, y: &BinaryLabels, cfg: &BenchConfig) -> Result<BenchOutcome> {
    let prepared = prepare(m, cfg)?;
    let splits = stratified_split(y, &cfg.split)?;

    let results: Vec<Option<(f64, usize, usize)>> = splits
        .par_iter()
        .map(|split| {
            let (train_m, test_m) = fold_matrices(&prepared, split, cfg)?;
            let train_y = y.select(&split.train);
            let test_y = y.select(&split.test);
            let model = match train(&train_m, &train_y) {
                Err(Error::NoPredictiveFeatures) => return Ok(None),
                other => other?,
            };
            let scores = model.score_matrix(&test_m)?;
            let mut kept_scores = Vec::new();
            let mut kept_labels = Vec::new();
            for (s, &l) in scores.iter().zip(test_y.iter()) {
                if let Some(v) = s {
                    kept_scores.push(*v);
                    kept_labels.push(l);
                }
            }
            let dropped = scores.len() - kept_scores.len();
            let a = auc(&kept_scores, &BinaryLabels::new(kept_labels)?, 1)?;
            Ok(Some((a, model.n_features_used(), dropped)))
        })
        .collect::<Result<_>>()?;

    let degenerate_splits = results.iter().filter(|r| r.is_none()).count();
    let results: Vec<(f64, usize, usize)> = results.into_iter().flatten().collect();
    if results.is_empty() {
        return Err(Error::NoPredictiveFeatures);
    }
    let values: Vec<f64> = results.iter().map(|r| r.0).collect();
    let features: Vec<usize> = results.iter().map(|r| r.1).collect();
    let dropped_scores = results.iter().map(|r| r.2).sum();
    Ok(BenchOutcome {
        report: aggregate("auc", &values, &features),
        resampled_splits: 0,
        dropped_scores,
        degenerate_splits,
    })
}

/// Draw random splits, redrawing any whose training fold contains no
/// events; returns the accepted splits and the redraw count.
fn survival_splits(
    records: &[SurvivalRecord],
    spec: &SplitSpec,
) -> Result<(Vec<Split>, usize)> {
    if records.len() < 3 {
        return Err(Error::InvalidData("need at least 3 rows to split".into()));
    }
    let n = records.len();
    let n_train = (spec.train_fraction * n as f64).round() as usize;
    let mut master = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut splits = Vec::with_capacity(spec.n_repeats);
    let mut resampled = 0;
    let mut attempts = 0;
    while splits.len() < spec.n_repeats {
        attempts += 1;
        if attempts > spec.n_repeats * 100 {
            return Err(Error::NoEvents);
        }
        let sub: u64 = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(sub);
        let mut idx: Vec<usize> = (0..n).collect();
        use rand::seq::SliceRandom;
        idx.shuffle(&mut rng);
        let mut train = idx[..n_train].to_vec();
        let mut test = idx[n_train..].to_vec();
        train.sort_unstable();
        test.sort_unstable();
        if train.iter().all(|&i| records[i].event == 0) {
            resampled += 1;
            continue;
        }
        splits.push(Split { train, test });
    }
    Ok((splits, resampled))
}

/// Repeated-split survival benchmark. Per split: pick the class-balancing
/// threshold on the training fold only, derive classes, drop the excluded
/// censored rows, train Smooth Rank on the rest, then score the test fold
/// and measure Harrell's concordance index against its (time, event) data.
pub fn bench_surv(
    m: &FeatureMatrix,
    records: &[SurvivalRecord],
    cfg: &BenchConfig,
) -> Result<BenchOutcome> {
    if records.len() != m.n_rows() {
        return Err(Error::InvalidData("survival record count != row count".into()));
    }
    let prepared = prepare(m, cfg)?;
    let (splits, resampled_splits) = survival_splits(records, &cfg.split)?;

    let results: Vec<Option<(f64, usize, usize)>> = splits
        .par_iter()
        .map(|split| {
            let (train_m, test_m) = fold_matrices(&prepared, split, cfg)?;
            let train_records: Vec<SurvivalRecord> =
                split.train.iter().map(|&i| records[i]).collect();
            let threshold = select_threshold(&train_records)?;
            let classes = derive_classes(&train_records, threshold.threshold)?;
            let (rows, labels) = classes.retained();
            let train_sub = train_m.select_rows(&rows)?;
            let model = match train(&train_sub, &BinaryLabels::new(labels)?) {
                Err(Error::NoPredictiveFeatures) => return Ok(None),
                other => other?,
            };

            let scores = model.score_matrix(&test_m)?;
            let mut kept_records = Vec::new();
            let mut kept_scores = Vec::new();
            for (s, &i) in scores.iter().zip(&split.test) {
                if let Some(v) = s {
                    kept_records.push(records[i]);
                    kept_scores.push(*v);
                }
            }
            let dropped = scores.len() - kept_scores.len();
            // class 1 = early failure, so higher score means earlier failure
            let ci = harrell_cindex(&kept_records, &kept_scores, true)?;
            Ok(Some((ci, model.n_features_used(), dropped)))
        })
        .collect::<Result<_>>()?;

    let degenerate_splits = results.iter().filter(|r| r.is_none()).count();
    let results: Vec<(f64, usize, usize)> = results.into_iter().flatten().collect();
    if results.is_empty() {
        return Err(Error::NoPredictiveFeatures);
    }
    let values: Vec<f64> = results.iter().map(|r| r.0).collect();
    let features: Vec<usize> = results.iter().map(|r| r.1).collect();
    let dropped_scores = results.iter().map(|r| r.2).sum();
    Ok(BenchOutcome {
        report: aggregate("cindex", &values, &features),
        resampled_splits,
        dropped_scores,
        degenerate_splits,
    })
}

/// One row of the summary table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SummaryRow {
    pub dataset: String,
    pub n_rows: usize,
    pub n_cols: usize,
    pub metric_name: String,
    pub mean: f64,
    pub sd: f64,
    pub mean_features_used: f64,
}

/// Machine-readable summary CSV (one row per dataset).
pub fn summary_csv(rows: &[SummaryRow]) -> String {
    let mut out = String::from("dataset,n_rows,n_cols,metric,mean,sd,mean_features_used\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.dataset, r.n_rows, r.n_cols, r.metric_name, r.mean, r.sd, r.mean_features_used
        ));
    }
    out
}

/// Aligned-text rendering of the summary table.
pub fn summary_table(rows: &[SummaryRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<20} {:>10} {:>8} {:>8} {:>8} {:>10}\n",
        "dataset", "dims", "metric", "mean", "sd", "features"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:<20} {:>10} {:>8} {:>8.3} {:>8.3} {:>10.2}\n",
            r.dataset,
            format!("{}x{}", r.n_rows, r.n_cols),
            r.metric_name,
            r.mean,
            r.sd,
            r.mean_features_used
        ));
    }
    out
}

/// Per-split detail CSV for a report.
pub fn per_split_csv(report: &EvalReport) -> String {
    let mut out = String::from("split,value,n_features_used\n");
    for (id, v, f) in &report.per_split {
        out.push_str(&format!("{},{},{}\n", id, v, f));
    }
    out
}

/// Split manifest CSV: (repeat, row_index, role).
pub fn split_manifest_csv(splits: &[Split]) -> String {
    let mut out = String::from("repeat,row_index,role\n");
    for (rep, s) in splits.iter().enumerate() {
        for &i in &s.train {
            out.push_str(&format!("{},{},train\n", rep, i));
        }
        for &i in &s.test {
            out.push_str(&format!("{},{},test\n", rep, i));
        }
    }
    out
}
