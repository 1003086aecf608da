//! Smooth Rank model assembly: AUC-derived feature weights, post-filter
//! shrinkage, missing-aware score aggregation, and model persistence.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::dataset::{BinaryLabels, FeatureMatrix};
use crate::error::{Error, Result};
use crate::marginal::{evaluate, fit_marginal, ClassPriors, MarginalPredictor};
use crate::metrics::auc;

pub const MODEL_FORMAT_VERSION: &str = "smoothrank-model/1";

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub seed: Option<u64>,
    pub config_digest: String,
}

/// The trained ensemble: one marginal predictor and weight per input column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmoothRankModel {
    pub predictors: Vec<MarginalPredictor>,
    pub weights: Vec<f64>,
    pub priors: ClassPriors,
    pub feature_names: Vec<String>,
    pub label_mapping: Option<(String, String)>,
    pub provenance: Provenance,
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    version: String,
    model: SmoothRankModel,
}

/// Digest of the fixed algorithm settings, recorded in model provenance.
pub fn config_digest() -> String {
    let mut h = Sha256::new();
    h.update(b"grid=512;loess_span=0.75;loess_degree=1;mask=0.1;kernel=optcosine;filter=max/3");
    format!("{:x}", h.finalize())
}

/// `max(AUC(q~, Y) - 0.5, 0)` over training rows with a non-missing
/// evaluation; dead predictors and single-class evaluations give 0.
pub fn compute_weight(p: &MarginalPredictor, col: &[Option<f64>], labels: &BinaryLabels) -> f64 {
    if p.dead {
        return 0.0;
    }
    let mut scores = Vec::new();
    let mut y = Vec::new();
    for (v, &l) in col.iter().zip(labels.iter()) {
        if let Some(s) = evaluate(p, *v) {
            scores.push(s);
            y.push(l);
        }
    }
    let Ok(y) = BinaryLabels::new(y) else { return 0.0 };
    if y.is_empty() {
        return 0.0;
    }
    match auc(&scores, &y, 1) {
        Ok(a) => (a - 0.5).max(0.0),
        Err(_) => 0.0,
    }
}

/// Keep `w_i` iff `w_i > max_j(w_j) / 3` (strict), zero the rest.
pub fn post_filter(weights: &[f64]) -> Result<Vec<f64>> {
    let max = weights.iter().cloned().fold(0.0f64, f64::max);
    if max <= 0.0 {
        return Err(Error::NoPredictiveFeatures);
    }
    // strict comparison, with a relative guard so boundary cases like
    // w = 0.1, max = 0.3 do not pass on f64 rounding alone
    let threshold = max / 3.0;
    Ok(weights
        .iter()
        .map(|&w| if w > threshold * (1.0 + 1e-12) { w } else { 0.0 })
        .collect())
}

/// Fit the whole ensemble: marginal predictors for every column (in
/// parallel, deterministically merged), AUC weights, post-filtering.
pub fn train(m: &FeatureMatrix, y: &BinaryLabels) -> Result<SmoothRankModel> {
    if y.len() != m.n_rows() {
        return Err(Error::InvalidData("label count != row count".into()));
    }
    let (n1, n2) = (y.count(1), y.count(2));
    if n1 < 2 || n2 < 2 {
        return Err(Error::InvalidData("need at least 2 rows per class".into()));
    }

    let columns: Vec<Vec<Option<f64>>> = (0..m.n_cols()).map(|c| m.column(c)).collect();
    let fitted: Vec<(MarginalPredictor, f64)> = columns
        .par_iter()
        .map(|col| {
            let p = fit_marginal(col, y)?;
            let w = compute_weight(&p, col, y);
            Ok((p, w))
        })
        .collect::<Result<_>>()?;

    let (predictors, raw_weights): (Vec<_>, Vec<_>) = fitted.into_iter().unzip();
    let weights = post_filter(&raw_weights)?;

    Ok(SmoothRankModel {
        predictors,
        weights,
        priors: ClassPriors::from_counts(n1, n2),
        feature_names: m.col_names().to_vec(),
        label_mapping: None,
        provenance: Provenance { seed: None, config_digest: config_digest() },
    })
}

impl SmoothRankModel {
    /// Number of features surviving the post-filter.
    pub fn n_features_used(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0.0).count()
    }

    /// Weighted average of the contributing marginal predictions:
    /// `sum w_i q~_i(x^i) / sum w_i` over features with nonzero weight and
    /// a non-missing evaluation. Missing when nothing contributes.
    pub fn score(&self, row: &[Option<f64>]) -> Result<Option<f64>> {
        if row.len() != self.predictors.len() {
            return Err(Error::ColumnCountMismatch {
                expected: self.predictors.len(),
                got: row.len(),
            });
        }
        let mut num = 0.0;
        let mut den = 0.0;
        for ((p, &w), v) in self.predictors.iter().zip(&self.weights).zip(row) {
            if w <= 0.0 {
                continue;
            }
            if let Some(q) = evaluate(p, *v) {
                num += w * q;
                den += w;
            }
        }
        Ok(if den > 0.0 { Some(num / den) } else { None })
    }

    /// Scores for every row of a matrix.
    pub fn score_matrix(&self, m: &FeatureMatrix) -> Result<Vec<Option<f64>>> {
        (0..m.n_rows()).map(|r| self.score(m.row(r))).collect()
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = ModelFile { version: MODEL_FORMAT_VERSION.to_string(), model: self.clone() };
        let json = serde_json::to_string_pretty(&file)?;
        std::fs::write(path, json)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<SmoothRankModel> {
        let text = std::fs::read_to_string(path)?;
        let file: ModelFile = serde_json::from_str(&text)?;
        if file.version != MODEL_FORMAT_VERSION {
            return Err(Error::ModelVersion {
                expected: MODEL_FORMAT_VERSION.to_string(),
                found: file.version,
            });
        }
        Ok(file.model)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn matrix_from_cols(cols: &[Vec<Option<f64>>], names: &[&str]) -> FeatureMatrix {
        let n_rows = cols[0].len();
        let mut values = Vec::new();
        for r in 0..n_rows {
            for col in cols {
                values.push(col[r]);
            }
        }
        FeatureMatrix::new(n_rows, cols.len(), values, names.iter().map(|s| s.to_string()).collect())
            .unwrap()
    }

    fn two_feature_dataset(n: usize, seed: u64) -> (FeatureMatrix, BinaryLabels) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sep = Vec::new();
        let mut noise = Vec::new();
        let mut y = Vec::new();
        for i in 0..n {
            let label = if i % 2 == 0 { 1u8 } else { 2u8 };
            sep.push(Some(if label == 1 { rng.gen::<f64>() } else { 1.5 + rng.gen::<f64>() }));
            noise.push(Some(rng.gen::<f64>() * 2.0));
            y.push(label);
        }
        (matrix_from_cols(&[sep, noise], &["sep", "noise"]), BinaryLabels::new(y).unwrap())
    }

    #[test]
    fn post_filter_strict_threshold() {
        assert_eq!(post_filter(&[0.3, 0.12, 0.05]).unwrap(), vec![0.3, 0.12, 0.0]);
        assert_eq!(post_filter(&[0.2, 0.2, 0.2]).unwrap(), vec![0.2, 0.2, 0.2]);
        // 0.1 > 0.1 is false: strict
        assert_eq!(post_filter(&[0.3, 0.1]).unwrap(), vec![0.3, 0.0]);
        assert!(matches!(post_filter(&[0.0, 0.0]), Err(Error::NoPredictiveFeatures)));
    }

    #[test]
    fn weight_of_perfect_and_constant_predictors() {
        let (m, y) = two_feature_dataset(200, 1);
        let col = m.column(0);
        let p = fit_marginal(&col, &y).unwrap();
        let w = compute_weight(&p, &col, &y);
        assert_abs_diff_eq!(w, 0.5, epsilon = 1e-9); // AUC = 1

        let dead = MarginalPredictor::dead(0);
        assert_eq!(compute_weight(&dead, &col, &y), 0.0);
    }

    #[test]
    fn separating_feature_survives_noise_feature_filtered() {
        let (m, y) = two_feature_dataset(600, 42);
        let model = train(&m, &y).unwrap();
        assert_abs_diff_eq!(model.weights[0], 0.5, epsilon = 0.02);
        assert_eq!(model.weights[1], 0.0);
        assert_eq!(model.n_features_used(), 1);
    }

    #[test]
    fn duplicated_column_gets_equal_weight() {
        let (m, y) = two_feature_dataset(200, 7);
        let col = m.column(0);
        let dup = matrix_from_cols(&[col.clone(), col], &["a", "b"]);
        let model = train(&dup, &y).unwrap();
        assert_abs_diff_eq!(model.weights[0], model.weights[1], epsilon = 1e-9);
    }

    #[test]
    fn column_permutation_leaves_scores_unchanged() {
        let (m, y) = two_feature_dataset(200, 3);
        let permuted = m.select_columns(&[1, 0]).unwrap();
        let a = train(&m, &y).unwrap();
        let b = train(&permuted, &y).unwrap();
        for r in 0..m.n_rows() {
            let row = m.row(r);
            let swapped = [row[1], row[0]];
            assert_eq!(a.score(row).unwrap(), b.score(&swapped).unwrap());
        }
    }

    #[test]
    fn score_is_normalized_weighted_mean() {
        // hand-built model over trivial one-point predictors
        let (m, y) = two_feature_dataset(100, 5);
        let mut model = train(&m, &y).unwrap();
        model.weights = vec![0.1, 0.3];
        // pick a row where both features evaluate (neither lands in a mask)
        let row = (0..m.n_rows())
            .map(|r| m.row(r))
            .find(|row| {
                model
                    .predictors
                    .iter()
                    .zip(row.iter())
                    .all(|(p, v)| crate::marginal::evaluate(p, *v).is_some())
            })
            .expect("some row evaluates on both features");
        let s = model.score(row).unwrap().unwrap();
        let evals: Vec<f64> = model
            .predictors
            .iter()
            .zip(row)
            .map(|(p, v)| crate::marginal::evaluate(p, *v).unwrap())
            .collect();
        let expected = (0.1 * evals[0] + 0.3 * evals[1]) / 0.4;
        assert_abs_diff_eq!(s, expected, epsilon = 1e-12);
        let lo = evals.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = evals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!(s >= lo - 1e-12 && s <= hi + 1e-12);
    }

    #[test]
    fn score_single_contributor_and_all_missing() {
        let (m, y) = two_feature_dataset(100, 6);
        let model = train(&m, &y).unwrap();
        let row = m.row(0);
        let partial = [row[0], None];
        let expected = crate::marginal::evaluate(&model.predictors[0], row[0]);
        assert_eq!(model.score(&partial).unwrap(), expected);
        assert_eq!(model.score(&[None, None]).unwrap(), None);
        assert!(matches!(
            model.score(&[None]),
            Err(Error::ColumnCountMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn weight_scaling_leaves_scores_unchanged() {
        let (m, y) = two_feature_dataset(150, 8);
        let model = train(&m, &y).unwrap();
        let mut scaled = model.clone();
        for w in &mut scaled.weights {
            *w *= 17.5;
        }
        for r in 0..m.n_rows() {
            let a = model.score(m.row(r)).unwrap().unwrap();
            let b = scaled.score(m.row(r)).unwrap().unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn model_round_trip_is_bit_identical() {
        let (m, y) = two_feature_dataset(150, 9);
        let model = train(&m, &y).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("model.json");
        model.save(&path).unwrap();
        let loaded = SmoothRankModel::load(&path).unwrap();
        assert_eq!(model, loaded);
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..100 {
            let row = [Some(rng.gen::<f64>() * 2.5), Some(rng.gen::<f64>() * 10.0)];
            let a = model.score(&row).unwrap();
            let b = loaded.score(&row).unwrap();
            assert_eq!(a, b); // bit-identical, not approximately equal
        }
    }

    #[test]
    fn model_load_rejects_garbage_and_wrong_version() {
        let dir = tempfile::tempdir().unwrap();
        let truncated = dir.path().join("trunc.json");
        std::fs::write(&truncated, "{\"version\": \"smoothrank-mod").unwrap();
        assert!(matches!(SmoothRankModel::load(&truncated), Err(Error::ModelParse(_))));

        let (m, y) = two_feature_dataset(100, 11);
        let model = train(&m, &y).unwrap();
        let path = dir.path().join("v2.json");
        model.save(&path).unwrap();
        let text = std::fs::read_to_string(&path)
            .unwrap()
            .replace("smoothrank-model/1", "smoothrank-model/2");
        std::fs::write(&path, text).unwrap();
        assert!(matches!(SmoothRankModel::load(&path), Err(Error::ModelVersion { .. })));
    }

    #[test]
    fn label_swap_reverses_ranking() {
        let (m, y) = two_feature_dataset(300, 12);
        let a = train(&m, &y).unwrap();
        let b = train(&m, &y.swapped()).unwrap();
        let sa = a.score_matrix(&m).unwrap();
        let sb = b.score_matrix(&m).unwrap();
        // pairwise order must reverse wherever both scores are distinct
        let pairs: Vec<(f64, f64)> =
            sa.iter().zip(&sb).map(|(x, y)| (x.unwrap(), y.unwrap())).collect();
        for i in 0..pairs.len() {
            for j in (i + 1)..pairs.len() {
                let da = pairs[i].0 - pairs[j].0;
                let db = pairs[i].1 - pairs[j].1;
                if da != 0.0 && db != 0.0 {
                    assert!(da.signum() == -db.signum(), "ranking not reversed");
                }
            }
        }
    }
}
