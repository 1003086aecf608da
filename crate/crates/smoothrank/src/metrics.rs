//! Ranking metrics: Mann-Whitney AUC with tie handling and per-split
//! aggregation for the benchmark harness.

use serde::{Deserialize, Serialize};

use crate::dataset::BinaryLabels;
use crate::error::{Error, Result};

/// Per-split metric values plus their aggregate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvalReport {
    pub metric_name: String,
    /// (split id, metric value, number of features with nonzero weight)
    pub per_split: Vec<(usize, f64, usize)>,
    pub mean: f64,
    pub sd: f64,
    pub mean_features_used: f64,
}

/// AUC as the Mann-Whitney statistic: over all positive x negative pairs,
/// `score_pos > score_neg` counts 1, ties count 1/2.
///
/// Computed by a sort and a single pass over tie groups; pair counts are
/// kept as integers (doubled to absorb the halves) so the result is exact.
pub fn auc(scores: &[f64], labels: &BinaryLabels, positive_class: u8) -> Result<f64> {
    assert_eq!(scores.len(), labels.len());
    let n_pos = labels.iter().filter(|&&l| l == positive_class).count();
    let n_neg = labels.len() - n_pos;
    if n_pos == 0 || n_neg == 0 {
        return Err(Error::SingleClass);
    }

    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[a].partial_cmp(&scores[b]).unwrap());

    // Ascending scan: for each tie group, positives beat every negative
    // strictly below and half-win against negatives inside the group.
    let mut numer2: u64 = 0; // twice the number of (weighted) concordant pairs
    let mut neg_below: u64 = 0;
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j < order.len() && scores[order[j]] == scores[order[i]] {
            j += 1;
        }
        let pos_in = order[i..j].iter().filter(|&&k| labels[k] == positive_class).count() as u64;
        let neg_in = (j - i) as u64 - pos_in;
        numer2 += 2 * pos_in * neg_below + pos_in * neg_in;
        neg_below += neg_in;
        i = j;
    }
    Ok(numer2 as f64 / (2 * n_pos as u64 * n_neg as u64) as f64)
}

/// Mean, sample standard deviation and mean feature count across splits.
pub fn aggregate(metric_name: &str, values: &[f64], features_used: &[usize]) -> EvalReport {
    assert!(!values.is_empty());
    assert_eq!(values.len(), features_used.len());
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    // identical values: exactly 0 rather than accumulated mean rounding
    let sd = if values.len() > 1 && values.iter().any(|v| *v != values[0]) {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    let mean_features_used = features_used.iter().sum::<usize>() as f64 / n;
    EvalReport {
        metric_name: metric_name.to_string(),
        per_split: values
            .iter()
            .zip(features_used)
            .enumerate()
            .map(|(i, (&v, &f))| (i, v, f))
            .collect(),
        mean,
        sd,
        mean_features_used,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(v: &[u8]) -> BinaryLabels {
        BinaryLabels::new(v.to_vec()).unwrap()
    }

    #[test]
    fn perfect_separation() {
        let a = auc(&[0.9, 0.8, 0.1, 0.2], &labels(&[1, 1, 2, 2]), 1).unwrap();
        assert_eq!(a, 1.0);
    }

    #[test]
    fn all_ties_is_half() {
        let a = auc(&[0.5; 6], &labels(&[1, 1, 1, 2, 2, 2]), 1).unwrap();
        assert_eq!(a, 0.5);
    }

    #[test]
    fn mixed_pairs() {
        // pairs: 0.7>0.4, 0.7>0.2, 0.3<0.4, 0.3>0.2 -> 3/4
        let a = auc(&[0.7, 0.4, 0.3, 0.2], &labels(&[1, 2, 1, 2]), 1).unwrap();
        assert_eq!(a, 0.75);
    }

    #[test]
    fn single_class_errors() {
        assert!(auc(&[0.1, 0.2], &labels(&[1, 1]), 1).is_err());
    }

    #[test]
    fn negation_complements_exactly() {
        let scores = [0.3, 0.3, 0.7, 0.1, 0.9, 0.5, 0.5];
        let y = labels(&[1, 2, 1, 2, 1, 2, 1]);
        let neg: Vec<f64> = scores.iter().map(|s| -s).collect();
        let a = auc(&scores, &y, 1).unwrap();
        let b = auc(&neg, &y, 1).unwrap();
        assert_eq!(a + b, 1.0);
    }

    #[test]
    fn aggregate_basics() {
        let r = aggregate("auc", &[0.8, 0.9], &[3, 5]);
        assert!((r.mean - 0.85).abs() < 1e-15);
        assert_eq!(r.mean_features_used, 4.0);
        let single = aggregate("auc", &[0.7], &[2]);
        assert_eq!(single.sd, 0.0);
        let same = aggregate("auc", &[0.6; 100], &[1; 100]);
        assert_eq!(same.sd, 0.0);
    }
}
