//! Reduction of survival data to bipartite ranking via a class-balancing
//! time threshold, and Harrell's concordance index for evaluation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One observation: a positive time and an event indicator
/// (1 = failure observed, 0 = right-censored).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurvivalRecord {
    pub time: f64,
    pub event: u8,
}

impl SurvivalRecord {
    pub fn new(time: f64, event: u8) -> Result<Self> {
        if !(time > 0.0) || !time.is_finite() {
            return Err(Error::InvalidData(format!("survival time must be positive, got {time}")));
        }
        if event > 1 {
            return Err(Error::BadEventValue(event.to_string()));
        }
        Ok(SurvivalRecord { time, event })
    }
}

/// Outcome of class-balancing threshold selection.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdResult {
    pub threshold: f64,
    /// Size of the "early failure" class (events with t <= threshold).
    pub n_early: usize,
    /// Size of the "no early failure" class (any record with t > threshold).
    pub n_late: usize,
    /// |n_early - n_late|, the balance criterion.
    pub imbalance: usize,
    /// Censored rows with t <= threshold; their class is unknown.
    pub excluded: Vec<usize>,
}

/// Per-row class assignment after thresholding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassAssignment {
    /// Event no later than the threshold: class 1.
    EarlyFailure,
    /// Time beyond the threshold (event or censored): class 2.
    NoEarlyFailure,
    /// Censored at or before the threshold.
    Excluded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivedClasses {
    pub assignments: Vec<ClassAssignment>,
}

impl DerivedClasses {
    /// Row indices and class labels (1 = early failure, 2 = no early failure)
    /// for the retained rows, in row order.
    pub fn retained(&self) -> (Vec<usize>, Vec<u8>) {
        let mut rows = Vec::new();
        let mut labels = Vec::new();
        for (i, a) in self.assignments.iter().enumerate() {
            match a {
                ClassAssignment::EarlyFailure => {
                    rows.push(i);
                    labels.push(1);
                }
                ClassAssignment::NoEarlyFailure => {
                    rows.push(i);
                    labels.push(2);
                }
                ClassAssignment::Excluded => {}
            }
        }
        (rows, labels)
    }
}

/// Pick the event time T minimizing `|L_T - H_T|`, where `L_T` counts
/// events with t <= T and `H_T` counts records with t > T. Ties in the
/// criterion break toward the smaller T.
pub fn select_threshold(records: &[SurvivalRecord]) -> Result<ThresholdResult> {
    let mut candidates: Vec<f64> =
        records.iter().filter(|r| r.event == 1).map(|r| r.time).collect();
    if candidates.is_empty() {
        return Err(Error::NoEvents);
    }
    candidates.sort_by(|a, b| a.partial_cmp(b).unwrap());
    candidates.dedup();

    let mut best: Option<(usize, f64)> = None;
    for &t in &candidates {
        let early = records.iter().filter(|r| r.event == 1 && r.time <= t).count();
        let late = records.iter().filter(|r| r.time > t).count();
        let h = early.abs_diff(late);
        if best.map_or(true, |(bh, _)| h < bh) {
            best = Some((h, t));
        }
    }
    let (imbalance, threshold) = best.unwrap();
    let n_early = records.iter().filter(|r| r.event == 1 && r.time <= threshold).count();
    let n_late = records.iter().filter(|r| r.time > threshold).count();
    let excluded = records
        .iter()
        .enumerate()
        .filter(|(_, r)| r.event == 0 && r.time <= threshold)
        .map(|(i, _)| i)
        .collect();
    Ok(ThresholdResult { threshold, n_early, n_late, imbalance, excluded })
}

/// Assign each record to early failure / no early failure / excluded.
pub fn derive_classes(records: &[SurvivalRecord], threshold: f64) -> Result<DerivedClasses> {
    let assignments: Vec<ClassAssignment> = records
        .iter()
        .map(|r| {
            if r.time > threshold {
                ClassAssignment::NoEarlyFailure
            } else if r.event == 1 {
                ClassAssignment::EarlyFailure
            } else {
                ClassAssignment::Excluded
            }
        })
        .collect();
    let early = assignments.iter().filter(|a| **a == ClassAssignment::EarlyFailure).count();
    let late = assignments.iter().filter(|a| **a == ClassAssignment::NoEarlyFailure).count();
    if early == 0 || late == 0 {
        return Err(Error::DegenerateThreshold);
    }
    Ok(DerivedClasses { assignments })
}

/// Harrell's concordance index. A pair (i, j) is comparable when
/// `t_i < t_j` and observation i had the event; it is concordant when the
/// earlier failure got the higher score. Tied scores count 1/2. Pair
/// counts are integers (doubled), so the result is exact.
pub fn harrell_cindex(
    records: &[SurvivalRecord],
    scores: &[f64],
    higher_score_means_earlier_failure: bool,
) -> Result<f64> {
    assert_eq!(records.len(), scores.len());
    let mut numer2: u64 = 0;
    let mut comparable: u64 = 0;
    for i in 0..records.len() {
        if records[i].event != 1 {
            continue;
        }
        for j in 0..records.len() {
            if i == j || records[i].time >= records[j].time {
                continue;
            }
            comparable += 1;
            let (si, sj) = if higher_score_means_earlier_failure {
                (scores[i], scores[j])
            } else {
                (-scores[i], -scores[j])
            };
            if si > sj {
                numer2 += 2;
            } else if si == sj {
                numer2 += 1;
            }
        }
    }
    if comparable == 0 {
        return Err(Error::NoComparablePairs);
    }
    Ok(numer2 as f64 / (2 * comparable) as f64)
}
