//! Data model, CSV ingestion, missing-value handling, sparse-feature
//! filtering, k-NN imputation and seeded random splitting.

use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::survival::SurvivalRecord;

/// Missing-value tokens recognized in CSV input (case-sensitive).
pub const MISSING_TOKENS: [&str; 2] = ["NA", ""];

/// Rectangular numeric data with explicit missing cells, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureMatrix {
    n_rows: usize,
    n_cols: usize,
    values: Vec<Option<f64>>,
    col_names: Vec<String>,
}

impl FeatureMatrix {
    pub fn new(n_rows: usize, n_cols: usize, values: Vec<Option<f64>>, col_names: Vec<String>) -> Result<Self> {
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::InvalidData("matrix must have at least one row and one column".into()));
        }
        if values.len() != n_rows * n_cols || col_names.len() != n_cols {
            return Err(Error::InvalidData("matrix shape mismatch".into()));
        }
        if values.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidData("non-finite cell value".into()));
        }
        Ok(FeatureMatrix { n_rows, n_cols, values, col_names })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn col_names(&self) -> &[String] {
        &self.col_names
    }

    pub fn get(&self, row: usize, col: usize) -> Option<f64> {
        self.values[row * self.n_cols + col]
    }

    pub fn row(&self, row: usize) -> &[Option<f64>] {
        &self.values[row * self.n_cols..(row + 1) * self.n_cols]
    }

    /// One column as a vector of optional values.
    pub fn column(&self, col: usize) -> Vec<Option<f64>> {
        (0..self.n_rows).map(|r| self.get(r, col)).collect()
    }

    pub fn missing_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_none()).count()
    }

    /// New matrix keeping only the given columns, order preserved.
    pub fn select_columns(&self, cols: &[usize]) -> Result<FeatureMatrix> {
        if cols.is_empty() {
            return Err(Error::NoUsableFeatures);
        }
        let mut values = Vec::with_capacity(self.n_rows * cols.len());
        for r in 0..self.n_rows {
            for &c in cols {
                values.push(self.get(r, c));
            }
        }
        let names = cols.iter().map(|&c| self.col_names[c].clone()).collect();
        FeatureMatrix::new(self.n_rows, cols.len(), values, names)
    }

    /// New matrix keeping only the given rows, order preserved.
    pub fn select_rows(&self, rows: &[usize]) -> Result<FeatureMatrix> {
        let mut values = Vec::with_capacity(rows.len() * self.n_cols);
        for &r in rows {
            values.extend_from_slice(self.row(r));
        }
        FeatureMatrix::new(rows.len(), self.n_cols, values, self.col_names.clone())
    }
}

/// Class labels, one per row, each 1 or 2.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinaryLabels(Vec<u8>);

impl BinaryLabels {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if labels.iter().any(|&l| l != 1 && l != 2) {
            return Err(Error::InvalidData("labels must be 1 or 2".into()));
        }
        Ok(BinaryLabels(labels))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u8> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// Labels with classes 1 and 2 exchanged.
    pub fn swapped(&self) -> BinaryLabels {
        BinaryLabels(self.0.iter().map(|&l| 3 - l).collect())
    }

    pub fn select(&self, rows: &[usize]) -> BinaryLabels {
        BinaryLabels(rows.iter().map(|&r| self.0[r]).collect())
    }

    pub fn count(&self, class: u8) -> usize {
        self.0.iter().filter(|&&l| l == class).count()
    }
}

impl std::ops::Index<usize> for BinaryLabels {
    type Output = u8;
    fn index(&self, i: usize) -> &u8 {
        &self.0[i]
    }
}

/// Repeated random train/test split parameters.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SplitSpec {
    pub train_fraction: f64,
    pub n_repeats: usize,
    pub seed: u64,
}

impl SplitSpec {
    pub fn new(train_fraction: f64, n_repeats: usize, seed: u64) -> Result<Self> {
        if !(train_fraction > 0.0 && train_fraction < 1.0) {
            return Err(Error::InvalidData("train_fraction must be in (0,1)".into()));
        }
        Ok(SplitSpec { train_fraction, n_repeats, seed })
    }
}

impl Default for SplitSpec {
    fn default() -> Self {
        SplitSpec { train_fraction: 2.0 / 3.0, n_repeats: 100, seed: 0 }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ImputationConfig {
    pub k: usize,
    pub standardize: bool,
}

impl Default for ImputationConfig {
    fn default() -> Self {
        ImputationConfig { k: 5, standardize: true }
    }
}

/// Result of loading a CSV: features plus whatever outcome columns were named.
#[derive(Debug, Clone)]
pub struct LoadedDataset {
    pub matrix: FeatureMatrix,
    pub labels: Option<BinaryLabels>,
    pub survival: Option<Vec<SurvivalRecord>>,
    /// Raw label values mapped to classes (value mapped to 1, value mapped to 2).
    pub label_mapping: Option<(String, String)>,
    /// Per-column integer codings for string-valued feature columns.
    pub codings: Vec<(String, Vec<String>)>,
    pub warnings: Vec<String>,
}

/// Load a CSV with a header row. "NA" and empty cells are missing. A named
/// label column must hold exactly two distinct non-missing values; the
/// lexicographically smaller one maps to class 1. String-valued feature
/// columns are integer-coded in first-appearance order with a warning.
pub fn load_csv(
    path: &Path,
    label_col: Option<&str>,
    time_col: Option<&str>,
    event_col: Option<&str>,
) -> Result<LoadedDataset> {
    let mut reader = csv::ReaderBuilder::new().flexible(false).from_path(path)?;
    let header: Vec<String> = reader.headers()?.iter().map(|s| s.to_string()).collect();
    let find = |name: &str| -> Result<usize> {
        header.iter().position(|h| h == name).ok_or_else(|| Error::ColumnNotFound(name.to_string()))
    };
    let label_idx = label_col.map(find).transpose()?;
    let time_idx = time_col.map(find).transpose()?;
    let event_idx = event_col.map(find).transpose()?;

    let mut rows: Vec<Vec<String>> = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        rows.push(rec.iter().map(|s| s.to_string()).collect());
    }
    if rows.is_empty() {
        return Err(Error::InvalidData("no data rows".into()));
    }

    let special: Vec<usize> = [label_idx, time_idx, event_idx].into_iter().flatten().collect();
    let feature_cols: Vec<usize> = (0..header.len()).filter(|c| !special.contains(c)).collect();
    if feature_cols.is_empty() {
        return Err(Error::InvalidData("no feature columns".into()));
    }

    let is_missing = |s: &str| MISSING_TOKENS.contains(&s);

    // Feature columns: numeric if every non-missing cell parses, else coded.
    let mut codings = Vec::new();
    let mut warnings = Vec::new();
    let mut values: Vec<Option<f64>> = Vec::with_capacity(rows.len() * feature_cols.len());
    let mut parsed_cols: Vec<Vec<Option<f64>>> = Vec::with_capacity(feature_cols.len());
    for &c in &feature_cols {
        let cells: Vec<&str> = rows.iter().map(|r| r[c].as_str()).collect();
        let numeric: Option<Vec<Option<f64>>> = cells
            .iter()
            .map(|s| {
                if is_missing(s) {
                    Some(None)
                } else {
                    s.trim().parse::<f64>().ok().filter(|v| v.is_finite()).map(Some)
                }
            })
            .collect();
        match numeric {
            Some(col) => parsed_cols.push(col),
            None => {
                let mut levels: Vec<String> = Vec::new();
                let mut col = Vec::with_capacity(cells.len());
                for s in &cells {
                    if is_missing(s) {
                        col.push(None);
                    } else {
                        let code = match levels.iter().position(|l| l == s) {
                            Some(i) => i,
                            None => {
                                levels.push(s.to_string());
                                levels.len() - 1
                            }
                        };
                        col.push(Some(code as f64));
                    }
                }
                warnings.push(format!(
                    "column {:?} is non-numeric; integer-coded {} levels in first-appearance order (ordinal assumption)",
                    header[c],
                    levels.len()
                ));
                codings.push((header[c].clone(), levels));
                parsed_cols.push(col);
            }
        }
    }
    for r in 0..rows.len() {
        for col in &parsed_cols {
            values.push(col[r]);
        }
    }
    let col_names = feature_cols.iter().map(|&c| header[c].clone()).collect();
    let matrix = FeatureMatrix::new(rows.len(), feature_cols.len(), values, col_names)?;

    let (labels, label_mapping) = match label_idx {
        None => (None, None),
        Some(c) => {
            let mut distinct: Vec<String> = Vec::new();
            for row in &rows {
                let s = &row[c];
                if is_missing(s) {
                    return Err(Error::InvalidData(format!("missing value in label column {:?}", header[c])));
                }
                if !distinct.contains(s) {
                    distinct.push(s.clone());
                }
            }
            if distinct.len() != 2 {
                return Err(Error::BadLabelColumn(header[c].clone(), distinct.len()));
            }
            distinct.sort();
            let labels = rows
                .iter()
                .map(|row| if row[c] == distinct[0] { 1u8 } else { 2u8 })
                .collect();
            (Some(BinaryLabels::new(labels)?), Some((distinct[0].clone(), distinct[1].clone())))
        }
    };

    let survival = match (time_idx, event_idx) {
        (Some(tc), Some(ec)) => {
            let mut recs = Vec::with_capacity(rows.len());
            for row in &rows {
                let t: f64 = row[tc]
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidData(format!("bad time value {:?}", row[tc])))?;
                let event = match row[ec].trim() {
                    "0" => 0u8,
                    "1" => 1u8,
                    other => return Err(Error::BadEventValue(other.to_string())),
                };
                recs.push(SurvivalRecord::new(t, event)?);
            }
            Some(recs)
        }
        (None, None) => None,
        _ => return Err(Error::InvalidData("time and event columns must be given together".into())),
    };

    Ok(LoadedDataset { matrix, labels, survival, label_mapping, codings, warnings })
}

/// Drop every column whose missing fraction strictly exceeds `max_missing_frac`.
pub fn filter_sparse_features(m: &FeatureMatrix, max_missing_frac: f64) -> Result<FeatureMatrix> {
    let n = m.n_rows() as f64;
    let keep: Vec<usize> = (0..m.n_cols())
        .filter(|&c| {
            let missing = (0..m.n_rows()).filter(|&r| m.get(r, c).is_none()).count() as f64;
            missing / n <= max_missing_frac
        })
        .collect();
    if keep.is_empty() {
        return Err(Error::NoUsableFeatures);
    }
    m.select_columns(&keep)
}

/// Replace every missing cell by the mean of that column over the `k`
/// nearest rows. Distance is Euclidean over the columns observed in both
/// rows (each standardized to zero mean / unit variance over its observed
/// values), divided by the number of shared columns; candidate rows are
/// those with the target column observed.
pub fn knn_impute(m: &FeatureMatrix, cfg: &ImputationConfig) -> Result<FeatureMatrix> {
    impute_with_donors(m, m, cfg, true)
}

/// Impute missing cells of `target` using neighbor rows drawn from
/// `donors`. Column statistics for standardization come from the donors.
/// `exclude_self` skips the donor with the same row index (used when the
/// two matrices are the same object).
pub fn impute_with_donors(
    target: &FeatureMatrix,
    donors: &FeatureMatrix,
    cfg: &ImputationConfig,
    exclude_self: bool,
) -> Result<FeatureMatrix> {
    assert!(cfg.k >= 1);
    assert_eq!(target.n_cols(), donors.n_cols());
    if target.missing_count() == 0 {
        return Ok(target.clone());
    }

    // Column statistics over the donors' observed values.
    let mut means = vec![0.0; donors.n_cols()];
    let mut sds = vec![1.0; donors.n_cols()];
    for c in 0..donors.n_cols() {
        let obs: Vec<f64> = (0..donors.n_rows()).filter_map(|r| donors.get(r, c)).collect();
        if obs.is_empty() {
            return Err(Error::AllMissingColumn(donors.col_names()[c].clone()));
        }
        let mean = obs.iter().sum::<f64>() / obs.len() as f64;
        let sd = if obs.len() > 1 {
            (obs.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (obs.len() - 1) as f64).sqrt()
        } else {
            0.0
        };
        means[c] = mean;
        sds[c] = if sd > 0.0 { sd } else { 1.0 };
    }
    let scale = |v: f64, c: usize| if cfg.standardize { (v - means[c]) / sds[c] } else { v };

    let mut values: Vec<Option<f64>> =
        (0..target.n_rows()).flat_map(|r| target.row(r).to_vec()).collect();
    for r in 0..target.n_rows() {
        for c in 0..target.n_cols() {
            if target.get(r, c).is_some() {
                continue;
            }
            // Candidates: donor rows with the target column observed.
            let mut dists: Vec<(f64, usize)> = Vec::new();
            for cand in 0..donors.n_rows() {
                if (exclude_self && cand == r) || donors.get(cand, c).is_none() {
                    continue;
                }
                let mut shared = 0usize;
                let mut sq = 0.0;
                for j in 0..target.n_cols() {
                    if let (Some(a), Some(b)) = (target.get(r, j), donors.get(cand, j)) {
                        shared += 1;
                        let d = scale(a, j) - scale(b, j);
                        sq += d * d;
                    }
                }
                if shared > 0 {
                    dists.push((sq.sqrt() / shared as f64, cand));
                }
            }
            if dists.is_empty() {
                return Err(Error::NoSharedColumns(r));
            }
            dists.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
            let take = cfg.k.min(dists.len());
            let mean = dists[..take]
                .iter()
                .map(|&(_, cand)| donors.get(cand, c).unwrap())
                .sum::<f64>()
                / take as f64;
            values[r * target.n_cols() + c] = Some(mean);
        }
    }
    FeatureMatrix::new(target.n_rows(), target.n_cols(), values, target.col_names().to_vec())
}

/// One train/test partition of row indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub train: Vec<usize>,
    pub test: Vec<usize>,
}

/// Per-repeat sub-seeds derived from the master seed, so repeats can run
/// in parallel with results identical to serial execution.
pub fn repeat_seeds(spec: &SplitSpec) -> Vec<u64> {
    let mut master = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.n_repeats).map(|_| master.gen()).collect()
}

/// `n_repeats` seeded random partitions; each has
/// `round(train_fraction * n_rows)` training rows.
pub fn random_split(n_rows: usize, spec: &SplitSpec) -> Result<Vec<Split>> {
    if n_rows < 3 {
        return Err(Error::InvalidData("need at least 3 rows to split".into()));
    }
    let n_train = (spec.train_fraction * n_rows as f64).round() as usize;
    Ok(repeat_seeds(spec)
        .into_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let mut idx: Vec<usize> = (0..n_rows).collect();
            idx.shuffle(&mut rng);
            let mut train = idx[..n_train].to_vec();
            let mut test = idx[n_train..].to_vec();
            train.sort_unstable();
            test.sort_unstable();
            Split { train, test }
        })
        .collect())
}

/// Stratified variant: each class is split `train_fraction : rest`
/// independently, so small classes cannot vanish from a training fold.
pub fn stratified_split(labels: &BinaryLabels, spec: &SplitSpec) -> Result<Vec<Split>> {
    if labels.len() < 3 {
        return Err(Error::InvalidData("need at least 3 rows to split".into()));
    }
    Ok(repeat_seeds(spec)
        .into_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let mut train = Vec::new();
            let mut test = Vec::new();
            for class in [1u8, 2u8] {
                let mut idx: Vec<usize> =
                    (0..labels.len()).filter(|&i| labels[i] == class).collect();
                idx.shuffle(&mut rng);
                let n_train = (spec.train_fraction * idx.len() as f64).round() as usize;
                train.extend_from_slice(&idx[..n_train]);
                test.extend_from_slice(&idx[n_train..]);
            }
            train.sort_unstable();
            test.sort_unstable();
            Split { train, test }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_csv(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn load_csv_missing_token() {
        let f = write_csv("a,b\n1,2\nNA,3\n4,5\n");
        let d = load_csv(f.path(), None, None, None).unwrap();
        assert_eq!(d.matrix.n_rows(), 3);
        assert_eq!(d.matrix.n_cols(), 2);
        assert_eq!(d.matrix.missing_count(), 1);
        assert_eq!(d.matrix.get(1, 0), None);
    }

    #[test]
    fn load_csv_label_mapping_lexicographic() {
        let f = write_csv("x,y\n1,yes\n2,no\n3,yes\n");
        let d = load_csv(f.path(), Some("y"), None, None).unwrap();
        let labels = d.labels.unwrap();
        assert_eq!(labels.as_slice(), &[2, 1, 2]);
        assert_eq!(d.label_mapping.unwrap(), ("no".to_string(), "yes".to_string()));
    }

    #[test]
    fn load_csv_bad_event_value() {
        let f = write_csv("x,t,e\n1,5,1\n2,3,2\n");
        let err = load_csv(f.path(), None, Some("t"), Some("e")).unwrap_err();
        assert!(matches!(err, Error::BadEventValue(_)));
    }

    #[test]
    fn load_csv_three_label_values_errors() {
        let f = write_csv("x,y\n1,a\n2,b\n3,c\n");
        assert!(matches!(
            load_csv(f.path(), Some("y"), None, None),
            Err(Error::BadLabelColumn(_, 3))
        ));
    }

    #[test]
    fn load_csv_string_features_coded() {
        let f = write_csv("color,z\nred,1\nblue,2\nred,3\n");
        let d = load_csv(f.path(), None, None, None).unwrap();
        assert_eq!(d.matrix.get(0, 0), Some(0.0));
        assert_eq!(d.matrix.get(1, 0), Some(1.0));
        assert_eq!(d.matrix.get(2, 0), Some(0.0));
        assert_eq!(d.codings.len(), 1);
        assert_eq!(d.warnings.len(), 1);
    }

    #[test]
    fn load_csv_missing_column_name() {
        let f = write_csv("x,y\n1,2\n");
        assert!(matches!(
            load_csv(f.path(), Some("nope"), None, None),
            Err(Error::ColumnNotFound(_))
        ));
    }

    fn matrix(rows: usize, cols: usize, cells: &[Option<f64>]) -> FeatureMatrix {
        let names = (0..cols).map(|c| format!("c{c}")).collect();
        FeatureMatrix::new(rows, cols, cells.to_vec(), names).unwrap()
    }

    #[test]
    fn filter_drops_over_20_percent() {
        // col0: 3/10 missing -> dropped; col1: 2/10 missing -> kept
        let mut cells = Vec::new();
        for r in 0..10 {
            cells.push(if r < 3 { None } else { Some(r as f64) });
            cells.push(if r < 2 { None } else { Some(r as f64) });
        }
        let m = matrix(10, 2, &cells);
        let out = filter_sparse_features(&m, 0.2).unwrap();
        assert_eq!(out.n_cols(), 1);
        assert_eq!(out.col_names(), &["c1".to_string()]);
    }

    #[test]
    fn filter_complete_matrix_unchanged() {
        let cells: Vec<Option<f64>> = (0..6).map(|v| Some(v as f64)).collect();
        let m = matrix(3, 2, &cells);
        assert_eq!(filter_sparse_features(&m, 0.2).unwrap(), m);
    }

    #[test]
    fn filter_all_dropped_errors() {
        let m = matrix(2, 1, &[None, Some(1.0)]);
        assert!(matches!(filter_sparse_features(&m, 0.2), Err(Error::NoUsableFeatures)));
    }

    #[test]
    fn impute_complete_matrix_identity() {
        let cells: Vec<Option<f64>> = (0..6).map(|v| Some(v as f64)).collect();
        let m = matrix(3, 2, &cells);
        assert_eq!(knn_impute(&m, &ImputationConfig::default()).unwrap(), m);
    }

    #[test]
    fn impute_mean_of_five_neighbors() {
        // 6 rows, 2 cols; row 0 missing col 1; the other 5 rows complete.
        let mut cells = vec![Some(0.0), None];
        for r in 1..6 {
            cells.push(Some(r as f64));
            cells.push(Some(10.0 * r as f64));
        }
        let m = matrix(6, 2, &cells);
        let out = knn_impute(&m, &ImputationConfig::default()).unwrap();
        let expected = (10.0 + 20.0 + 30.0 + 40.0 + 50.0) / 5.0;
        assert_eq!(out.get(0, 1), Some(expected));
        assert_eq!(out.missing_count(), 0);
    }

    #[test]
    fn impute_k1_copies_from_duplicate_row() {
        // row 0 duplicates row 1 except for the missing cell.
        let cells = vec![
            Some(1.0), Some(2.0), None,
            Some(1.0), Some(2.0), Some(9.0),
            Some(50.0), Some(-3.0), Some(4.0),
            Some(8.0), Some(8.0), Some(1.0),
        ];
        let m = matrix(4, 3, &cells);
        let out = knn_impute(&m, &ImputationConfig { k: 1, standardize: true }).unwrap();
        // oracle: exhaustive nearest-neighbor search agrees (by construction,
        // the duplicate is at distance 0; all others are strictly farther)
        assert_eq!(out.get(0, 2), Some(9.0));
    }

    #[test]
    fn impute_never_touches_observed_cells() {
        let cells = vec![Some(1.0), None, Some(3.0), Some(4.0), Some(5.0), Some(6.0)];
        let m = matrix(3, 2, &cells);
        let out = knn_impute(&m, &ImputationConfig::default()).unwrap();
        for r in 0..3 {
            for c in 0..2 {
                if let Some(v) = m.get(r, c) {
                    assert_eq!(out.get(r, c), Some(v));
                }
            }
        }
    }

    #[test]
    fn impute_all_missing_column_errors() {
        let m = matrix(2, 2, &[Some(1.0), None, Some(2.0), None]);
        assert!(matches!(
            knn_impute(&m, &ImputationConfig::default()),
            Err(Error::AllMissingColumn(_))
        ));
    }

    #[test]
    fn split_sizes_and_partition() {
        let spec = SplitSpec::new(2.0 / 3.0, 5, 7).unwrap();
        let splits = random_split(9, &spec).unwrap();
        assert_eq!(splits.len(), 5);
        for s in &splits {
            assert_eq!(s.train.len(), 6);
            assert_eq!(s.test.len(), 3);
            let mut all: Vec<usize> = s.train.iter().chain(&s.test).cloned().collect();
            all.sort_unstable();
            assert_eq!(all, (0..9).collect::<Vec<_>>());
        }
    }

    #[test]
    fn split_deterministic_under_seed() {
        let spec = SplitSpec::new(2.0 / 3.0, 3, 42).unwrap();
        assert_eq!(random_split(20, &spec).unwrap(), random_split(20, &spec).unwrap());
    }

    #[test]
    fn split_differs_across_seeds() {
        let a = random_split(20, &SplitSpec::new(2.0 / 3.0, 1, 1000).unwrap()).unwrap();
        let b = random_split(20, &SplitSpec::new(2.0 / 3.0, 1, 1001).unwrap()).unwrap();
        assert_ne!(a[0], b[0]);
    }

    #[test]
    fn stratified_split_keeps_both_classes_in_train() {
        let labels = BinaryLabels::new(
            (0..30).map(|i| if i < 6 { 1 } else { 2 }).collect(),
        )
        .unwrap();
        let spec = SplitSpec::new(2.0 / 3.0, 20, 3).unwrap();
        for s in stratified_split(&labels, &spec).unwrap() {
            let train_labels = labels.select(&s.train);
            assert_eq!(train_labels.count(1), 4); // round(6 * 2/3)
            assert_eq!(train_labels.count(2), 16);
            let mut all: Vec<usize> = s.train.iter().chain(&s.test).cloned().collect();
            all.sort_unstable();
            assert_eq!(all, (0..30).collect::<Vec<_>>());
        }
    }
}
