use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("label column {0:?} must contain exactly 2 distinct non-missing values, found {1}")]
    BadLabelColumn(String, usize),
    #[error("column {0:?} not found in header")]
    ColumnNotFound(String),
    #[error("event column contains value {0:?}, expected 0 or 1")]
    BadEventValue(String),
    #[error("no usable features")]
    NoUsableFeatures,
    #[error("no predictive features")]
    NoPredictiveFeatures,
    #[error("column {0:?} is entirely missing, cannot impute")]
    AllMissingColumn(String),
    #[error("row {0} shares no observed column with any candidate row")]
    NoSharedColumns(usize),
    #[error("no failures observed")]
    NoEvents,
    #[error("degenerate threshold: a derived class is empty")]
    DegenerateThreshold,
    #[error("no comparable pairs")]
    NoComparablePairs,
    #[error("both classes must be present")]
    SingleClass,
    #[error("row has {got} columns, model expects {expected}")]
    ColumnCountMismatch { expected: usize, got: usize },
    #[error("model file version {found:?} not supported (expected {expected:?})")]
    ModelVersion { expected: String, found: String },
    #[error("model file corrupted: {0}")]
    ModelParse(#[from] serde_json::Error),
}
