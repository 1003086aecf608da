//! Smooth Rank: bipartite ranking by unsupervised aggregation of
//! univariate density-ratio predictors.
//!
//! Each feature gets its own marginal predictor built from class-conditional
//! kernel density estimates, smoothed with LOESS and masked in low-density
//! regions. Predictors are combined with AUC-derived weights into a single
//! missing-aware scoring function. Survival data is handled by reducing it
//! to a two-class problem with a class-balancing time threshold and scoring
//! against Harrell's concordance index.

pub mod dataset;
pub mod error;
pub mod harness;
pub mod marginal;
pub mod metrics;
pub mod ranker;
pub mod smoothing;
pub mod survival;

pub use dataset::{BinaryLabels, FeatureMatrix, ImputationConfig, SplitSpec};
pub use error::{Error, Result};
pub use marginal::{ClassPriors, MarginalPredictor};
pub use metrics::EvalReport;
pub use ranker::SmoothRankModel;
pub use survival::SurvivalRecord;
