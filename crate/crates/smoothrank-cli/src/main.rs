//! Command-line front end: train/score/inspect a Smooth Rank model, plus
//! repeated-split classification and survival benchmarks and k-NN imputation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand};
use serde::Deserialize;

use smoothrank::dataset::{filter_sparse_features, knn_impute, load_csv, LoadedDataset};
use smoothrank::harness::{
    bench_rank, bench_surv, per_split_csv, summary_csv, summary_table, BenchConfig, BenchOutcome,
    SummaryRow,
};
use smoothrank::ranker::train;
use smoothrank::{Error, ImputationConfig, SmoothRankModel, SplitSpec};

const EXIT_USER: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "smoothrank", version, about = "Smooth Rank bipartite ranking toolkit")]
struct Cli {
    /// Worker threads for benchmark repeats (0 = all cores, 1 = serial)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a model on a labelled CSV and write it as versioned JSON
    Train(CommonArgs),
    /// Score rows of a CSV with a saved model (CSV of row,score)
    Score(CommonArgs),
    /// Repeated-split classification benchmark (mean test AUC)
    BenchRank(CommonArgs),
    /// Repeated-split survival benchmark (mean test concordance index)
    BenchSurv(CommonArgs),
    /// Dump a model's per-feature curves as CSV
    Inspect(CommonArgs),
    /// k-NN impute missing feature values and write the completed CSV
    Impute(CommonArgs),
}

#[derive(Args, Default)]
struct CommonArgs {
    /// JSON config file; command-line flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
    /// Input CSV with a header row ("NA" or empty cells are missing)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Saved model file (score / inspect)
    #[arg(long)]
    model: Option<PathBuf>,
    /// Class label column name
    #[arg(long)]
    label_col: Option<String>,
    /// Survival time column name
    #[arg(long)]
    time_col: Option<String>,
    /// Event indicator column name (1 = event, 0 = censored)
    #[arg(long)]
    event_col: Option<String>,
    /// Master seed for the split sequence
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random train/test splits
    #[arg(long)]
    repeats: Option<usize>,
    /// Fraction of rows in the training fold
    #[arg(long)]
    train_frac: Option<f64>,
    /// Impute missing values with k-NN (use --no-impute to disable)
    #[arg(long, action = ArgAction::SetTrue)]
    impute: bool,
    #[arg(long, action = ArgAction::SetTrue, conflicts_with = "impute")]
    no_impute: bool,
    /// Impute folds separately (test from training donors) instead of
    /// imputing the full dataset before splitting
    #[arg(long, action = ArgAction::SetTrue)]
    impute_train_only: bool,
    /// Drop features whose missing fraction exceeds this threshold
    #[arg(long)]
    missing_filter: Option<f64>,
    /// Output path (model file, scores CSV, report CSV, ...)
    #[arg(long)]
    out: Option<PathBuf>,
}

/// The same fields as the flags, loadable from a single JSON file.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    input: Option<PathBuf>,
    model: Option<PathBuf>,
    label_col: Option<String>,
    time_col: Option<String>,
    event_col: Option<String>,
    seed: Option<u64>,
    repeats: Option<usize>,
    train_frac: Option<f64>,
    impute: Option<bool>,
    impute_train_only: Option<bool>,
    missing_filter: Option<f64>,
    out: Option<PathBuf>,
}

/// Flags merged over the config file merged over defaults.
struct RunConfig {
    input: Option<PathBuf>,
    model: Option<PathBuf>,
    label_col: Option<String>,
    time_col: Option<String>,
    event_col: Option<String>,
    split: SplitSpec,
    impute: bool,
    impute_train_only: bool,
    missing_filter: f64,
    out: Option<PathBuf>,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn user(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USER, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoPredictiveFeatures
            | Error::NoUsableFeatures
            | Error::NoSharedColumns(_)
            | Error::DegenerateThreshold
            | Error::NoComparablePairs
            | Error::SingleClass => EXIT_INTERNAL,
            _ => EXIT_USER,
        };
        CliError { code, message: e.to_string() }
    }
}

fn merge(args: CommonArgs) -> Result<RunConfig, CliError> {
    let file: FileConfig = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::user(format!("cannot read config {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::user(format!("bad config {}: {e}", path.display())))?
        }
        None => FileConfig::default(),
    };

    let defaults = SplitSpec::default();
    let split = SplitSpec::new(
        args.train_frac.or(file.train_frac).unwrap_or(defaults.train_fraction),
        args.repeats.or(file.repeats).unwrap_or(defaults.n_repeats),
        args.seed.or(file.seed).unwrap_or(defaults.seed),
    )?;
    let impute = if args.impute {
        true
    } else if args.no_impute {
        false
    } else {
        file.impute.unwrap_or(true)
    };
    Ok(RunConfig {
        input: args.input.or(file.input),
        model: args.model.or(file.model),
        label_col: args.label_col.or(file.label_col),
        time_col: args.time_col.or(file.time_col),
        event_col: args.event_col.or(file.event_col),
        split,
        impute,
        impute_train_only: args.impute_train_only || file.impute_train_only.unwrap_or(false),
        missing_filter: args.missing_filter.or(file.missing_filter).unwrap_or(0.2),
        out: args.out.or(file.out),
    })
}

fn require<'a, T>(field: &'a Option<T>, flag: &str) -> Result<&'a T, CliError> {
    field.as_ref().ok_or_else(|| CliError::user(format!("{flag} is required")))
}

fn bench_config(cfg: &RunConfig) -> BenchConfig {
    BenchConfig {
        split: cfg.split.clone(),
        impute: cfg.impute,
        impute_train_only: cfg.impute_train_only,
        max_missing_frac: cfg.missing_filter,
        knn: ImputationConfig::default(),
    }
}

fn load(cfg: &RunConfig) -> Result<LoadedDataset, CliError> {
    let input = require(&cfg.input, "--input")?;
    let data = load_csv(
        input,
        cfg.label_col.as_deref(),
        cfg.time_col.as_deref(),
        cfg.event_col.as_deref(),
    )?;
    for w in &data.warnings {
        eprintln!("warning: {w}");
    }
    Ok(data)
}

fn write_or_print(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::user(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dataset_name(input: &Path) -> String {
    input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "data".into())
}

fn report_outcome(cfg: &RunConfig, input: &Path, outcome: &BenchOutcome, n_rows: usize, n_cols: usize) -> Result<(), CliError> {
    let row = SummaryRow {
        dataset: dataset_name(input),
        n_rows,
        n_cols,
        metric_name: outcome.report.metric_name.clone(),
        mean: outcome.report.mean,
        sd: outcome.report.sd,
        mean_features_used: outcome.report.mean_features_used,
    };
    print!("{}", summary_table(&[row.clone()]));
    print!("{}", summary_csv(&[row]));
    if outcome.resampled_splits > 0 {
        eprintln!("note: {} split(s) redrawn (training fold had no events)", outcome.resampled_splits);
    }
    if outcome.degenerate_splits > 0 {
        eprintln!("note: {} split(s) skipped (no predictive features)", outcome.degenerate_splits);
    }
    if outcome.dropped_scores > 0 {
        eprintln!("note: {} test row score(s) missing and dropped", outcome.dropped_scores);
    }
    if cfg.out.is_some() {
        write_or_print(&cfg.out, &per_split_csv(&outcome.report))?;
    }
    Ok(())
}

fn cmd_train(cfg: &RunConfig) -> Result<(), CliError> {
    require(&cfg.label_col, "--label-col")?;
    let data = load(cfg)?;
    let labels = data.labels.expect("label column was requested");
    let matrix = filter_sparse_features(&data.matrix, cfg.missing_filter)?;
    let matrix =
        if cfg.impute { knn_impute(&matrix, &ImputationConfig::default())? } else { matrix };
    let mut model = train(&matrix, &labels)?;
    model.label_mapping = data.label_mapping;
    model.provenance.seed = Some(cfg.split.seed);
    let out = cfg.out.clone().unwrap_or_else(|| PathBuf::from("model.json"));
    model.save(&out)?;
    println!(
        "trained on {} rows x {} features; {} feature(s) retained; model written to {}",
        matrix.n_rows(),
        matrix.n_cols(),
        model.n_features_used(),
        out.display()
    );
    Ok(())
}

fn cmd_score(cfg: &RunConfig) -> Result<(), CliError> {
    let model = SmoothRankModel::load(require(&cfg.model, "--model")?)?;
    let data = load(cfg)?;
    // keep exactly the model's features, in model order; extra columns
    // (e.g. the label) are ignored
    let names = data.matrix.col_names();
    let cols: Vec<usize> = model
        .feature_names
        .iter()
        .map(|f| {
            names
                .iter()
                .position(|n| n == f)
                .ok_or_else(|| CliError::user(format!("input lacks model feature column {f:?}")))
        })
        .collect::<Result<_, _>>()?;
    let matrix = data.matrix.select_columns(&cols)?;
    let scores = model.score_matrix(&matrix)?;
    let mut out = String::from("row,score\n");
    for (i, s) in scores.iter().enumerate() {
        match s {
            Some(v) => out.push_str(&format!("{i},{v}\n")),
            None => out.push_str(&format!("{i},NA\n")),
        }
    }
    write_or_print(&cfg.out, &out)
}

fn cmd_bench_rank(cfg: &RunConfig) -> Result<(), CliError> {
    require(&cfg.label_col, "--label-col")?;
    let data = load(cfg)?;
    let labels = data.labels.expect("label column was requested");
    let outcome = bench_rank(&data.matrix, &labels, &bench_config(cfg))?;
    let input = cfg.input.as_ref().unwrap();
    report_outcome(cfg, input, &outcome, data.matrix.n_rows(), data.matrix.n_cols())
}

fn cmd_bench_surv(cfg: &RunConfig) -> Result<(), CliError> {
    require(&cfg.time_col, "--time-col")?;
    require(&cfg.event_col, "--event-col")?;
    let data = load(cfg)?;
    let records = data.survival.expect("time and event columns were requested");
    let outcome = bench_surv(&data.matrix, &records, &bench_config(cfg))?;
    let input = cfg.input.as_ref().unwrap();
    report_outcome(cfg, input, &outcome, data.matrix.n_rows(), data.matrix.n_cols())
}

fn cmd_inspect(cfg: &RunConfig) -> Result<(), CliError> {
    let model = SmoothRankModel::load(require(&cfg.model, "--model")?)?;
    let mut out = String::from("feature,grid,raw_q,q_smooth,masked,weight\n");
    let fmt = |v: &Option<f64>| v.map(|x| x.to_string()).unwrap_or_else(|| "NA".into());
    for (i, p) in model.predictors.iter().enumerate() {
        let name = &model.feature_names[i];
        let weight = model.weights[i];
        for g in 0..p.raw_q.len() {
            let grid_val = p.grid.as_ref().map(|gr| gr.points()[g].to_string()).unwrap_or_else(|| "NA".into());
            out.push_str(&format!(
                "{name},{grid_val},{},{},{},{weight}\n",
                fmt(&p.raw_q[g]),
                fmt(&p.q_smooth[g]),
                p.q_smooth[g].is_none() as u8,
            ));
        }
    }
    write_or_print(&cfg.out, &out)
}

fn cmd_impute(cfg: &RunConfig) -> Result<(), CliError> {
    let data = load(cfg)?;
    let matrix = filter_sparse_features(&data.matrix, cfg.missing_filter)?;
    let completed = knn_impute(&matrix, &ImputationConfig::default())?;

    let mut header: Vec<String> = completed.col_names().to_vec();
    if let Some(name) = &cfg.label_col {
        header.push(name.clone());
    }
    if let Some(name) = &cfg.time_col {
        header.push(name.clone());
    }
    if let Some(name) = &cfg.event_col {
        header.push(name.clone());
    }
    let mut out = header.join(",");
    out.push('\n');
    for r in 0..completed.n_rows() {
        let mut cells: Vec<String> = completed
            .row(r)
            .iter()
            .map(|v| v.map(|x| x.to_string()).unwrap_or_else(|| "NA".into()))
            .collect();
        if let Some(labels) = &data.labels {
            let raw = data.label_mapping.as_ref().expect("mapping recorded with labels");
            cells.push(if labels[r] == 1 { raw.0.clone() } else { raw.1.clone() });
        }
        if let Some(records) = &data.survival {
            if cfg.time_col.is_some() {
                cells.push(records[r].time.to_string());
            }
            if cfg.event_col.is_some() {
                cells.push(records[r].event.to_string());
            }
        }
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    write_or_print(&cfg.out, &out)
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .map_err(|e| CliError { code: EXIT_INTERNAL, message: e.to_string() })?;
    }
    match cli.command {
        Command::Train(a) => cmd_train(&merge(a)?),
        Command::Score(a) => cmd_score(&merge(a)?),
        Command::BenchRank(a) => cmd_bench_rank(&merge(a)?),
        Command::BenchSurv(a) => cmd_bench_surv(&merge(a)?),
        Command::Inspect(a) => cmd_inspect(&merge(a)?),
        Command::Impute(a) => cmd_impute(&merge(a)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
