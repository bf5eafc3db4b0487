//! Command-line front end: argument definitions, flag parsing, and the four
//! command drivers.
//!
//! Every run writes `manifest.json` echoing the fully resolved
//! configuration, so the exact run can be repeated from its output
//! directory alone. File writes are atomic (temp file + rename) and happen
//! at the end of each stage.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bootstrap::{bootstrap_predict, percentile_intervals, point_auc, PredictionMatrix};
use crate::error::{Error, Result};
use crate::logistic::LogisticConfig;
use crate::pairwise::{confidence_sweep, evaluate, SweepRow};
use crate::rates::{build_curve, integrate_curve, IntegrationRule, Pairing};
use crate::report::{
    curves_to_csv, intervals_from_csv, labels_from_csv, labels_to_csv, matrix_from_csv,
    matrix_to_csv, sweep_to_csv, three_region_to_csv, to_json_pretty, validation_to_csv,
    write_atomic, CurveDiagnostic, DiagnosticsDocument, ReportDocument,
};
use crate::svg::{bounds_figure, roc_figure, three_region_figure};
use crate::synth::{validate_bounds, SyntheticConfig};
use crate::tabular::{impute_zeros_with_median, load_csv, stratified_split};

/// Uncertainty-aware ROC analysis for interval-valued binary predictions.
#[derive(Debug, Parser)]
#[command(name = "iroc", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an interval file: AUC range, pair regions, selective
    /// metrics, optional optimal-AUC bounds, curves and figure.
    Eval(EvalArgs),
    /// Sweep confidence levels over a persisted prediction matrix.
    Sweep(SweepArgs),
    /// Full pipeline on raw tabular data: split, bootstrap-refit logistic
    /// models, persist the prediction matrix, then sweep.
    Bootstrap(BootstrapArgs),
    /// Validate the optimal-AUC bounds in a known-posterior synthetic world.
    SynthBounds(SynthBoundsArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Interval CSV with header columns label,lower,upper.
    #[arg(long)]
    pub input: PathBuf,
    /// Output directory (created if missing).
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Positive-class interval miscoverage rate for optimal-AUC bounds
    /// (requires --alpha-neg).
    #[arg(long)]
    pub alpha_pos: Option<f64>,
    /// Negative-class interval miscoverage rate (requires --alpha-pos).
    #[arg(long)]
    pub alpha_neg: Option<f64>,
    /// Nominal confidence level of the input intervals, in percent
    /// (metadata echoed into the report).
    #[arg(long)]
    pub confidence_level: Option<f64>,
    /// Comma list of artifact kinds to write: json,csv,svg.
    #[arg(long, default_value = "json,csv,svg")]
    pub emit: String,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Headerless prediction-matrix CSV (replicates x instances).
    #[arg(long)]
    pub input: PathBuf,
    /// One-column CSV of 0/1 instance labels, aligned with matrix columns.
    #[arg(long)]
    pub labels: PathBuf,
    /// Comma list of confidence levels in percent, strictly increasing.
    #[arg(long, default_value = "50,70,90,95")]
    pub levels: String,
    /// Empirical quantile rule for interval endpoints (only "type7", the
    /// linear-interpolation rule, is supported; "linear" is an alias).
    #[arg(long, default_value = "type7")]
    pub quantile_rule: String,
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Comma list of artifact kinds to write: json,csv,svg.
    #[arg(long, default_value = "json,csv,svg")]
    pub emit: String,
}

#[derive(Debug, Args)]
pub struct BootstrapArgs {
    /// Raw tabular CSV with a header row and a binary label column.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Label column name.
    #[arg(long, default_value = "Outcome")]
    pub label_column: String,
    /// Comma list of feature columns whose zeros are replaced by the
    /// column median over non-zero values before any split.
    #[arg(long)]
    pub impute_zero_cols: Option<String>,
    /// Fraction of rows (per class) used for training.
    #[arg(long, default_value_t = 0.30)]
    pub train_frac: f64,
    /// Master seed for the split and all bootstrap replicates.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Number of bootstrap replicates.
    #[arg(long = "bootstrap-B", default_value_t = 300)]
    pub bootstrap_b: usize,
    /// L2 regularization strength; defaults to 1/n_train.
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Newton iteration cap for each logistic fit.
    #[arg(long, default_value_t = 100)]
    pub max_iter: usize,
    /// Gradient-norm convergence tolerance.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Comma list of confidence levels in percent, strictly increasing.
    #[arg(long, default_value = "50,70,90,95")]
    pub levels: String,
    /// Empirical quantile rule (only "type7" / alias "linear").
    #[arg(long, default_value = "type7")]
    pub quantile_rule: String,
    /// Comma list of artifact kinds to write: json,csv,svg.
    #[arg(long, default_value = "json,csv,svg")]
    pub emit: String,
}

#[derive(Debug, Args)]
pub struct SynthBoundsArgs {
    /// Comma list of per-class miscoverage rates (fractions in [0, 1)).
    #[arg(
        long,
        default_value = "0.01,0.02,0.03,0.04,0.05,0.06,0.07,0.08,0.09,0.10"
    )]
    pub alphas: String,
    /// Samples per class in each synthetic world.
    #[arg(long, default_value_t = 20_000)]
    pub n_per_class: usize,
    /// Negative-class Gaussian mean.
    #[arg(long, default_value_t = 0.0)]
    pub mu0: f64,
    /// Positive-class Gaussian mean.
    #[arg(long, default_value_t = 1.0)]
    pub mu1: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Comma list of artifact kinds to write: json,csv,svg.
    #[arg(long, default_value = "json,csv,svg")]
    pub emit: String,
}

/// Which artifact classes a run writes. The manifest is always written,
/// and an emitted SVG always brings the CSV of its underlying points.
#[derive(Debug, Clone, Copy)]
pub struct EmitFlags {
    pub json: bool,
    pub csv: bool,
    pub svg: bool,
}

pub fn parse_emit(spec: &str) -> Result<EmitFlags> {
    let mut flags = EmitFlags {
        json: false,
        csv: false,
        svg: false,
    };
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token {
            "json" => flags.json = true,
            "csv" => flags.csv = true,
            "svg" => flags.svg = true,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown emit kind {other:?} (expected json, csv, svg)"
                )))
            }
        }
    }
    if !(flags.json || flags.csv || flags.svg) {
        return Err(Error::InvalidInput("empty --emit list".into()));
    }
    Ok(flags)
}

/// Parses a comma list of percent levels into strictly increasing fractions
/// in [0, 1).
pub fn parse_levels(spec: &str) -> Result<Vec<f64>> {
    let mut levels = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let percent: f64 = token.parse().map_err(|_| Error::InvalidLevels {
            reason: format!("unparseable level {token:?}"),
        })?;
        if !(0.0..100.0).contains(&percent) || percent.is_nan() {
            return Err(Error::InvalidLevels {
                reason: format!("level {percent} outside [0, 100) percent"),
            });
        }
        levels.push(percent / 100.0);
    }
    if levels.is_empty() {
        return Err(Error::InvalidLevels {
            reason: "no levels supplied".into(),
        });
    }
    for w in levels.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::InvalidLevels {
                reason: "levels must be strictly increasing".into(),
            });
        }
    }
    Ok(levels)
}

/// Parses a comma list of miscoverage fractions.
pub fn parse_alphas(spec: &str) -> Result<Vec<f64>> {
    let mut alphas = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: f64 = token.parse().map_err(|_| {
            Error::InvalidInput(format!("unparseable miscoverage rate {token:?}"))
        })?;
        alphas.push(v);
    }
    if alphas.is_empty() {
        return Err(Error::InvalidInput("empty alpha list".into()));
    }
    Ok(alphas)
}

/// The only supported quantile rule is linear interpolation between order
/// statistics ("type7"); "linear" is accepted as an alias.
pub fn parse_quantile_rule(spec: &str) -> Result<String> {
    match spec.trim() {
        "type7" | "linear" => Ok("type7".to_string()),
        other => Err(Error::InvalidInput(format!(
            "unsupported quantile rule {other:?}; only \"type7\" (alias \"linear\") is available"
        ))),
    }
}

/// Full resolved configuration of one run, echoed to `manifest.json`.
/// Fields that a command does not use stay null.
#[derive(Debug, Serialize)]
pub struct Manifest {
    pub command: String,
    pub input: Option<String>,
    pub labels: Option<String>,
    pub out_dir: String,
    pub emit: Vec<String>,
    pub levels: Option<Vec<f64>>,
    pub seed: Option<u64>,
    pub bootstrap_b: Option<usize>,
    pub train_frac: Option<f64>,
    pub lambda: Option<f64>,
    pub max_iter: Option<usize>,
    pub tol: Option<f64>,
    pub label_column: Option<String>,
    pub impute_zero_cols: Option<Vec<String>>,
    pub quantile_rule: Option<String>,
    pub alpha_pos: Option<f64>,
    pub alpha_neg: Option<f64>,
    pub confidence_level: Option<f64>,
    pub alphas: Option<Vec<f64>>,
    pub n_per_class: Option<usize>,
    pub mu0: Option<f64>,
    pub mu1: Option<f64>,
}

impl Manifest {
    fn new(command: &str, out_dir: &Path, emit: EmitFlags) -> Manifest {
        let mut kinds = Vec::new();
        if emit.json {
            kinds.push("json".to_string());
        }
        if emit.csv {
            kinds.push("csv".to_string());
        }
        if emit.svg {
            kinds.push("svg".to_string());
        }
        Manifest {
            command: command.to_string(),
            input: None,
            labels: None,
            out_dir: out_dir.display().to_string(),
            emit: kinds,
            levels: None,
            seed: None,
            bootstrap_b: None,
            train_frac: None,
            lambda: None,
            max_iter: None,
            tol: None,
            label_column: None,
            impute_zero_cols: None,
            quantile_rule: None,
            alpha_pos: None,
            alpha_neg: None,
            confidence_level: None,
            alphas: None,
            n_per_class: None,
            mu0: None,
            mu1: None,
        }
    }

    fn write(&self, out_dir: &Path) -> Result<()> {
        write_atomic(&out_dir.join("manifest.json"), &to_json_pretty(self)?)
    }
}

/// Sidecar describing a persisted prediction matrix, sufficient for exact
/// reruns of the producing command.
#[derive(Debug, Serialize)]
pub struct MatrixMeta {
    pub replicates: usize,
    pub n_train: usize,
    pub n_test: usize,
    pub master_seed: u64,
    pub train_frac: f64,
    pub lambda_resolved: f64,
    pub max_iter: usize,
    pub tol: f64,
    pub label_column: String,
    pub feature_names: Vec<String>,
    pub quantile_rule: String,
    pub point_auc_bootstrap_means: f64,
    pub replicate_seeds: Vec<u64>,
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Eval(args) => run_eval(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Bootstrap(args) => run_bootstrap(args),
        Command::SynthBounds(args) => run_synth_bounds(args),
    }
}

fn percent_to_fraction(percent: f64) -> Result<f64> {
    if !(0.0..100.0).contains(&percent) || percent.is_nan() {
        return Err(Error::InvalidLevels {
            reason: format!("confidence level {percent} outside [0, 100) percent"),
        });
    }
    Ok(percent / 100.0)
}

fn run_eval(args: EvalArgs) -> Result<()> {
    let emit = parse_emit(&args.emit)?;
    let alphas = match (args.alpha_pos, args.alpha_neg) {
        (Some(p), Some(n)) => Some((p, n)),
        (None, None) => None,
        _ => {
            return Err(Error::InvalidInput(
                "--alpha-pos and --alpha-neg must be given together".into(),
            ))
        }
    };
    let confidence_level = args.confidence_level.map(percent_to_fraction).transpose()?;

    let dataset = intervals_from_csv(&args.input)?;
    dataset.require_both_classes()?;
    let report = evaluate(&dataset, alphas, confidence_level)?;

    let strict = build_curve(&dataset, Pairing::Strict)?;
    let permissive = build_curve(&dataset, Pairing::Permissive)?;
    let diag = |curve, counting: f64| -> Result<CurveDiagnostic> {
        let trapezoid_area = integrate_curve(curve, IntegrationRule::Trapezoid)?;
        let step_area = integrate_curve(curve, IntegrationRule::Step)?;
        Ok(CurveDiagnostic {
            counting,
            trapezoid_area,
            step_area,
            trapezoid_delta: (trapezoid_area - counting).abs(),
            step_delta: (step_area - counting).abs(),
        })
    };
    let diagnostics = DiagnosticsDocument {
        strict: diag(&strict, report.auc_l)?,
        permissive: diag(&permissive, report.auc_u)?,
    };

    let out = &args.out_dir;
    if emit.json {
        write_atomic(
            &out.join("report.json"),
            &to_json_pretty(&ReportDocument::from(&report))?,
        )?;
        write_atomic(&out.join("diagnostics.json"), &to_json_pretty(&diagnostics)?)?;
    }
    if emit.csv || emit.svg {
        write_atomic(&out.join("curves.csv"), &curves_to_csv(&[&strict, &permissive]))?;
    }
    if emit.svg {
        write_atomic(
            &out.join("roc.svg"),
            &roc_figure(&strict, &permissive, report.auc_l, report.auc_u),
        )?;
    }

    let mut manifest = Manifest::new("eval", out, emit);
    manifest.input = Some(args.input.display().to_string());
    manifest.alpha_pos = args.alpha_pos;
    manifest.alpha_neg = args.alpha_neg;
    manifest.confidence_level = confidence_level;
    manifest.write(out)?;
    Ok(())
}

/// Shared sweep stage: evaluates all levels against a prediction matrix and
/// writes the sweep table, the three-region series (always anchored at
/// level 0), and the stacked figure.
fn sweep_outputs(
    matrix: &PredictionMatrix,
    labels: &[u8],
    levels: &[f64],
    emit: EmitFlags,
    out_dir: &Path,
) -> Result<()> {
    let rows = confidence_sweep(
        |level| percentile_intervals(matrix, labels, level),
        levels,
    )?;

    // The plotted series always includes the point-prediction anchor.
    let mut series = rows.clone();
    if levels.first().is_some_and(|&l| l > 0.0) {
        let ds = percentile_intervals(matrix, labels, 0.0)?;
        let report = evaluate(&ds, None, Some(0.0))?;
        series.insert(
            0,
            SweepRow {
                level: 0.0,
                report,
            },
        );
    }

    if emit.csv {
        write_atomic(&out_dir.join("sweep.csv"), &sweep_to_csv(&rows))?;
    }
    if emit.csv || emit.svg {
        write_atomic(
            &out_dir.join("three_region.csv"),
            &three_region_to_csv(&series),
        )?;
    }
    if emit.svg {
        write_atomic(&out_dir.join("three_region.svg"), &three_region_figure(&series))?;
    }
    Ok(())
}

fn run_sweep(args: SweepArgs) -> Result<()> {
    let emit = parse_emit(&args.emit)?;
    let levels = parse_levels(&args.levels)?;
    let quantile_rule = parse_quantile_rule(&args.quantile_rule)?;
    let matrix = matrix_from_csv(&args.input)?;
    let labels = labels_from_csv(&args.labels)?;
    sweep_outputs(&matrix, &labels, &levels, emit, &args.out_dir)?;

    let mut manifest = Manifest::new("sweep", &args.out_dir, emit);
    manifest.input = Some(args.input.display().to_string());
    manifest.labels = Some(args.labels.display().to_string());
    manifest.levels = Some(levels);
    manifest.quantile_rule = Some(quantile_rule);
    manifest.write(&args.out_dir)?;
    Ok(())
}

fn run_bootstrap(args: BootstrapArgs) -> Result<()> {
    let emit = parse_emit(&args.emit)?;
    let levels = parse_levels(&args.levels)?;
    let quantile_rule = parse_quantile_rule(&args.quantile_rule)?;
    let impute_cols: Option<Vec<String>> = args.impute_zero_cols.as_ref().map(|spec| {
        spec.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(String::from)
            .collect()
    });

    let mut data = load_csv(&args.input, &args.label_column)?;
    if let Some(cols) = &impute_cols {
        impute_zeros_with_median(&mut data, cols)?;
    }
    let (train, test) = stratified_split(&data, args.train_frac, args.seed)?;
    let lambda_resolved = args.lambda.unwrap_or(1.0 / train.n_rows() as f64);
    let config = LogisticConfig {
        lambda: args.lambda,
        max_iter: args.max_iter,
        tol: args.tol,
    };
    let matrix = bootstrap_predict(&train, &test, args.bootstrap_b, args.seed, &config)?;
    let means = matrix.column_means();
    let baseline_auc = point_auc(&means, &test.labels)?;

    let out = &args.out_dir;
    if emit.csv {
        write_atomic(&out.join("matrix.csv"), &matrix_to_csv(&matrix))?;
        write_atomic(&out.join("labels.csv"), &labels_to_csv(&test.labels))?;
    }
    if emit.json || emit.csv {
        let meta = MatrixMeta {
            replicates: matrix.n_replicates(),
            n_train: train.n_rows(),
            n_test: test.n_rows(),
            master_seed: args.seed,
            train_frac: args.train_frac,
            lambda_resolved,
            max_iter: args.max_iter,
            tol: args.tol,
            label_column: args.label_column.clone(),
            feature_names: data.feature_names.clone(),
            quantile_rule: quantile_rule.clone(),
            point_auc_bootstrap_means: baseline_auc,
            replicate_seeds: matrix.replicate_seeds.clone(),
        };
        write_atomic(&out.join("matrix_meta.json"), &to_json_pretty(&meta)?)?;
    }
    sweep_outputs(&matrix, &test.labels, &levels, emit, out)?;

    let mut manifest = Manifest::new("bootstrap", out, emit);
    manifest.input = Some(args.input.display().to_string());
    manifest.levels = Some(levels);
    manifest.seed = Some(args.seed);
    manifest.bootstrap_b = Some(args.bootstrap_b);
    manifest.train_frac = Some(args.train_frac);
    // The manifest echoes the *resolved* configuration so that replaying it
    // reproduces the run even where a value was defaulted from the data.
    manifest.lambda = Some(lambda_resolved);
    manifest.max_iter = Some(args.max_iter);
    manifest.tol = Some(args.tol);
    manifest.label_column = Some(args.label_column);
    manifest.impute_zero_cols = impute_cols;
    manifest.quantile_rule = Some(quantile_rule);
    manifest.write(out)?;
    Ok(())
}

fn run_synth_bounds(args: SynthBoundsArgs) -> Result<()> {
    let emit = parse_emit(&args.emit)?;
    let alphas = parse_alphas(&args.alphas)?;
    let template = SyntheticConfig {
        mu0: args.mu0,
        mu1: args.mu1,
        n_per_class: args.n_per_class,
        alpha: 0.0,
        seed: args.seed,
    };
    let rows = validate_bounds(&template, &alphas)?;

    let out = &args.out_dir;
    if emit.csv || emit.svg {
        write_atomic(&out.join("validation.csv"), &validation_to_csv(&rows))?;
    }
    if emit.svg {
        write_atomic(&out.join("bounds.svg"), &bounds_figure(&rows))?;
    }

    let mut manifest = Manifest::new("synth-bounds", out, emit);
    manifest.seed = Some(args.seed);
    manifest.alphas = Some(alphas);
    manifest.n_per_class = Some(args.n_per_class);
    manifest.mu0 = Some(args.mu0);
    manifest.mu1 = Some(args.mu1);
    manifest.write(out)?;
    Ok(())
}
