//! Uncertainty-aware ROC analysis for interval-valued binary risk predictions.
//!
//! Instead of a single score per instance, every prediction here is an
//! interval `[lower, upper]` of plausible scores. Comparing two intervals
//! yields one of three outcomes — strictly above, strictly below, or
//! overlapping — and that trichotomy propagates through the whole analysis:
//!
//! * [`interval`] — the interval type, the pairwise/threshold comparison
//!   rules, and a labelled dataset container.
//! * [`rates`] — conservative and permissive TPR/FPR rate functions, the
//!   shared threshold grid, staircase ROC curves, and numeric integration
//!   (trapezoid and the exact step rule).
//! * [`pairwise`] — O(n log n) three-region pair counting, the interval AUC
//!   band `[auc_l, auc_u]`, the selective metrics `uauc` and
//!   `abstention_rate`, distribution-free bounds on the AUC of the optimal
//!   (oracle) scorer, and the confidence-sweep driver.
//! * [`bootstrap`] + [`logistic`] + [`tabular`] — a fully deterministic
//!   bootstrap laboratory: CSV ingest, stratified splitting, from-scratch
//!   regularised logistic regression, a replicate prediction matrix, and
//!   percentile intervals per test instance.
//! * [`synth`] — a synthetic world with a known posterior, used to validate
//!   the optimal-AUC bounds against the true value they must contain.
//! * [`report`], [`svg`], [`cli`] — JSON/CSV serialisation, self-contained
//!   SVG figures, and the `iroc` command-line front end.
//!
//! All randomness flows from a single master seed through the splittable
//! derivation scheme in [`seeding`], so every artefact is reproducible
//! bit-for-bit across runs and thread counts.

pub mod bootstrap;
pub mod cli;
pub mod error;
pub mod interval;
pub mod logistic;
pub mod pairwise;
pub mod rates;
pub mod report;
pub mod seeding;
pub mod svg;
pub mod synth;
pub mod tabular;

pub use bootstrap::{
    bootstrap_predict, percentile_intervals, point_auc, quantile_type7, PredictionMatrix,
};
pub use error::{Error, Result};
pub use interval::{
    compare_pair, compare_threshold, make_interval, ClassedIntervalDataset, IntervalPrediction,
    PairOrdering, ThresholdRelation,
};
pub use logistic::{fit_logistic, LogisticConfig, LogisticModel};
pub use pairwise::{
    abstention_rate, auc_l, auc_u, classical_auc, confidence_sweep, evaluate, optimal_auc_bounds,
    pairwise_counts, uauc, BoundInterval, EvaluationReport, SweepRow, ThreeRegion,
};
pub use rates::{
    build_curve, integrate_curve, rates_at, threshold_grid, CurvePoint, IntegrationRule, Pairing,
    RateQuadruple, RocCurve,
};
pub use report::{intervals_from_csv, labels_from_csv, matrix_from_csv};
pub use synth::{
    build_intervals, generate_world, posterior_eta, true_auc_star, validate_bounds,
    BoundValidationRow, SyntheticConfig, SyntheticSample, WorldSample,
};
pub use tabular::{load_csv, stratified_split, TabularDataset};
