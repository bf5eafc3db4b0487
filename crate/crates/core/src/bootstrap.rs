//! Bootstrap prediction matrices and percentile prediction intervals.
//!
//! The pipeline refits the whole classifier (standardization included) on
//! each with-replacement resample of the training rows, predicts the fixed
//! test rows, and stacks the predictions into a B×m matrix. Column-wise
//! empirical quantiles of that matrix become per-instance prediction
//! intervals at any confidence level.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interval::{ClassedIntervalDataset, IntervalPrediction};
use crate::logistic::{fit_logistic, LogisticConfig};
use crate::pairwise::classical_auc;
use crate::seeding::{derive_seed, stream};
use crate::tabular::TabularDataset;

/// Maximum redraws when a resample comes up single-class.
const RESAMPLE_RETRY_CAP: u32 = 100;

/// B bootstrap prediction rows over m fixed test instances, plus the seed
/// actually used for each replicate's resampling RNG.
#[derive(Debug, Clone)]
pub struct PredictionMatrix {
    /// `values[b][i]` = replicate b's predicted probability for test row i.
    pub values: Vec<Vec<f64>>,
    /// Final (post-retry) resample seed per replicate, for exact reruns.
    pub replicate_seeds: Vec<u64>,
}

impl PredictionMatrix {
    pub fn n_replicates(&self) -> usize {
        self.values.len()
    }

    pub fn n_instances(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    /// Per-instance mean prediction across replicates (the point-score
    /// baseline the intervals wrap around).
    pub fn column_means(&self) -> Vec<f64> {
        let m = self.n_instances();
        let mut sums = vec![0.0f64; m];
        for row in &self.values {
            for (s, &v) in sums.iter_mut().zip(row) {
                *s += v;
            }
        }
        let b = self.n_replicates() as f64;
        sums.iter_mut().for_each(|s| *s /= b);
        sums
    }
}

/// Draws one with-replacement resample of row indices; `None` if the draw
/// is single-class.
fn draw_resample(train: &TabularDataset, seed: u64) -> Option<Vec<usize>> {
    let n = train.n_rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let indices: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
    let mut saw = [false, false];
    for &i in &indices {
        saw[train.labels[i] as usize] = true;
    }
    if saw[0] && saw[1] {
        Some(indices)
    } else {
        None
    }
}

/// Fits B replicate models on resamples of `train` and predicts `test`.
///
/// Each replicate derives its own seed from `(master_seed, replicate
/// index)`, so replicates are independent of execution order and the whole
/// matrix is a pure function of `(train, test, B, master_seed, config)`.
/// A resample that misses a class is redrawn with a fresh derived seed, up
/// to a fixed retry cap.
pub fn bootstrap_predict(
    train: &TabularDataset,
    test: &TabularDataset,
    b: usize,
    master_seed: u64,
    config: &LogisticConfig,
) -> Result<PredictionMatrix> {
    if b == 0 {
        return Err(Error::InvalidInput(
            "bootstrap replicate count must be at least 1".into(),
        ));
    }
    let rows: Vec<(u64, Vec<f64>)> = (0..b)
        .into_par_iter()
        .map(|replicate| -> Result<(u64, Vec<f64>)> {
            let base = derive_seed(master_seed, stream::RESAMPLE, replicate as u64);
            let mut chosen: Option<(u64, Vec<usize>)> = None;
            for attempt in 0..=RESAMPLE_RETRY_CAP {
                let seed = if attempt == 0 {
                    base
                } else {
                    derive_seed(base, stream::RETRY, attempt as u64)
                };
                if let Some(indices) = draw_resample(train, seed) {
                    chosen = Some((seed, indices));
                    break;
                }
            }
            let (seed, indices) = chosen.ok_or(Error::ResampleRetriesExceeded {
                retries: RESAMPLE_RETRY_CAP,
            })?;
            let resampled = train.select_rows(&indices);
            let model = fit_logistic(&resampled, config)?;
            Ok((seed, model.predict(test)))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut replicate_seeds = Vec::with_capacity(b);
    let mut values = Vec::with_capacity(b);
    for (seed, row) in rows {
        replicate_seeds.push(seed);
        values.push(row);
    }
    Ok(PredictionMatrix {
        values,
        replicate_seeds,
    })
}

/// Linear-interpolation empirical quantile (the "type 7" rule: index
/// `h = (n−1)p`, interpolate between the bracketing order statistics).
/// `sorted` must be ascending; `p` in [0, 1].
pub fn quantile_type7(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    debug_assert!((0.0..=1.0).contains(&p));
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if frac == 0.0 || lo + 1 >= n {
        sorted[lo.min(n - 1)]
    } else {
        sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
    }
}

/// Builds per-instance percentile intervals at confidence level `gamma`
/// (in [0, 1)) from a prediction matrix, partitioned by the true labels.
///
/// With miscoverage `alpha = 1 − gamma`, instance i's interval runs from
/// its column's `alpha/2` quantile to its `1 − alpha/2` quantile; `gamma =
/// 0` collapses to the degenerate interval at the median.
pub fn percentile_intervals(
    matrix: &PredictionMatrix,
    labels: &[u8],
    gamma: f64,
) -> Result<ClassedIntervalDataset> {
    if labels.len() != matrix.n_instances() {
        return Err(Error::MisalignedLabels {
            labels: labels.len(),
            columns: matrix.n_instances(),
        });
    }
    if !(0.0..1.0).contains(&gamma) || gamma.is_nan() {
        return Err(Error::InvalidLevels {
            reason: format!("confidence level {gamma} outside [0, 1)"),
        });
    }
    if matrix.n_replicates() == 0 {
        return Err(Error::InvalidInput("empty prediction matrix".into()));
    }
    let alpha = 1.0 - gamma;
    let mut positives = Vec::new();
    let mut negatives = Vec::new();
    let mut column = vec![0.0f64; matrix.n_replicates()];
    for (i, &label) in labels.iter().enumerate() {
        for (b, row) in matrix.values.iter().enumerate() {
            column[b] = row[i];
        }
        column.sort_unstable_by(f64::total_cmp);
        let lower = quantile_type7(&column, alpha / 2.0);
        let upper = quantile_type7(&column, 1.0 - alpha / 2.0);
        let iv = IntervalPrediction::new(lower, upper)?;
        match label {
            1 => positives.push(iv),
            0 => negatives.push(iv),
            other => {
                return Err(Error::NonBinaryLabel {
                    value: other.to_string(),
                    line: i as u64 + 1,
                })
            }
        }
    }
    Ok(ClassedIntervalDataset::new(positives, negatives))
}

/// Classical point AUC of scalar scores against binary labels (exact ties
/// get half credit). Scores here are typically per-instance bootstrap
/// means.
pub fn point_auc(scores: &[f64], labels: &[u8]) -> Result<f64> {
    if scores.len() != labels.len() {
        return Err(Error::MisalignedLabels {
            labels: labels.len(),
            columns: scores.len(),
        });
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (&s, &l) in scores.iter().zip(labels) {
        match l {
            1 => pos.push(s),
            0 => neg.push(s),
            other => {
                return Err(Error::InvalidInput(format!(
                    "label must be 0 or 1, got {other}"
                )))
            }
        }
    }
    classical_auc(&pos, &neg)
}
