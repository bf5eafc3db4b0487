//! Known-posterior synthetic world for validating the optimal-AUC bounds.
//!
//! Two unit-variance Gaussian class-conditionals with equal priors give a
//! closed-form posterior, so the best achievable AUC is computable exactly
//! from the sample. Intervals are built around the true posterior with a
//! controlled per-class miscoverage rate, which lets the bound guarantee be
//! checked against ground truth across the whole miscoverage range.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interval::{ClassedIntervalDataset, IntervalPrediction};
use crate::logistic::sigmoid;
use crate::pairwise::{classical_auc, optimal_auc_bounds, pairwise_counts};
use crate::seeding::{derive_seed, stream};

/// Configuration of one synthetic world.
#[derive(Debug, Clone, Copy)]
pub struct SyntheticConfig {
    /// Mean of the negative-class feature Gaussian.
    pub mu0: f64,
    /// Mean of the positive-class feature Gaussian.
    pub mu1: f64,
    /// Draws per class.
    pub n_per_class: usize,
    /// Injected per-class miscoverage rate (same for both classes).
    pub alpha: f64,
    pub seed: u64,
}

impl SyntheticConfig {
    fn validate(&self) -> Result<()> {
        if self.n_per_class < 2 {
            return Err(Error::InvalidInput(format!(
                "n_per_class must be at least 2, got {}",
                self.n_per_class
            )));
        }
        if !self.mu0.is_finite() || !self.mu1.is_finite() {
            return Err(Error::InvalidInput(
                "class means must be finite".into(),
            ));
        }
        if !(0.0..1.0).contains(&self.alpha) || self.alpha.is_nan() {
            return Err(Error::AlphaOutOfRange {
                name: "alpha",
                value: self.alpha,
            });
        }
        Ok(())
    }
}

/// One feature draw with its exact posterior; no interval attached yet.
#[derive(Debug, Clone, Copy)]
pub struct WorldSample {
    pub x: f64,
    pub label: u8,
    /// True posterior probability of class 1 at `x`.
    pub eta: f64,
}

/// A world sample with its (possibly deliberately miscovering) interval.
#[derive(Debug, Clone, Copy)]
pub struct SyntheticSample {
    pub x: f64,
    pub label: u8,
    pub eta: f64,
    pub interval: IntervalPrediction,
    /// Whether `eta` lies inside the final (clipped) interval.
    pub covered: bool,
}

/// One row of a bound-validation table.
#[derive(Debug, Clone, Copy)]
pub struct BoundValidationRow {
    pub alpha: f64,
    pub auc_l: f64,
    pub auc_u: f64,
    /// Pair-miss probability at equal per-class miscoverage: `2α − α²`.
    pub p_pair: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    /// Best achievable AUC in this sample (pairwise fraction on posteriors).
    pub auc_star: f64,
    /// Whether `auc_star` landed inside `[lower_bound, upper_bound]`.
    pub contained: bool,
}

/// Exact posterior of class 1 for equal-prior, unit-variance Gaussian
/// class-conditionals with means `mu0` and `mu1`:
/// `sigmoid((mu1 − mu0)·x − (mu1² − mu0²)/2)`.
pub fn posterior_eta(x: f64, mu0: f64, mu1: f64) -> f64 {
    sigmoid((mu1 - mu0) * x - (mu1 * mu1 - mu0 * mu0) / 2.0)
}

/// Draws `n_per_class` samples from each class-conditional, each carrying
/// its exact posterior. Deterministic under the config seed: all negative
/// draws first, then all positive draws, from one derived RNG stream.
pub fn generate_world(config: &SyntheticConfig) -> Result<Vec<WorldSample>> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(config.seed, stream::WORLD, 0));
    let mut samples = Vec::with_capacity(2 * config.n_per_class);
    for (label, mu) in [(0u8, config.mu0), (1u8, config.mu1)] {
        let normal = Normal::new(mu, 1.0).expect("unit variance is valid");
        for _ in 0..config.n_per_class {
            let x = normal.sample(&mut rng);
            samples.push(WorldSample {
                x,
                label,
                eta: posterior_eta(x, config.mu0, config.mu1),
            });
        }
    }
    Ok(samples)
}

/// Population (divide-by-n) standard deviation.
fn std_pop(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n).sqrt()
}

/// Attaches intervals with injected miscoverage `alpha` to the samples.
///
/// The common half-width is `δ = 0.05 + 0.3α + 0.1·std(η)` with the
/// standard deviation taken over the pooled posteriors of this sample.
/// Exactly `round(α · n_c)` uniformly-chosen samples per class get their
/// interval center shifted off the posterior by `δ + ε`, `ε ~ U(0.01, 0.1)`
/// drawn per sample with a fair random sign, which puts `η` outside the
/// interval; everyone else gets the centered interval `[η−δ, η+δ]`. All
/// endpoints are clipped to [0, 1]. Clipping never lets a shifted interval
/// recapture its posterior (the near endpoint only moves away from `η`),
/// but a sign-flip guard enforces that invariant anyway.
pub fn build_intervals(
    samples: &[WorldSample],
    alpha: f64,
    seed: u64,
) -> Result<Vec<SyntheticSample>> {
    if !(0.0..=1.0).contains(&alpha) || alpha.is_nan() {
        return Err(Error::AlphaOutOfRange {
            name: "alpha",
            value: alpha,
        });
    }
    let etas: Vec<f64> = samples.iter().map(|s| s.eta).collect();
    let delta = 0.05 + 0.3 * alpha + 0.1 * std_pop(&etas);
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, stream::INTERVALS, 0));

    // Choose exactly round(alpha * n_c) victims per class, uniformly.
    let mut corrupt = vec![false; samples.len()];
    for class in [0u8, 1u8] {
        let mut members: Vec<usize> = samples
            .iter()
            .enumerate()
            .filter(|(_, s)| s.label == class)
            .map(|(i, _)| i)
            .collect();
        let k = (alpha * members.len() as f64).round() as usize;
        for i in 0..k {
            let j = rng.random_range(i..members.len());
            members.swap(i, j);
            corrupt[members[i]] = true;
        }
    }

    let mut out = Vec::with_capacity(samples.len());
    for (i, s) in samples.iter().enumerate() {
        let (lower, upper) = if corrupt[i] {
            let eps: f64 = rng.random_range(0.01..0.1);
            let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
            shifted_interval(s.eta, delta, eps, sign)
        } else {
            ((s.eta - delta).clamp(0.0, 1.0), (s.eta + delta).clamp(0.0, 1.0))
        };
        let interval = IntervalPrediction::new(lower, upper)?;
        out.push(SyntheticSample {
            x: s.x,
            label: s.label,
            eta: s.eta,
            interval,
            covered: interval.contains(s.eta),
        });
    }
    Ok(out)
}

/// Center-shifted interval that misses `eta`, with [0, 1] clipping.
fn shifted_interval(eta: f64, delta: f64, eps: f64, sign: f64) -> (f64, f64) {
    let attempt = |sign: f64| {
        let center = eta + sign * (delta + eps);
        (
            (center - delta).clamp(0.0, 1.0),
            (center + delta).clamp(0.0, 1.0),
        )
    };
    let (l, u) = attempt(sign);
    if l <= eta && eta <= u {
        // Unreachable by construction; shift toward the interior instead.
        attempt(-sign)
    } else {
        (l, u)
    }
}

/// Best achievable sample AUC: pairwise fraction of positive–negative
/// pairs whose posteriors are correctly ordered (ties get half credit).
pub fn true_auc_star(samples: &[WorldSample]) -> Result<f64> {
    let pos: Vec<f64> = samples
        .iter()
        .filter(|s| s.label == 1)
        .map(|s| s.eta)
        .collect();
    let neg: Vec<f64> = samples
        .iter()
        .filter(|s| s.label == 0)
        .map(|s| s.eta)
        .collect();
    classical_auc(&pos, &neg)
}

/// Splits the attached intervals into the evaluation-side dataset.
pub fn to_dataset(samples: &[SyntheticSample]) -> ClassedIntervalDataset {
    let mut positives = Vec::new();
    let mut negatives = Vec::new();
    for s in samples {
        match s.label {
            1 => positives.push(s.interval),
            _ => negatives.push(s.interval),
        }
    }
    ClassedIntervalDataset::new(positives, negatives)
}

/// Empirical (positive, negative) miscoverage rates of attached intervals.
pub fn miscoverage_rates(samples: &[SyntheticSample]) -> (f64, f64) {
    let mut missed = [0usize; 2];
    let mut total = [0usize; 2];
    for s in samples {
        total[s.label as usize] += 1;
        if !s.covered {
            missed[s.label as usize] += 1;
        }
    }
    (
        missed[1] as f64 / total[1].max(1) as f64,
        missed[0] as f64 / total[0].max(1) as f64,
    )
}

/// Runs the full bound validation: one fresh world + interval set per
/// `alpha`, evaluated against the sample's true optimal AUC.
///
/// Row i derives its seed from `(template.seed, i)`, so rows are
/// independent of execution order and run in parallel.
pub fn validate_bounds(
    template: &SyntheticConfig,
    alphas: &[f64],
) -> Result<Vec<BoundValidationRow>> {
    if alphas.is_empty() {
        return Err(Error::InvalidInput(
            "alpha list for bound validation is empty".into(),
        ));
    }
    for &alpha in alphas {
        if !(0.0..1.0).contains(&alpha) || alpha.is_nan() {
            return Err(Error::AlphaOutOfRange {
                name: "alpha",
                value: alpha,
            });
        }
    }
    alphas
        .par_iter()
        .enumerate()
        .map(|(i, &alpha)| -> Result<BoundValidationRow> {
            let row_seed = derive_seed(template.seed, stream::ALPHA_ROW, i as u64);
            let config = SyntheticConfig {
                alpha,
                seed: row_seed,
                ..*template
            };
            let world = generate_world(&config)?;
            let samples = build_intervals(&world, alpha, row_seed)?;
            let dataset = to_dataset(&samples);
            let region = pairwise_counts(&dataset)?;
            let auc_l = region.p_correct;
            let auc_u = region.upper_auc();
            let bounds = optimal_auc_bounds(auc_l, auc_u, alpha, alpha)?;
            let auc_star = true_auc_star(&world)?;
            Ok(BoundValidationRow {
                alpha,
                auc_l,
                auc_u,
                p_pair: bounds.p_pair,
                lower_bound: bounds.lower_bound,
                upper_bound: bounds.upper_bound,
                auc_star,
                contained: bounds.lower_bound <= auc_star && auc_star <= bounds.upper_bound,
            })
        })
        .collect()
}
