//! Exact pairwise-counting estimators over positive×negative interval pairs.
//!
//! Every ordered (positive, negative) pair falls into exactly one of three
//! regions: strictly above (a correct ranking), strictly below (an incorrect
//! ranking), or overlap (the comparison abstains). The lower AUC is the
//! correct fraction, the upper AUC is one minus the incorrect fraction, and
//! the gap between them is exactly the overlap mass. Counting is done with
//! integer arithmetic in O(n log n) by sorting negative endpoints once and
//! binary-searching each positive endpoint.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interval::ClassedIntervalDataset;

/// The three-region split of all positive×negative pairs.
///
/// Probabilities are exact integer counts over `pair_count`; the counts are
/// retained so downstream ratios (like the selective AUC) avoid accumulated
/// float error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeRegion {
    /// Empirical probability that a positive interval lies strictly above a
    /// negative one (correct ranking).
    pub p_correct: f64,
    /// Empirical probability of the strictly-below (incorrect) ordering.
    pub p_incorrect: f64,
    /// Empirical probability that the pair overlaps (comparison abstains).
    pub p_overlap: f64,
    /// Total ordered pairs, `n_pos * n_neg`.
    pub pair_count: u64,
    /// Integer count behind `p_correct`.
    pub above_count: u64,
    /// Integer count behind `p_incorrect`.
    pub below_count: u64,
    /// Integer count behind `p_overlap`.
    pub overlap_count: u64,
}

impl ThreeRegion {
    /// Builds the decomposition from raw counts; `above + below` must not
    /// exceed `pair_count`.
    pub fn from_counts(above: u64, below: u64, pair_count: u64) -> Self {
        debug_assert!(above + below <= pair_count);
        let overlap = pair_count - above - below;
        let denom = pair_count as f64;
        ThreeRegion {
            p_correct: above as f64 / denom,
            p_incorrect: below as f64 / denom,
            p_overlap: overlap as f64 / denom,
            pair_count,
            above_count: above,
            below_count: below,
            overlap_count: overlap,
        }
    }

    /// `1 − p_incorrect`, computed as a single division of exact integer
    /// counts. The one-rounding form makes degenerate identities hold
    /// bitwise: with no overlapping pairs it equals `p_correct` exactly,
    /// where `1.0 - p_incorrect` could drift by an ulp.
    pub fn upper_auc(&self) -> f64 {
        (self.above_count + self.overlap_count) as f64 / self.pair_count as f64
    }
}

/// Distribution-free bound interval on the best achievable AUC, given the
/// per-class miscoverage rates of the intervals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInterval {
    /// `raw_lower` clamped to [0, 1] — the quotable bound.
    pub lower_bound: f64,
    /// `raw_upper` clamped to [0, 1] — the quotable bound.
    pub upper_bound: f64,
    /// Unclamped `auc_l - p_pair` (kept for numeric verification).
    pub raw_lower: f64,
    /// Unclamped `auc_u + p_pair`.
    pub raw_upper: f64,
    /// Probability that at least one interval in a pair misses its target:
    /// `alpha_pos + alpha_neg - alpha_pos * alpha_neg`.
    pub p_pair: f64,
    /// Miscoverage rate of the positive-class intervals.
    pub alpha_pos: f64,
    /// Miscoverage rate of the negative-class intervals.
    pub alpha_neg: f64,
}

/// The full metric set for one dataset at one interval construction.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationReport {
    /// Lower AUC: fraction of pairs ranked correctly with certainty.
    pub auc_l: f64,
    /// Upper AUC: one minus the fraction ranked incorrectly with certainty.
    pub auc_u: f64,
    pub three_region: ThreeRegion,
    /// Selective AUC over decisive pairs only; `None` when every pair
    /// overlaps (the conditional probability has a zero denominator).
    pub uauc: Option<f64>,
    /// Fraction of pairs on which the interval comparison abstains.
    pub abstention_rate: f64,
    /// Optimal-AUC bounds, present when miscoverage rates were supplied.
    pub bounds: Option<BoundInterval>,
    /// Nominal coverage level of the interval construction (metadata;
    /// `None` when the intervals did not come from a leveled construction).
    pub confidence_level: Option<f64>,
    pub n_pos: usize,
    pub n_neg: usize,
}

/// Counts the three regions over all ordered positive×negative pairs.
///
/// Sorting the negative uppers ranks each positive lower (strictly-above
/// count); sorting the negative lowers ranks each positive upper
/// (strictly-below count); the remainder overlaps. Identical to the
/// brute-force double loop, in O((n_pos + n_neg) log n) time.
pub fn pairwise_counts(data: &ClassedIntervalDataset) -> Result<ThreeRegion> {
    data.require_both_classes()?;
    let mut neg_uppers: Vec<f64> = data.negatives().iter().map(|iv| iv.upper()).collect();
    let mut neg_lowers: Vec<f64> = data.negatives().iter().map(|iv| iv.lower()).collect();
    neg_uppers.sort_unstable_by(f64::total_cmp);
    neg_lowers.sort_unstable_by(f64::total_cmp);

    let above: u64 = data
        .positives()
        .par_iter()
        .map(|iv| {
            // negatives with upper < this positive's lower
            neg_uppers.partition_point(|&u| u < iv.lower()) as u64
        })
        .sum();
    let below: u64 = data
        .positives()
        .par_iter()
        .map(|iv| {
            // negatives with lower > this positive's upper
            (neg_lowers.len() - neg_lowers.partition_point(|&l| l <= iv.upper())) as u64
        })
        .sum();

    let pair_count = data.n_pos() as u64 * data.n_neg() as u64;
    Ok(ThreeRegion::from_counts(above, below, pair_count))
}

/// Lower AUC via counting: the strictly-correct pair fraction.
pub fn auc_l(data: &ClassedIntervalDataset) -> Result<f64> {
    Ok(pairwise_counts(data)?.p_correct)
}

/// Upper AUC via counting: one minus the strictly-incorrect pair fraction.
pub fn auc_u(data: &ClassedIntervalDataset) -> Result<f64> {
    Ok(pairwise_counts(data)?.upper_auc())
}

/// Selective AUC: correct fraction among decisive (non-overlap) pairs.
/// `None` when there are no decisive pairs — never coerced to 0 or 0.5,
/// which would corrupt sweeps.
pub fn uauc(r: &ThreeRegion) -> Option<f64> {
    let decisive = r.above_count + r.below_count;
    if decisive == 0 {
        None
    } else {
        Some(r.above_count as f64 / decisive as f64)
    }
}

/// Fraction of pairs on which the comparison abstains.
pub fn abstention_rate(r: &ThreeRegion) -> f64 {
    r.p_overlap
}

/// Bounds on the best achievable AUC from the interval metrics plus the
/// per-class interval miscoverage rates.
///
/// A pair can only be mis-assessed when at least one of its two intervals
/// misses its target, which happens with probability at most
/// `p_pair = alpha_pos + alpha_neg - alpha_pos*alpha_neg`; widening
/// `[auc_l, auc_u]` by `p_pair` on each side therefore brackets the optimal
/// AUC. Raw and [0,1]-clamped endpoints are both reported.
pub fn optimal_auc_bounds(
    auc_l: f64,
    auc_u: f64,
    alpha_pos: f64,
    alpha_neg: f64,
) -> Result<BoundInterval> {
    for (name, value) in [("alpha_pos", alpha_pos), ("alpha_neg", alpha_neg)] {
        if !(0.0..=1.0).contains(&value) || value.is_nan() {
            return Err(Error::AlphaOutOfRange { name, value });
        }
    }
    let p_pair = alpha_pos + alpha_neg - alpha_pos * alpha_neg;
    let raw_lower = auc_l - p_pair;
    let raw_upper = auc_u + p_pair;
    Ok(BoundInterval {
        lower_bound: raw_lower.clamp(0.0, 1.0),
        upper_bound: raw_upper.clamp(0.0, 1.0),
        raw_lower,
        raw_upper,
        p_pair,
        alpha_pos,
        alpha_neg,
    })
}

/// Computes the full report for one dataset: counting-route AUCs, the
/// decomposition, selective metrics, and (optionally) optimal-AUC bounds.
pub fn evaluate(
    data: &ClassedIntervalDataset,
    alphas: Option<(f64, f64)>,
    confidence_level: Option<f64>,
) -> Result<EvaluationReport> {
    let region = pairwise_counts(data)?;
    let auc_l = region.p_correct;
    let auc_u = region.upper_auc();
    let bounds = match alphas {
        Some((ap, an)) => Some(optimal_auc_bounds(auc_l, auc_u, ap, an)?),
        None => None,
    };
    Ok(EvaluationReport {
        auc_l,
        auc_u,
        uauc: uauc(&region),
        abstention_rate: abstention_rate(&region),
        three_region: region,
        bounds,
        confidence_level,
        n_pos: data.n_pos(),
        n_neg: data.n_neg(),
    })
}

/// One row of a confidence-level sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub level: f64,
    pub report: EvaluationReport,
}

/// Evaluates the same underlying predictions at a ladder of interval
/// confidence levels. `provider` maps a level in [0, 1) to the dataset of
/// intervals built at that level (level 0 = point predictions).
///
/// Levels must be strictly increasing, each in [0, 1). A provider failure
/// aborts the sweep with the offending level identified.
pub fn confidence_sweep<F>(mut provider: F, levels: &[f64]) -> Result<Vec<SweepRow>>
where
    F: FnMut(f64) -> Result<ClassedIntervalDataset>,
{
    if levels.is_empty() {
        return Err(Error::InvalidLevels {
            reason: "no levels supplied".into(),
        });
    }
    for &level in levels {
        if !(0.0..1.0).contains(&level) || level.is_nan() {
            return Err(Error::InvalidLevels {
                reason: format!("level {level} outside [0, 1)"),
            });
        }
    }
    for w in levels.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::InvalidLevels {
                reason: format!("levels must be strictly increasing, got {} then {}", w[0], w[1]),
            });
        }
    }
    let mut rows = Vec::with_capacity(levels.len());
    for &level in levels {
        let data = provider(level).map_err(|e| Error::SweepLevel {
            level,
            source: Box::new(e),
        })?;
        let report = evaluate(&data, None, Some(level)).map_err(|e| Error::SweepLevel {
            level,
            source: Box::new(e),
        })?;
        rows.push(SweepRow { level, report });
    }
    Ok(rows)
}

/// Classical point-score AUC via midranks (exact ties get half credit).
///
/// With tie-free scores this equals the strictly-above pair fraction; with
/// ties it adds half the tied-pair mass, matching standard rank-sum
/// practice.
pub fn classical_auc(pos_scores: &[f64], neg_scores: &[f64]) -> Result<f64> {
    if pos_scores.is_empty() {
        return Err(Error::EmptyClass { class: "positive" });
    }
    if neg_scores.is_empty() {
        return Err(Error::EmptyClass { class: "negative" });
    }
    if pos_scores
        .iter()
        .chain(neg_scores)
        .any(|v| !v.is_finite())
    {
        return Err(Error::InvalidInput(
            "classical AUC requires finite scores".into(),
        ));
    }
    let n1 = pos_scores.len();
    let n0 = neg_scores.len();
    // Pool scores, tag class, and assign midranks to tie groups.
    let mut pooled: Vec<(f64, bool)> = pos_scores
        .iter()
        .map(|&s| (s, true))
        .chain(neg_scores.iter().map(|&s| (s, false)))
        .collect();
    pooled.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));
    let mut rank_sum_pos = 0.0_f64;
    let mut i = 0;
    while i < pooled.len() {
        let mut j = i;
        while j < pooled.len() && pooled[j].0 == pooled[i].0 {
            j += 1;
        }
        // 1-based ranks i+1 ..= j share the midrank (i + j + 1) / 2.
        let midrank = (i + j + 1) as f64 / 2.0;
        for item in &pooled[i..j] {
            if item.1 {
                rank_sum_pos += midrank;
            }
        }
        i = j;
    }
    let u = rank_sum_pos - (n1 * (n1 + 1)) as f64 / 2.0;
    Ok(u / (n1 as f64 * n0 as f64))
}
