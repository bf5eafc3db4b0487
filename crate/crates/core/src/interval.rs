//! Interval-valued predictions and the strict partial-order comparison rules.
//!
//! An interval score ranks above another only when the ordering is
//! unambiguous: `a > b` requires the entire interval `a` to lie strictly
//! above the entire interval `b`. Endpoint ties count as overlap, so the
//! three comparison outcomes partition every pair.

use crate::error::{Error, Result};

/// One interval-valued risk score `[lower, upper]` with `lower <= upper`.
///
/// Endpoints must be finite but are not restricted to `[0, 1]`; the
/// comparison algebra is domain-agnostic and the probability-interval
/// producers enforce their own range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalPrediction {
    lower: f64,
    upper: f64,
}

impl IntervalPrediction {
    /// Validated constructor. Rejects non-finite endpoints and `lower > upper`.
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() {
            return Err(Error::NonFiniteInterval { lower, upper });
        }
        if lower > upper {
            return Err(Error::InvertedInterval { lower, upper });
        }
        Ok(Self { lower, upper })
    }

    /// Degenerate point interval `[value, value]`.
    pub fn point(value: f64) -> Result<Self> {
        Self::new(value, value)
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    /// Interval width `upper - lower` (zero for point intervals).
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// True when the interval collapses to a single point.
    pub fn is_point(&self) -> bool {
        self.lower == self.upper
    }

    /// True when `value` lies inside the closed interval.
    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// Validated constructor for [`IntervalPrediction`].
pub fn make_interval(lower: f64, upper: f64) -> Result<IntervalPrediction> {
    IntervalPrediction::new(lower, upper)
}

/// Outcome of comparing two intervals under the strict non-overlap rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairOrdering {
    /// `a > b`: a.lower strictly exceeds b.upper.
    StrictlyAbove,
    /// `a < b`: a.upper strictly below b.lower.
    StrictlyBelow,
    /// Neither strict ordering holds (shared endpoints included).
    Overlap,
}

/// Position of an interval relative to a scalar threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdRelation {
    /// Entire interval strictly above `t`.
    Above,
    /// Entire interval strictly below `t`.
    Below,
    /// The interval contains or touches `t`.
    Contains,
}

/// Strict pairwise comparison: `StrictlyAbove` iff `a.lower > b.upper`,
/// `StrictlyBelow` iff `a.upper < b.lower`, `Overlap` otherwise.
///
/// Inequalities are strict, so touching endpoints yield `Overlap`.
pub fn compare_pair(a: IntervalPrediction, b: IntervalPrediction) -> PairOrdering {
    if a.lower() > b.upper() {
        PairOrdering::StrictlyAbove
    } else if a.upper() < b.lower() {
        PairOrdering::StrictlyBelow
    } else {
        PairOrdering::Overlap
    }
}

/// Interval-threshold comparison: `Above` iff `i.lower > t`, `Below` iff
/// `i.upper < t`, `Contains` otherwise.
pub fn compare_threshold(i: IntervalPrediction, t: f64) -> ThresholdRelation {
    if i.lower() > t {
        ThresholdRelation::Above
    } else if i.upper() < t {
        ThresholdRelation::Below
    } else {
        ThresholdRelation::Contains
    }
}

/// Interval predictions split by true class: positives and negatives.
///
/// The two collections are the empirical class-conditional interval
/// distributions all downstream metrics are built from. Construction allows
/// empty classes; every metric computation rejects them.
#[derive(Debug, Clone, Default)]
pub struct ClassedIntervalDataset {
    positives: Vec<IntervalPrediction>,
    negatives: Vec<IntervalPrediction>,
}

impl ClassedIntervalDataset {
    pub fn new(positives: Vec<IntervalPrediction>, negatives: Vec<IntervalPrediction>) -> Self {
        Self {
            positives,
            negatives,
        }
    }

    /// Builds a dataset from parallel (label, lower, upper) triples.
    /// Labels must be 0 or 1.
    pub fn from_rows(rows: &[(u8, f64, f64)]) -> Result<Self> {
        let mut positives = Vec::new();
        let mut negatives = Vec::new();
        for &(label, lower, upper) in rows {
            let iv = IntervalPrediction::new(lower, upper)?;
            match label {
                1 => positives.push(iv),
                0 => negatives.push(iv),
                other => {
                    return Err(Error::InvalidInput(format!(
                        "label must be 0 or 1, got {other}"
                    )))
                }
            }
        }
        Ok(Self::new(positives, negatives))
    }

    pub fn positives(&self) -> &[IntervalPrediction] {
        &self.positives
    }

    pub fn negatives(&self) -> &[IntervalPrediction] {
        &self.negatives
    }

    pub fn n_pos(&self) -> usize {
        self.positives.len()
    }

    pub fn n_neg(&self) -> usize {
        self.negatives.len()
    }

    /// Errors unless both classes are non-empty.
    pub fn require_both_classes(&self) -> Result<()> {
        if self.positives.is_empty() {
            return Err(Error::EmptyClass { class: "positive" });
        }
        if self.negatives.is_empty() {
            return Err(Error::EmptyClass { class: "negative" });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_accepts_ordered_endpoints() {
        let iv = make_interval(0.25, 0.65).unwrap();
        assert_eq!(iv.lower(), 0.25);
        assert_eq!(iv.upper(), 0.65);
    }

    #[test]
    fn constructor_accepts_degenerate_point() {
        let iv = make_interval(0.4, 0.4).unwrap();
        assert!(iv.is_point());
        assert_eq!(iv.width(), 0.0);
    }

    #[test]
    fn constructor_rejects_inverted_endpoints() {
        assert!(matches!(
            make_interval(0.7, 0.3),
            Err(Error::InvertedInterval { .. })
        ));
    }

    #[test]
    fn constructor_rejects_non_finite() {
        assert!(make_interval(f64::NAN, 0.5).is_err());
        assert!(make_interval(0.0, f64::INFINITY).is_err());
        assert!(make_interval(f64::NEG_INFINITY, 0.0).is_err());
    }

    #[test]
    fn pair_comparison_cases() {
        let a = make_interval(0.6, 0.8).unwrap();
        let b = make_interval(0.1, 0.2).unwrap();
        assert_eq!(compare_pair(a, b), PairOrdering::StrictlyAbove);
        assert_eq!(compare_pair(b, a), PairOrdering::StrictlyBelow);

        let c = make_interval(0.4, 0.7).unwrap();
        assert_eq!(compare_pair(a, c), PairOrdering::Overlap);
        assert_eq!(compare_pair(c, a), PairOrdering::Overlap);
    }

    #[test]
    fn shared_endpoint_is_overlap() {
        let a = make_interval(0.2, 0.4).unwrap();
        let b = make_interval(0.4, 0.5).unwrap();
        assert_eq!(compare_pair(a, b), PairOrdering::Overlap);
        assert_eq!(compare_pair(b, a), PairOrdering::Overlap);
    }

    #[test]
    fn threshold_comparison_cases() {
        let iv = make_interval(0.25, 0.65).unwrap();
        assert_eq!(compare_threshold(iv, 0.2), ThresholdRelation::Above);
        assert_eq!(compare_threshold(iv, 0.45), ThresholdRelation::Contains);
        assert_eq!(compare_threshold(iv, 0.7), ThresholdRelation::Below);
        // Touching endpoints are not strict.
        assert_eq!(compare_threshold(iv, 0.25), ThresholdRelation::Contains);
        assert_eq!(compare_threshold(iv, 0.65), ThresholdRelation::Contains);
    }

    #[test]
    fn point_intervals_reduce_to_scalar_comparison() {
        let a = IntervalPrediction::point(0.9).unwrap();
        let b = IntervalPrediction::point(0.3).unwrap();
        assert_eq!(compare_pair(a, b), PairOrdering::StrictlyAbove);
        assert_eq!(compare_pair(b, a), PairOrdering::StrictlyBelow);
        // Equal points overlap: ties are ambiguity, not order.
        assert_eq!(compare_pair(a, a), PairOrdering::Overlap);
    }

    #[test]
    fn from_rows_rejects_bad_labels() {
        assert!(ClassedIntervalDataset::from_rows(&[(2, 0.1, 0.2)]).is_err());
    }

    #[test]
    fn require_both_classes_errors_on_empty() {
        let ds = ClassedIntervalDataset::new(vec![], vec![]);
        assert!(matches!(
            ds.require_both_classes(),
            Err(Error::EmptyClass { class: "positive" })
        ));
    }
}
