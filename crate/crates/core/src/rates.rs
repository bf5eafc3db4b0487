//! Empirical rate functions and the two ROC-style curves for interval scores.
//!
//! Four step functions generalize the TPR/FPR pair: each class contributes a
//! lower-endpoint rate and an upper-endpoint rate. Pairing the conservative
//! rates (TPR from lower endpoints, FPR from upper endpoints) gives the
//! Strict curve; the opposite pairing gives the Permissive curve. The areas
//! under the two curves are the curve-based route to the lower/upper AUC —
//! the pairwise counting route in [`crate::pairwise`] is the canonical one,
//! and the two must agree (exactly under the step rule, to ~1e-3 under the
//! trapezoid rule).

use crate::error::{Error, Result};
use crate::interval::ClassedIntervalDataset;

/// The four empirical rates at one threshold `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateQuadruple {
    /// Fraction of positives whose lower endpoint exceeds `t`.
    pub tpr_l: f64,
    /// Fraction of positives whose upper endpoint exceeds `t`.
    pub tpr_u: f64,
    /// Fraction of negatives whose lower endpoint exceeds `t`.
    pub fpr_l: f64,
    /// Fraction of negatives whose upper endpoint exceeds `t`.
    pub fpr_u: f64,
}

/// Which rate functions a curve pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    /// x = FPR from negative uppers, y = TPR from positive lowers.
    /// The conservative curve: a point counts as ranked only when certain.
    Strict,
    /// x = FPR from negative lowers, y = TPR from positive uppers.
    /// The generous curve: a point counts as ranked whenever possible.
    Permissive,
}

impl Pairing {
    pub fn as_str(&self) -> &'static str {
        match self {
            Pairing::Strict => "strict",
            Pairing::Permissive => "permissive",
        }
    }
}

/// One curve vertex: the threshold it was evaluated at and its (x, y) rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub threshold: f64,
    pub x: f64,
    pub y: f64,
}

/// An ROC-style staircase for one rate pairing.
///
/// Points are stored in canonical order: increasing x, from (0, 0) at the
/// `+inf` threshold sentinel down to (1, 1) at the `-inf` sentinel
/// (thresholds decrease along the stored order).
#[derive(Debug, Clone, PartialEq)]
pub struct RocCurve {
    pub pairing: Pairing,
    pub points: Vec<CurvePoint>,
}

/// How to integrate a curve's staircase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegrationRule {
    /// Trapezoids between consecutive points (the default, and what the
    /// diagnostics report); on a pure staircase this differs from the exact
    /// step area only by the triangle slivers at the stair corners.
    Trapezoid,
    /// Exact rectangle rule matched to the pairing's counting identity:
    /// left-step for Strict, right-step for Permissive. With the rectangle
    /// rule the curve area equals the pairwise count exactly.
    Step,
}

/// All distinct interval endpoints of both classes, sorted ascending, with
/// `-inf` / `+inf` sentinels bracketing them.
///
/// The empirical rate functions are constant between these knots, so
/// evaluating them on this grid loses no information.
pub fn threshold_grid(data: &ClassedIntervalDataset) -> Result<Vec<f64>> {
    data.require_both_classes()?;
    let mut knots: Vec<f64> =
        Vec::with_capacity(2 * (data.n_pos() + data.n_neg()) + 2);
    for iv in data.positives().iter().chain(data.negatives()) {
        knots.push(iv.lower());
        knots.push(iv.upper());
    }
    knots.sort_unstable_by(f64::total_cmp);
    knots.dedup();
    let mut grid = Vec::with_capacity(knots.len() + 2);
    grid.push(f64::NEG_INFINITY);
    grid.extend(knots);
    grid.push(f64::INFINITY);
    Ok(grid)
}

/// The four empirical rates at threshold `t` (strict `> t` throughout).
pub fn rates_at(data: &ClassedIntervalDataset, t: f64) -> Result<RateQuadruple> {
    data.require_both_classes()?;
    let frac = |count: usize, total: usize| count as f64 / total as f64;
    let n1 = data.n_pos();
    let n0 = data.n_neg();
    let tpr_l = frac(
        data.positives().iter().filter(|iv| iv.lower() > t).count(),
        n1,
    );
    let tpr_u = frac(
        data.positives().iter().filter(|iv| iv.upper() > t).count(),
        n1,
    );
    let fpr_l = frac(
        data.negatives().iter().filter(|iv| iv.lower() > t).count(),
        n0,
    );
    let fpr_u = frac(
        data.negatives().iter().filter(|iv| iv.upper() > t).count(),
        n0,
    );
    Ok(RateQuadruple {
        tpr_l,
        tpr_u,
        fpr_l,
        fpr_u,
    })
}

/// Builds the staircase for one pairing: one point per grid threshold,
/// ordered by descending threshold so x runs from 0 up to 1.
pub fn build_curve(data: &ClassedIntervalDataset, pairing: Pairing) -> Result<RocCurve> {
    let grid = threshold_grid(data)?;
    let mut points = Vec::with_capacity(grid.len());
    for &t in grid.iter().rev() {
        let r = rates_at(data, t)?;
        let (x, y) = match pairing {
            Pairing::Strict => (r.fpr_u, r.tpr_l),
            Pairing::Permissive => (r.fpr_l, r.tpr_u),
        };
        points.push(CurvePoint { threshold: t, x, y });
    }
    Ok(RocCurve { pairing, points })
}

/// Area under the curve's point sequence. Trapezoid is the default reporting
/// rule; `Step` reproduces the pairwise counting value exactly.
///
/// Summation is left-to-right over the stored order, so the result is
/// bitwise deterministic for a given curve.
pub fn integrate_curve(curve: &RocCurve, rule: IntegrationRule) -> Result<f64> {
    if curve.points.len() < 2 {
        return Err(Error::TooFewCurvePoints {
            got: curve.points.len(),
        });
    }
    let pts = &curve.points;
    let mut area = 0.0;
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let dx = b.x - a.x;
        let height = match rule {
            IntegrationRule::Trapezoid => 0.5 * (a.y + b.y),
            // The left step makes each rectangle's mass P(neg upper = t)·
            // P(pos lower > t); the right step makes it P(neg lower = t)·
            // P(pos upper ≥ t). Each telescopes to its pairing's exact
            // pairwise probability because every endpoint is a grid knot.
            IntegrationRule::Step => match curve.pairing {
                Pairing::Strict => a.y,
                Pairing::Permissive => b.y,
            },
        };
        area += dx * height;
    }
    Ok(area)
}
