//! L2-regularized logistic regression fit by damped Newton iterations,
//! with train-only z-score standardization baked into the model.
//!
//! Written against plain slices on purpose: the bootstrap laboratory fits
//! hundreds of these on resampled data, so the model must be a pure,
//! deterministic function of its training rows and config.

use crate::error::{Error, Result};
use crate::tabular::TabularDataset;

/// Solver configuration. `lambda = None` resolves to `1 / n_train` at fit
/// time (the conventional unit-strength L2 default); the intercept is never
/// regularized.
#[derive(Debug, Clone, Copy)]
pub struct LogisticConfig {
    pub lambda: Option<f64>,
    pub max_iter: usize,
    pub tol: f64,
}

impl Default for LogisticConfig {
    fn default() -> Self {
        LogisticConfig {
            lambda: None,
            max_iter: 100,
            tol: 1e-8,
        }
    }
}

/// A fitted model: full-length weight vector (dropped features pinned to
/// weight 0), intercept, and the train-set standardization statistics.
#[derive(Debug, Clone)]
pub struct LogisticModel {
    /// One weight per original feature column; exactly 0.0 for dropped ones.
    pub weights: Vec<f64>,
    pub intercept: f64,
    /// Per-feature train means (standardization is train-only by
    /// construction: the fit never sees test rows).
    pub means: Vec<f64>,
    /// Per-feature train population standard deviations; 1.0 for dropped
    /// features so the transform stays well-defined.
    pub stds: Vec<f64>,
    /// Names of features dropped as constant in the training data.
    pub dropped_features: Vec<String>,
    /// Regularization strength actually used.
    pub lambda: f64,
    /// Newton iterations performed.
    pub iterations: usize,
}

impl LogisticModel {
    /// Predicted probability for one raw (unstandardized) feature row.
    ///
    /// Clamped into the open unit interval so downstream interval
    /// construction never sees an exact 0 or 1 even when the logit
    /// saturates.
    pub fn predict_one(&self, row: &[f64]) -> f64 {
        let mut z = self.intercept;
        for (j, &w) in self.weights.iter().enumerate() {
            if w != 0.0 {
                z += w * (row[j] - self.means[j]) / self.stds[j];
            }
        }
        sigmoid(z).clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0)
    }

    /// Predicted probabilities for a whole dataset.
    pub fn predict(&self, data: &TabularDataset) -> Vec<f64> {
        data.features.iter().map(|r| self.predict_one(r)).collect()
    }
}

/// Numerically stable logistic function.
pub fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// Numerically stable `ln(1 + exp(z))`.
fn softplus(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}

/// Fits the model on `train`. Standardization statistics come from the
/// training rows alone; constant features are dropped and recorded.
///
/// Minimizes `J = (1/n) Σ [softplus(z_i) − y_i z_i] + (λ/2)‖w‖²` by Newton
/// steps with Armijo backtracking, stopping when the gradient 2-norm
/// (intercept included) drops to `tol` or below.
pub fn fit_logistic(train: &TabularDataset, config: &LogisticConfig) -> Result<LogisticModel> {
    let n = train.n_rows();
    let d = train.n_features();
    if train.count_label(1) == 0 {
        return Err(Error::EmptyClass { class: "positive" });
    }
    if train.count_label(0) == 0 {
        return Err(Error::EmptyClass { class: "negative" });
    }
    let lambda = config.lambda.unwrap_or(1.0 / n as f64);
    if !lambda.is_finite() || lambda < 0.0 {
        return Err(Error::InvalidInput(format!(
            "regularization strength must be a finite non-negative number, got {lambda}"
        )));
    }

    // Train-only standardization; population (1/n) standard deviation.
    let mut means = vec![0.0f64; d];
    let mut stds = vec![1.0f64; d];
    let mut kept: Vec<usize> = Vec::with_capacity(d);
    let mut dropped_features = Vec::new();
    for j in 0..d {
        let mean = train.features.iter().map(|r| r[j]).sum::<f64>() / n as f64;
        let var = train
            .features
            .iter()
            .map(|r| (r[j] - mean).powi(2))
            .sum::<f64>()
            / n as f64;
        let std = var.sqrt();
        means[j] = mean;
        if std <= 1e-12 * (1.0 + mean.abs()) {
            dropped_features.push(train.feature_names[j].clone());
            stds[j] = 1.0;
        } else {
            stds[j] = std;
            kept.push(j);
        }
    }
    let k = kept.len();
    let z_matrix: Vec<Vec<f64>> = train
        .features
        .iter()
        .map(|row| {
            kept.iter()
                .map(|&j| (row[j] - means[j]) / stds[j])
                .collect()
        })
        .collect();
    let y: Vec<f64> = train.labels.iter().map(|&l| l as f64).collect();

    // theta = [intercept, w_1..w_k]
    let mut theta = vec![0.0f64; k + 1];
    let objective = |theta: &[f64]| -> f64 {
        let mut total = 0.0;
        for (row, &yi) in z_matrix.iter().zip(&y) {
            let mut zi = theta[0];
            for (c, &v) in row.iter().enumerate() {
                zi += theta[c + 1] * v;
            }
            total += softplus(zi) - yi * zi;
        }
        let reg: f64 = theta[1..].iter().map(|w| w * w).sum();
        total / n as f64 + 0.5 * lambda * reg
    };

    let mut iterations = 0;
    let mut grad_norm = f64::INFINITY;
    for iter in 0..config.max_iter {
        // Gradient and Hessian of J at theta.
        let mut grad = vec![0.0f64; k + 1];
        let mut hess = vec![vec![0.0f64; k + 1]; k + 1];
        for (row, &yi) in z_matrix.iter().zip(&y) {
            let mut zi = theta[0];
            for (c, &v) in row.iter().enumerate() {
                zi += theta[c + 1] * v;
            }
            let p = sigmoid(zi);
            let r = p - yi;
            let s = p * (1.0 - p);
            grad[0] += r;
            hess[0][0] += s;
            for (c, &v) in row.iter().enumerate() {
                grad[c + 1] += r * v;
                hess[0][c + 1] += s * v;
                for (c2, &v2) in row.iter().enumerate().skip(c) {
                    hess[c + 1][c2 + 1] += s * v * v2;
                }
            }
        }
        let inv_n = 1.0 / n as f64;
        for g in grad.iter_mut() {
            *g *= inv_n;
        }
        // Each step writes the two symmetric cells, which iterators over a
        // single row cannot express.
        #[allow(clippy::needless_range_loop)]
        for r in 0..=k {
            for c in r..=k {
                let scaled = hess[r][c] * inv_n;
                hess[r][c] = scaled;
                hess[c][r] = scaled;
            }
        }
        for c in 1..=k {
            grad[c] += lambda * theta[c];
            hess[c][c] += lambda;
        }

        grad_norm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if grad_norm <= config.tol {
            iterations = iter;
            return Ok(assemble_model(
                theta,
                &kept,
                d,
                means,
                stds,
                dropped_features,
                lambda,
                iterations,
            ));
        }

        let direction = solve_dense(hess, grad.clone())?;
        // Armijo backtracking on the Newton step keeps J monotone even far
        // from the optimum.
        let j0 = objective(&theta);
        let slope: f64 = grad.iter().zip(&direction).map(|(g, d)| g * d).sum();
        let mut step = 1.0;
        let mut accepted = false;
        for _ in 0..60 {
            let trial: Vec<f64> = theta
                .iter()
                .zip(&direction)
                .map(|(t, d)| t - step * d)
                .collect();
            if objective(&trial) <= j0 - 1e-4 * step * slope {
                theta = trial;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        iterations = iter + 1;
        if !accepted {
            break; // no descent even at a vanishing step: report below
        }
    }

    Err(Error::NoConvergence {
        iterations,
        grad_norm,
    })
}

#[allow(clippy::too_many_arguments)]
fn assemble_model(
    theta: Vec<f64>,
    kept: &[usize],
    d: usize,
    means: Vec<f64>,
    stds: Vec<f64>,
    dropped_features: Vec<String>,
    lambda: f64,
    iterations: usize,
) -> LogisticModel {
    let mut weights = vec![0.0f64; d];
    for (c, &j) in kept.iter().enumerate() {
        weights[j] = theta[c + 1];
    }
    LogisticModel {
        weights,
        intercept: theta[0],
        means,
        stds,
        dropped_features,
        lambda,
        iterations,
    }
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| a[r1][col].abs().total_cmp(&a[r2][col].abs()))
            .unwrap();
        if a[pivot_row][col].abs() < 1e-12 {
            return Err(Error::SingularSystem);
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        let (pivot_part, below) = a.split_at_mut(col + 1);
        let pivot = &pivot_part[col];
        for (offset, row) in below.iter_mut().enumerate() {
            let factor = row[col] / pivot[col];
            if factor == 0.0 {
                continue;
            }
            for (t, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                *t -= factor * p;
            }
            b[col + 1 + offset] -= factor * b[col];
        }
    }
    let mut x = vec![0.0f64; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for c in row + 1..n {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Ok(x)
}
