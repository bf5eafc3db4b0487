//! Python bindings for the interval-ROC analysis library.
//!
//! The module mirrors the Rust API closely: interval predictions, labelled
//! datasets, ROC curves with two pairing rules, the three-region pairwise
//! decomposition, optimal-AUC bounds, the deterministic bootstrap pipeline,
//! and the synthetic bound-validation world.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use iroc::logistic::{fit_logistic, LogisticConfig, LogisticModel};
use iroc::pairwise::{self, EvaluationReport};
use iroc::rates::{self, IntegrationRule, Pairing};
use iroc::synth::{self, SyntheticConfig};
use iroc::tabular::TabularDataset;
use iroc::{bootstrap, interval};

/// Input-contract violations become `ValueError`; numeric failures inside
/// the pipeline (non-convergence, singular systems, resample retry
/// exhaustion) become `RuntimeError`.
fn to_py_err(err: iroc::Error) -> PyErr {
    if err.is_input_contract() {
        PyValueError::new_err(err.to_string())
    } else {
        PyRuntimeError::new_err(err.to_string())
    }
}

fn parse_pairing(name: &str) -> PyResult<Pairing> {
    match name {
        "strict" => Ok(Pairing::Strict),
        "permissive" => Ok(Pairing::Permissive),
        other => Err(PyValueError::new_err(format!(
            "pairing must be \"strict\" or \"permissive\", got {other:?}"
        ))),
    }
}

fn parse_rule(name: &str) -> PyResult<IntegrationRule> {
    match name {
        "trapezoid" => Ok(IntegrationRule::Trapezoid),
        "step" => Ok(IntegrationRule::Step),
        other => Err(PyValueError::new_err(format!(
            "rule must be \"trapezoid\" or \"step\", got {other:?}"
        ))),
    }
}

/// An interval-valued risk prediction `[lower, upper]`.
#[pyclass(name = "Interval", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct PyInterval {
    inner: interval::IntervalPrediction,
}

#[pymethods]
impl PyInterval {
    #[new]
    fn new(lower: f64, upper: f64) -> PyResult<Self> {
        let inner = interval::IntervalPrediction::new(lower, upper).map_err(to_py_err)?;
        Ok(PyInterval { inner })
    }

    /// Degenerate interval carrying a single score.
    #[staticmethod]
    fn point(value: f64) -> PyResult<Self> {
        let inner = interval::IntervalPrediction::point(value).map_err(to_py_err)?;
        Ok(PyInterval { inner })
    }

    #[getter]
    fn lower(&self) -> f64 {
        self.inner.lower()
    }

    #[getter]
    fn upper(&self) -> f64 {
        self.inner.upper()
    }

    #[getter]
    fn width(&self) -> f64 {
        self.inner.width()
    }

    #[getter]
    fn is_point(&self) -> bool {
        self.inner.is_point()
    }

    fn contains(&self, value: f64) -> bool {
        self.inner.contains(value)
    }

    /// Three-way comparison against another interval: "above" when this
    /// interval lies strictly above `other`, "below" for the mirror case,
    /// and "overlap" when the comparison abstains.
    fn compare(&self, other: &PyInterval) -> &'static str {
        match interval::compare_pair(self.inner, other.inner) {
            interval::PairOrdering::StrictlyAbove => "above",
            interval::PairOrdering::StrictlyBelow => "below",
            interval::PairOrdering::Overlap => "overlap",
        }
    }

    /// Relation to a scalar threshold: "above" (entire interval strictly
    /// above t), "below" (strictly below), or "contains".
    fn threshold(&self, t: f64) -> &'static str {
        match interval::compare_threshold(self.inner, t) {
            interval::ThresholdRelation::Above => "above",
            interval::ThresholdRelation::Below => "below",
            interval::ThresholdRelation::Contains => "contains",
        }
    }

    fn __repr__(&self) -> String {
        format!("Interval({}, {})", self.inner.lower(), self.inner.upper())
    }
}

/// A labelled collection of interval predictions, split by class.
#[pyclass(name = "Dataset", frozen)]
struct PyDataset {
    inner: interval::ClassedIntervalDataset,
}

#[pymethods]
impl PyDataset {
    /// Builds a dataset from parallel lists: binary labels (0/1) and the
    /// matching interval endpoints.
    #[new]
    fn new(labels: Vec<u8>, lowers: Vec<f64>, uppers: Vec<f64>) -> PyResult<Self> {
        if labels.len() != lowers.len() || labels.len() != uppers.len() {
            return Err(PyValueError::new_err(format!(
                "labels, lowers and uppers must have equal length; got {}, {}, {}",
                labels.len(),
                lowers.len(),
                uppers.len()
            )));
        }
        for (i, &label) in labels.iter().enumerate() {
            if label > 1 {
                return Err(PyValueError::new_err(format!(
                    "labels must be 0 or 1; got {label} at index {i}"
                )));
            }
        }
        let rows: Vec<(u8, f64, f64)> = labels
            .iter()
            .zip(lowers.iter().zip(uppers.iter()))
            .map(|(&y, (&l, &u))| (y, l, u))
            .collect();
        let inner = interval::ClassedIntervalDataset::from_rows(&rows).map_err(to_py_err)?;
        Ok(PyDataset { inner })
    }

    /// Loads a dataset from a CSV file with header columns
    /// label,lower,upper (extra columns are ignored).
    #[staticmethod]
    fn from_csv(path: &str) -> PyResult<Self> {
        let inner = iroc::report::intervals_from_csv(std::path::Path::new(path))
            .map_err(to_py_err)?;
        Ok(PyDataset { inner })
    }

    #[getter]
    fn n_pos(&self) -> usize {
        self.inner.n_pos()
    }

    #[getter]
    fn n_neg(&self) -> usize {
        self.inner.n_neg()
    }

    /// Raw pairwise counts `(above, below, overlap)` over all
    /// positive-negative pairs.
    fn counts(&self) -> PyResult<(u64, u64, u64)> {
        let r = pairwise::pairwise_counts(&self.inner).map_err(to_py_err)?;
        Ok((r.above_count, r.below_count, r.overlap_count))
    }

    /// The interval AUC band `(auc_l, auc_u)`.
    fn auc_band(&self) -> PyResult<(f64, f64)> {
        let r = pairwise::pairwise_counts(&self.inner).map_err(to_py_err)?;
        Ok((r.p_correct, 1.0 - r.p_incorrect))
    }

    /// Full evaluation report as a dict. Passing both miscoverage rates
    /// adds optimal-AUC bounds; `confidence_level` is echoed as metadata.
    #[pyo3(signature = (alpha_pos=None, alpha_neg=None, confidence_level=None))]
    fn evaluate<'py>(
        &self,
        py: Python<'py>,
        alpha_pos: Option<f64>,
        alpha_neg: Option<f64>,
        confidence_level: Option<f64>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let alphas = match (alpha_pos, alpha_neg) {
            (Some(p), Some(n)) => Some((p, n)),
            (None, None) => None,
            _ => {
                return Err(PyValueError::new_err(
                    "alpha_pos and alpha_neg must be given together",
                ))
            }
        };
        let report =
            pairwise::evaluate(&self.inner, alphas, confidence_level).map_err(to_py_err)?;
        report_to_dict(py, &report)
    }

    /// ROC curve under the given pairing rule ("strict" or "permissive").
    fn curve(&self, pairing: &str) -> PyResult<PyCurve> {
        let pairing = parse_pairing(pairing)?;
        let inner = rates::build_curve(&self.inner, pairing).map_err(to_py_err)?;
        Ok(PyCurve { inner })
    }

    /// The four rates `(tpr_l, tpr_u, fpr_l, fpr_u)` at one threshold.
    fn rates_at(&self, t: f64) -> PyResult<(f64, f64, f64, f64)> {
        let q = rates::rates_at(&self.inner, t).map_err(to_py_err)?;
        Ok((q.tpr_l, q.tpr_u, q.fpr_l, q.fpr_u))
    }

    fn __len__(&self) -> usize {
        self.inner.n_pos() + self.inner.n_neg()
    }

    fn __repr__(&self) -> String {
        format!(
            "Dataset(n_pos={}, n_neg={})",
            self.inner.n_pos(),
            self.inner.n_neg()
        )
    }
}

/// A staircase ROC curve in the unit square.
#[pyclass(name = "Curve", frozen)]
struct PyCurve {
    inner: rates::RocCurve,
}

#[pymethods]
impl PyCurve {
    /// Curve knots as `(fpr, tpr, threshold)` triples, ordered from (0, 0)
    /// at threshold +inf to (1, 1) at threshold -inf.
    fn points(&self) -> Vec<(f64, f64, f64)> {
        self.inner
            .points
            .iter()
            .map(|p| (p.x, p.y, p.threshold))
            .collect()
    }

    #[getter]
    fn pairing(&self) -> &'static str {
        self.inner.pairing.as_str()
    }

    /// Area under the curve: "trapezoid" for the default geometric rule or
    /// "step" for the rectangle rule that reproduces pairwise counting
    /// exactly.
    #[pyo3(signature = (rule="trapezoid"))]
    fn area(&self, rule: &str) -> PyResult<f64> {
        let rule = parse_rule(rule)?;
        rates::integrate_curve(&self.inner, rule).map_err(to_py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.points.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Curve(pairing={:?}, points={})",
            self.inner.pairing.as_str(),
            self.inner.points.len()
        )
    }
}

fn report_to_dict<'py>(py: Python<'py>, report: &EvaluationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("auc_l", report.auc_l)?;
    d.set_item("auc_u", report.auc_u)?;
    d.set_item("p_correct", report.three_region.p_correct)?;
    d.set_item("p_overlap", report.three_region.p_overlap)?;
    d.set_item("p_incorrect", report.three_region.p_incorrect)?;
    d.set_item("uauc", report.uauc)?;
    d.set_item("abstention_rate", report.abstention_rate)?;
    match &report.bounds {
        Some(b) => {
            let bd = PyDict::new(py);
            bd.set_item("lower", b.lower_bound)?;
            bd.set_item("upper", b.upper_bound)?;
            bd.set_item("p_pair", b.p_pair)?;
            bd.set_item("raw_lower", b.raw_lower)?;
            bd.set_item("raw_upper", b.raw_upper)?;
            d.set_item("bounds", bd)?;
        }
        None => d.set_item("bounds", py.None())?,
    }
    d.set_item("confidence_level", report.confidence_level)?;
    d.set_item("n_pos", report.n_pos)?;
    d.set_item("n_neg", report.n_neg)?;
    Ok(d)
}

/// A fitted L2-regularised logistic model with its train-set
/// standardization baked in.
#[pyclass(name = "Logistic", frozen)]
struct PyLogistic {
    inner: LogisticModel,
}

#[pymethods]
impl PyLogistic {
    #[getter]
    fn weights(&self) -> Vec<f64> {
        self.inner.weights.clone()
    }

    #[getter]
    fn intercept(&self) -> f64 {
        self.inner.intercept
    }

    #[getter]
    fn lambda_(&self) -> f64 {
        self.inner.lambda
    }

    #[getter]
    fn iterations(&self) -> usize {
        self.inner.iterations
    }

    #[getter]
    fn dropped_features(&self) -> Vec<String> {
        self.inner.dropped_features.clone()
    }

    /// Predicted probabilities for raw (unstandardized) feature rows,
    /// clamped into the open unit interval.
    fn predict(&self, rows: Vec<Vec<f64>>) -> PyResult<Vec<f64>> {
        let width = self.inner.weights.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(PyValueError::new_err(format!(
                    "row {i} has {} features, model expects {width}",
                    row.len()
                )));
            }
        }
        Ok(rows.iter().map(|r| self.inner.predict_one(r)).collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Logistic(features={}, lambda={}, iterations={})",
            self.inner.weights.len(),
            self.inner.lambda,
            self.inner.iterations
        )
    }
}

fn tabular_from_python(features: Vec<Vec<f64>>, labels: Vec<u8>) -> PyResult<TabularDataset> {
    if features.len() != labels.len() {
        return Err(PyValueError::new_err(format!(
            "features has {} rows but labels has {}",
            features.len(),
            labels.len()
        )));
    }
    if features.is_empty() {
        return Err(PyValueError::new_err("dataset is empty"));
    }
    let width = features[0].len();
    for (i, row) in features.iter().enumerate() {
        if row.len() != width {
            return Err(PyValueError::new_err(format!(
                "row {i} has {} features, expected {width}",
                row.len()
            )));
        }
    }
    for (i, &label) in labels.iter().enumerate() {
        if label > 1 {
            return Err(PyValueError::new_err(format!(
                "labels must be 0 or 1; got {label} at index {i}"
            )));
        }
    }
    Ok(TabularDataset {
        feature_names: (0..width).map(|j| format!("f{j}")).collect(),
        features,
        labels,
    })
}

/// Fits the from-scratch logistic regression on raw feature rows.
#[pyfunction]
#[pyo3(signature = (features, labels, lambda=None, max_iter=100, tol=1e-8))]
fn fit(
    features: Vec<Vec<f64>>,
    labels: Vec<u8>,
    lambda: Option<f64>,
    max_iter: usize,
    tol: f64,
) -> PyResult<PyLogistic> {
    let train = tabular_from_python(features, labels)?;
    let config = LogisticConfig {
        lambda,
        max_iter,
        tol,
    };
    let inner = fit_logistic(&train, &config).map_err(to_py_err)?;
    Ok(PyLogistic { inner })
}

/// Runs the deterministic bootstrap: refits the logistic model on `b`
/// resamples of the training data and scores the test rows with each.
/// Returns the replicate-by-instance prediction matrix as a list of rows.
#[pyfunction]
#[pyo3(signature = (train_features, train_labels, test_features, b, seed, lambda=None, max_iter=100, tol=1e-8))]
#[allow(clippy::too_many_arguments)]
fn bootstrap_matrix(
    py: Python<'_>,
    train_features: Vec<Vec<f64>>,
    train_labels: Vec<u8>,
    test_features: Vec<Vec<f64>>,
    b: usize,
    seed: u64,
    lambda: Option<f64>,
    max_iter: usize,
    tol: f64,
) -> PyResult<Vec<Vec<f64>>> {
    let train = tabular_from_python(train_features, train_labels)?;
    let n_test = test_features.len();
    let test = tabular_from_python(test_features, vec![0; n_test])?;
    if train.n_features() != test.n_features() {
        return Err(PyValueError::new_err(format!(
            "train rows have {} features but test rows have {}",
            train.n_features(),
            test.n_features()
        )));
    }
    let config = LogisticConfig {
        lambda,
        max_iter,
        tol,
    };
    let matrix = py
        .detach(|| bootstrap::bootstrap_predict(&train, &test, b, seed, &config))
        .map_err(to_py_err)?;
    Ok(matrix.values)
}

/// Collapses a prediction matrix into per-instance percentile intervals at
/// confidence level `gamma` and returns them as a labelled `Dataset`.
#[pyfunction]
fn matrix_intervals(matrix: Vec<Vec<f64>>, labels: Vec<u8>, gamma: f64) -> PyResult<PyDataset> {
    if matrix.is_empty() {
        return Err(PyValueError::new_err("prediction matrix is empty"));
    }
    let width = matrix[0].len();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != width {
            return Err(PyValueError::new_err(format!(
                "matrix row {i} has {} entries, expected {width}",
                row.len()
            )));
        }
    }
    let pm = bootstrap::PredictionMatrix {
        values: matrix,
        replicate_seeds: Vec::new(),
    };
    let inner = bootstrap::percentile_intervals(&pm, &labels, gamma).map_err(to_py_err)?;
    Ok(PyDataset { inner })
}

/// Classical point-score AUC (ties get half credit).
#[pyfunction]
fn point_auc(scores: Vec<f64>, labels: Vec<u8>) -> PyResult<f64> {
    bootstrap::point_auc(&scores, &labels).map_err(to_py_err)
}

/// Type-7 (linear interpolation) empirical quantile of unsorted values.
#[pyfunction]
fn quantile(values: Vec<f64>, p: f64) -> PyResult<f64> {
    if values.is_empty() {
        return Err(PyValueError::new_err("values must be non-empty"));
    }
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(PyValueError::new_err(format!(
            "quantile level {p} outside [0, 1]"
        )));
    }
    let mut sorted = values;
    sorted.sort_by(|a, b| a.total_cmp(b));
    Ok(bootstrap::quantile_type7(&sorted, p))
}

/// Exact posterior of class 1 for the two-Gaussian synthetic world.
#[pyfunction]
fn posterior_eta(x: f64, mu0: f64, mu1: f64) -> f64 {
    synth::posterior_eta(x, mu0, mu1)
}

/// Validates the optimal-AUC bounds in synthetic worlds with known
/// posteriors, one world per miscoverage rate in `alphas`. Returns one
/// dict per rate.
#[pyfunction]
#[pyo3(signature = (alphas, n_per_class=20_000, mu0=0.0, mu1=1.0, seed=42))]
fn validate_bounds<'py>(
    py: Python<'py>,
    alphas: Vec<f64>,
    n_per_class: usize,
    mu0: f64,
    mu1: f64,
    seed: u64,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let template = SyntheticConfig {
        mu0,
        mu1,
        n_per_class,
        alpha: 0.0,
        seed,
    };
    let rows = py
        .detach(|| synth::validate_bounds(&template, &alphas))
        .map_err(to_py_err)?;
    rows.iter()
        .map(|row| {
            let d = PyDict::new(py);
            d.set_item("alpha", row.alpha)?;
            d.set_item("auc_l", row.auc_l)?;
            d.set_item("auc_u", row.auc_u)?;
            d.set_item("p_pair", row.p_pair)?;
            d.set_item("lower_bound", row.lower_bound)?;
            d.set_item("upper_bound", row.upper_bound)?;
            d.set_item("auc_star", row.auc_star)?;
            d.set_item("contained", row.contained)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn iroc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInterval>()?;
    m.add_class::<PyDataset>()?;
    m.add_class::<PyCurve>()?;
    m.add_class::<PyLogistic>()?;
    m.add_function(wrap_pyfunction!(fit, m)?)?;
    m.add_function(wrap_pyfunction!(bootstrap_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(matrix_intervals, m)?)?;
    m.add_function(wrap_pyfunction!(point_auc, m)?)?;
    m.add_function(wrap_pyfunction!(quantile, m)?)?;
    m.add_function(wrap_pyfunction!(posterior_eta, m)?)?;
    m.add_function(wrap_pyfunction!(validate_bounds, m)?)?;
    Ok(())
}
