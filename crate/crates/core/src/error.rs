//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the evaluation library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("interval endpoints must be finite, got ({lower}, {upper})")]
    NonFiniteInterval { lower: f64, upper: f64 },

    #[error("interval lower bound {lower} exceeds upper bound {upper}")]
    InvertedInterval { lower: f64, upper: f64 },

    #[error("{class} class is empty; both classes are required")]
    EmptyClass { class: &'static str },

    #[error("curve has {got} points; at least 2 are required for integration")]
    TooFewCurvePoints { got: usize },

    #[error("miscoverage rate {name} = {value} is outside [0, 1]")]
    AlphaOutOfRange { name: &'static str, value: f64 },

    #[error("invalid confidence levels: {reason}")]
    InvalidLevels { reason: String },

    #[error("interval provider failed at level {level}: {source}")]
    SweepLevel {
        level: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed CSV in {path}: {reason}")]
    CsvFormat { path: String, reason: String },

    #[error("{path}: rows with unparseable numerics at line(s) {lines:?}")]
    BadNumericRows { path: String, lines: Vec<u64> },

    #[error("label column contains non-binary value {value:?} at line {line}")]
    NonBinaryLabel { value: String, line: u64 },

    #[error("label count {labels} does not match column count {columns}")]
    MisalignedLabels { labels: usize, columns: usize },

    #[error("train fraction {0} must lie strictly between 0 and 1")]
    BadTrainFraction(f64),

    #[error("class {label} has {count} members; at least 2 are required to split")]
    ClassTooSmall { label: u8, count: usize },

    #[error("logistic fit did not converge in {iterations} iterations (gradient norm {grad_norm:.3e})")]
    NoConvergence { iterations: usize, grad_norm: f64 },

    #[error("normal-equation system is singular (degenerate design matrix)")]
    SingularSystem,

    #[error("bootstrap resampling produced a single-class sample {retries} times in a row; giving up")]
    ResampleRetriesExceeded { retries: u32 },

    #[error("{0}")]
    InvalidInput(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by ill-formed user input (files, flags, schemas)
    /// as opposed to numeric failures inside the pipeline.
    pub fn is_input_contract(&self) -> bool {
        !matches!(
            self,
            Error::NoConvergence { .. }
                | Error::SingularSystem
                | Error::ResampleRetriesExceeded { .. }
        )
    }
}
