use crate::model::Violation;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vector length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("scale factor must be nonnegative, got {0}")]
    NegativeScale(f64),

    #[error("harmonic number undefined for m = 0")]
    ZeroUniverse,

    #[error("optimum cost must be positive, got {0}")]
    NonpositiveOptimum(f64),

    #[error("component {index} = [{lo}, {hi}] contains no integer")]
    NoIntegerInInterval { index: usize, lo: f64, hi: f64 },

    #[error("invalid instance: {}", format_violations(.0))]
    InvalidInstance(Vec<Violation>),

    #[error("exact search requires n <= {limit}, instance has n = {n}")]
    SizeGuard { n: usize, limit: usize },

    #[error("enumeration node limit {limit} exceeded; partial set has {found} solutions")]
    NodeLimitExceeded {
        limit: u64,
        found: usize,
        partial: Box<crate::enumerate::UnitedApproxSet>,
    },

    #[error("floor ratio mode is not supported by exact enumeration")]
    FloorModeUnsupported,

    #[error("solution set is empty")]
    EmptySolutionSet,

    #[error("probabilities missing on united set; attach estimates first")]
    MissingProbabilities,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
