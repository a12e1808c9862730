use thiserror::Error;

use crate::system::Violation;

/// Errors produced by the solver library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid set system: {}", join_violations(.0))]
    InvalidSystem(Vec<Violation>),

    #[error("element {element} out of range 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("delta must lie in [0, 1], got {0}")]
    InvalidDelta(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("distributions have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("weights do not form a distribution: {0}")]
    NotADistribution(String),

    #[error("divergence undefined: q[{index}] = 0 but p[{index}] = {p} > 0")]
    SupportViolation { index: usize, p: f64 },

    #[error("cover invalid: {0}")]
    InvalidCover(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("more than {cap} maximal independent sets")]
    CapExceeded { cap: usize },

    #[error("node budget of {budget} exhausted before any complete cover was found")]
    BudgetExhausted { budget: u64 },

    #[error("independence number exceeds 3 (found independent set {0:?})")]
    IndependenceNumberAbove3(Vec<usize>),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by resource limits (node budget, enumeration cap)
    /// rather than by malformed input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::BudgetExhausted { .. }
        )
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidSystem(_) => "invalid-system",
            Error::ElementOutOfRange { .. } => "element-out-of-range",
            Error::InvalidDelta(_) => "invalid-delta",
            Error::Domain(_) => "domain",
            Error::LengthMismatch(..) => "length-mismatch",
            Error::NotADistribution(_) => "not-a-distribution",
            Error::SupportViolation { .. } => "support-violation",
            Error::InvalidCover(_) => "invalid-cover",
            Error::InvalidGraph(_) => "invalid-graph",
            Error::Parse { .. } => "parse",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::BudgetExhausted { .. } => "budget-exhausted",
            Error::IndependenceNumberAbove3(_) => "alpha-above-3",
            Error::Io(_) => "io",
        }
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
