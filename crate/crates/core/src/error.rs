use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("non-unit series: constant term is zero")]
    NonUnitSeries,

    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("({n}, {k}) is outside the support of the {triangle} triangle")]
    OutOfSupport { triangle: &'static str, n: usize, k: usize },

    #[error("missing parameter b for the {0} family")]
    MissingParameter(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("zero divisor u({n}, {k}) during condensation sweep")]
    ZeroDivisor { n: usize, k: usize },

    #[error("non-exact division while computing u({n}, {k}) from integer data")]
    NonExactDivision { n: usize, k: usize },

    #[error("{0}")]
    InvalidFamily(String),

    #[error("unsupported sequence family: {0}")]
    UnsupportedFamily(String),

    #[error("brute-force cap exceeded: {candidates} candidate tuples > cap {cap}")]
    CapExceeded { candidates: String, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
