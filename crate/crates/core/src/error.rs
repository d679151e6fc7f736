use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("bracket [{lo}, {hi}] is empty or not finite")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("{method} did not converge within {iterations} iterations")]
    NoConvergence { method: &'static str, iterations: usize },
    #[error("quadrature tolerance not met: estimate {error_estimate:e} after {evaluations} evaluations")]
    ToleranceNotMet { value: f64, error_estimate: f64, evaluations: usize },
    #[error("log-gamma pole at z = {0}")]
    PoleError(f64),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(&'static str),
    #[error("logarithmic length must be positive and finite, got {0}")]
    InvalidLength(f64),
    #[error("invalid interval ({a}, {b}): need 0 < a < b < inf and b/a >= 1 + 1e-12")]
    InvalidInterval { a: f64, b: f64 },
    #[error("x = {x} lies outside [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error("weight is not strictly positive at t = {0}")]
    NonPositiveWeight(f64),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("vector is identically zero")]
    ZeroVector,
    #[error("entry {index} is not strictly positive")]
    NonPositiveEntry { index: usize },
    #[error("n = {n} is below the minimum {min}")]
    TooSmall { n: usize, min: usize },
    #[error("invalid degree {0}")]
    InvalidDegree(usize),
    #[error("parameters must be strictly positive")]
    InvalidParams,
    #[error("argument {x} outside the admissible range (|x| < {limit})")]
    OutOfRange { x: f64, limit: f64 },
}

impl Error {
    /// True for errors caused by inputs violating a documented precondition,
    /// as opposed to a numerical routine failing on valid inputs.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::NoConvergence { .. } | Error::ToleranceNotMet { .. })
    }
}
