use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: empty grids, non-monotone nodes, length mismatches.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A value that must be finite was NaN or infinite.
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    /// Parameter outside its admissible range.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    /// Derivative-free search did not reach its tolerance.
    #[error("optimizer did not converge after {restarts} restarts (best value {best})")]
    OptimizerFailed { restarts: usize, best: f64 },

    /// A hypothesis required by an estimate does not hold for the input.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// Numerical failure deep in a pipeline (overflow, empty bracket, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
