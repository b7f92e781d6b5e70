use thiserror::Error;

/// Errors produced by the wave-model library.
#[derive(Debug, Error)]
pub enum WaveError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("grid mismatch: {left} vs {right} points")]
    GridMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("{what} failed to converge (residual {residual:.3e})")]
    Convergence { what: String, residual: f64 },

    #[error("linear solver failure: {what} (condition estimate {condition:.3e})")]
    Solver { what: String, condition: f64 },

    #[error("solution blow-up at step {step} (t = {time:.6}): max |h| = {max_value:.3e} exceeds {bound:.3e}")]
    Blowup {
        step: usize,
        time: f64,
        max_value: f64,
        bound: f64,
    },

    #[error("series order {needed} not yet computed")]
    MissingOrder { needed: usize },

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, WaveError>;
