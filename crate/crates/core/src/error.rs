use thiserror::Error;

/// Errors raised by sequence validation, grid construction, and the
/// spectral operators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sequence is empty")]
    EmptySequence,

    #[error("sequence terms must be positive integers")]
    NonPositiveTerm,

    #[error("sequence is not lacunary: minimum consecutive ratio {min_ratio} does not exceed 1")]
    NotLacunary { min_ratio: f64 },

    #[error("ratio parameter must exceed 1, got {alpha}")]
    InvalidAlpha { alpha: f64 },

    #[error("grid needs at least 2 points, got {size}")]
    InvalidGrid { size: usize },

    #[error("aliasing risk: order/frequency {required} exceeds the grid maximum {max_frequency}")]
    AliasingRisk { required: u64, max_frequency: u64 },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("grid mismatch: {left} vs {right} points")]
    GridMismatch { left: usize, right: usize },

    #[error("signal has zero norm")]
    ZeroSignal,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
