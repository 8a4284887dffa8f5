use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An argument would overflow the floating-point evaluation.
    #[error("range error: {0}")]
    Range(String),

    /// A rotation system failed structural validation.
    #[error("invalid rotation system: {0}")]
    Validation(String),

    /// The underlying graph is not connected.
    #[error("graph is not connected")]
    Disconnected,

    /// Randomized embedding search exhausted its iteration budget.
    #[error("no genus-{target} rotation system of K_{n} found within {iterations} iterations")]
    SearchFailed {
        n: usize,
        target: usize,
        iterations: u64,
    },

    /// Length equalization requires a connected intersection graph.
    #[error("equalization cannot complete: intersection graph is disconnected")]
    EqualizationDisconnected,

    /// The operation is not defined for this input shape.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Rotation-system file could not be parsed.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = core::result::Result<T, Error>;
