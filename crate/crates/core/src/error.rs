//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("solver did not converge after {iters} iterations (relative residual {residual:.3e}, tolerance {tol:.3e})")]
    NoConvergence { iters: usize, residual: f64, tol: f64 },

    #[error("right-hand side is not orthogonal to the constant vector on every component (relative mass {0:.3e})")]
    RhsNotOrthogonal(f64),

    #[error("graph is disconnected: {0}")]
    Disconnected(String),

    #[error("degenerate system: {0}")]
    Degenerate(String),

    #[error("{n} nodes exceeds the dense oracle cap of {cap}")]
    DenseCapExceeded { n: usize, cap: usize },

    #[error("bound is vacuous: {0}")]
    VacuousBound(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: validation problems map to 2, solver
    /// failures to 3, anything else to 1.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::InvalidInput(_)
            | Error::DimensionMismatch { .. }
            | Error::Disconnected(_)
            | Error::Degenerate(_)
            | Error::DenseCapExceeded { .. }
            | Error::VacuousBound(_)
            | Error::Parse(_) => 2,
            Error::NoConvergence { .. } | Error::RhsNotOrthogonal(_) => 3,
            Error::Io(_) => 1,
        }
    }
}
