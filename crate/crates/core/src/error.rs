use thiserror::Error;

/// Errors raised by ratio parsing, index checks and solver preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("malformed ratio {0:?}: expected A/B, 0 or 1")]
    MalformedRatio(String),

    #[error("invalid bit character {0:?}")]
    InvalidBit(char),

    #[error("ratio denominator must be positive")]
    ZeroDenominator,

    #[error("ratio {alpha}/{beta} exceeds 1")]
    DensityAboveOne { alpha: u64, beta: u64 },

    #[error("span [{start}, {end}] is outside 1..={len}")]
    IndexOutOfRange { start: usize, end: usize, len: usize },

    /// n·β would exceed 2^62, so distances could overflow 64-bit arithmetic.
    #[error("stream length {n} with denominator {beta} exceeds the 2^62 arithmetic bound")]
    Overflow { n: usize, beta: u64 },

    #[error("ratio {alpha}/{beta} is 0 or 1; use the run-length solver")]
    TrivialRatio { alpha: u64, beta: u64 },

    #[error("ratio {alpha}/{beta} is strictly between 0 and 1; the run-length solver does not apply")]
    NonTrivialRatio { alpha: u64, beta: u64 },

    #[error("algorithm {algorithm} does not solve the {problem} density problem")]
    Unsupported {
        algorithm: &'static str,
        problem: &'static str,
    },
}

pub type Result<T, E = DensityError> = std::result::Result<T, E>;
