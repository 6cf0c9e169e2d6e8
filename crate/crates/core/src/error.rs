use thiserror::Error;

/// Errors raised by the exact kernels and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty index")]
    EmptyIndex,
    #[error("index entries must be positive integers")]
    InvalidEntry,
    #[error("depth mismatch: {left} vs {right}")]
    DepthMismatch { left: usize, right: usize },
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("denominator is divisible by {p}")]
    NonInvertibleDenominator { p: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unsupported prime power exponent {0} (expected 1, 2 or 3)")]
    UnsupportedExponent(u32),
    #[error("q must lie strictly between 0 and 1, got {0}")]
    InvalidQPoint(String),
    #[error("move does not apply: {0}")]
    InapplicableMove(String),
    #[error("transport chain broken at step {step}: {detail}")]
    ChainBroken { step: usize, detail: String },
    #[error("parity hypothesis violated: {0}")]
    ParityViolation(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
