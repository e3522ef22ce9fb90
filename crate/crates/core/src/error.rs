//! Crate-wide error type.

use crate::partition::Partition;
use crate::rational::Rat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Inversion, duals and log-derivatives need an invertible constant term.
    #[error("constant term is zero")]
    ZeroConstantTerm,

    /// An index past the truncation order was requested.
    #[error("index {needed} requested but series is only known to order {available}")]
    InsufficientPrecision { needed: i64, available: usize },

    /// The inner partition of a skew shape must sit inside the outer one.
    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    InvalidShape { outer: Partition, inner: Partition },

    /// Kostka numbers are only defined when |shape| = |weight|.
    #[error("shape weight {shape} does not match filling weight {filling}")]
    WeightMismatch { shape: usize, filling: usize },

    /// A Toeplitz-minor entry index fell past the end of the sequence.
    #[error("sequence index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// A simple-comodule dimension came out non-integral: the input series
    /// cannot belong to a Hecke operator.
    #[error("dimension of simple comodule {partition} is {value}, not an integer")]
    NonIntegralDimension { partition: Partition, value: Rat },

    /// A simple-comodule dimension came out negative: same rejection.
    #[error("dimension of simple comodule {partition} is {value}, negative")]
    NegativeDimension { partition: Partition, value: Rat },

    /// Hecke sums are only defined for operators sharing the parameter q.
    #[error("Hecke parameters differ: {left} vs {right}")]
    MismatchedParameter { left: Rat, right: Rat },

    /// Series flagged as carrying infinitely many roots or poles hold only a
    /// finite sample of them, so they cannot be expanded.
    #[error("series is flagged as an infinite parameter family and cannot be expanded")]
    InfiniteFamily,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroConstantTerm => "ZeroConstantTerm",
            Error::InsufficientPrecision { .. } => "InsufficientPrecision",
            Error::InvalidShape { .. } => "InvalidShape",
            Error::WeightMismatch { .. } => "WeightMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NonIntegralDimension { .. } => "NonIntegralDimension",
            Error::NegativeDimension { .. } => "NegativeDimension",
            Error::MismatchedParameter { .. } => "MismatchedParameter",
            Error::InfiniteFamily => "InfiniteFamily",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
