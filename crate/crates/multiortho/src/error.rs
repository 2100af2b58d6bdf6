//! Error type shared across the crate.

use std::fmt;

/// Errors raised by arithmetic, series evaluation, solvers and the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Gamma evaluated at (or numerically indistinguishable from) a pole.
    Pole(String),
    /// A hypergeometric-type series has no terminating upper parameter.
    NonTerminating(String),
    /// A lower-parameter Pochhammer symbol vanishes before the series terminates.
    DenominatorPole(String),
    /// Family parameters violate the weight-system constraints (AT conditions etc.).
    InvalidParams(String),
    /// A moment linear system is singular at the working precision.
    SingularSystem(String),
    /// The two independent derivations of the recurrence coefficients disagree.
    RouteMismatch(String),
    /// Cancellation consumed the working precision.
    PrecisionExhausted(String),
    /// An index argument is outside its documented range.
    IndexOutOfRange(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pole(m) => write!(f, "gamma pole: {m}"),
            Self::NonTerminating(m) => write!(f, "non-terminating series: {m}"),
            Self::DenominatorPole(m) => write!(f, "denominator pole: {m}"),
            Self::InvalidParams(m) => write!(f, "invalid parameters: {m}"),
            Self::SingularSystem(m) => write!(f, "singular system: {m}"),
            Self::RouteMismatch(m) => write!(f, "route mismatch: {m}"),
            Self::PrecisionExhausted(m) => write!(f, "precision exhausted: {m}"),
            Self::IndexOutOfRange(m) => write!(f, "index out of range: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
