//! Classical multiple orthogonal polynomials at arbitrary precision.

pub mod error;
pub mod real;

pub use error::{Error, Result};
pub use real::{Rational, Real};
