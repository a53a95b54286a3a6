//! Exact arithmetic: rationals, dense polynomials, truncated power series and
//! linear systems over the rationals.
//!
//! Polynomial gcd uses monic Euclidean remainder sequences. Every remainder
//! is rescaled to leading coefficient one before the next division, which
//! keeps coefficient growth modest for the low-degree polynomials that occur
//! here.

mod linear;
mod poly;
mod rational;
mod series;

pub use linear::solve_linear;
pub use poly::{Degree, Poly};
pub use rational::Rational;
pub use series::{series_of_ratfun, SeriesPrefix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("denominator vanishes at z = 0; not a power series")]
    NotAPowerSeries,
    #[error("a series prefix needs at least one coefficient")]
    EmptySeries,
    #[error("linear system is singular: no pivot in column {column}")]
    Singular { column: usize },
    #[error("linear system is inconsistent at equation {equation}")]
    Inconsistent { equation: usize },
    #[error("malformed linear system: {0}")]
    Shape(String),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
