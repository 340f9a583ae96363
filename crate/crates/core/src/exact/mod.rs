//! Exact scalar towers and dense matrices over them.
//!
//! Three scalar rings are provided: big rationals, power series in `t`
//! truncated at a fixed order, and sparse multivariate polynomials in the
//! electrical variables. Determinants and Pfaffians work over any of them.

mod matrix;
mod poly;
mod ring;
mod series;

pub use matrix::SquareMatrix;
pub use poly::{FormalPolynomial, Monomial, Var};
pub use ring::{rat, Ring};
pub use series::{series_limit_constant, TruncatedSeries};

use thiserror::Error;

/// Arbitrary-precision fraction, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("Pfaffian of a matrix with odd dimension {0}")]
    OddDimension(usize),
    #[error("matrix is not antisymmetric: entries ({row}, {col}) and ({col}, {row}) do not cancel")]
    NotAntisymmetric { row: usize, col: usize },
    #[error("expected {expected} matrix entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("coefficient of t^{index} is nonzero where the limit requires it to vanish")]
    NonvanishingLowOrder { index: usize },
    #[error("series known only to order {order}, coefficient of t^{needed} requested")]
    InsufficientOrder { order: usize, needed: usize },
    #[error("divisor vanishes to higher order than the dividend")]
    DivisionValuation,
    #[error("division by zero")]
    DivisionByZero,
}
