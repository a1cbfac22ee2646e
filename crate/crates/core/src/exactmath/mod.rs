//! Exact arithmetic over the rationals: multivariate polynomials, rational
//! functions, polynomial matrices and a small expression language.

mod expr;
mod gcd;
mod matrix;
mod poly;
mod ratfunc;
mod universe;

use thiserror::Error;

pub use expr::{parse_poly, parse_ratfunc, Constants, NoConstants};
pub use gcd::poly_gcd;
pub use matrix::{pfaffian4, PolyMatrix};
pub use poly::{Monomial, MultiPoly};
pub use ratfunc::{equal_up_to_scalar, RatFunc};
pub use universe::Universe;

/// Arbitrary precision integer.
pub type Integer = num_bigint::BigInt;
/// Reduced fraction of [`Integer`]s with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("operands live in different variable universes")]
    UniverseMismatch,
    #[error("division is not exact")]
    DivisionNotExact,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("expected {expected} entries, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Shorthand for `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// Shorthand for an integral [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}
