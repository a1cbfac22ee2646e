//! Exact tooling for Büchi tuples: sequences of squares whose second
//! differences are all 2.
//!
//! * [`exactmath`] exact polynomial, rational function and matrix arithmetic.
//! * [`tuples`] tuple and pair representations, classification and search.
//! * [`paramet`] parametrizing sequences and the triple/quadruple formulas.
//! * [`proofkit`] symbolic audit of the quintuple identities.

pub mod exactmath;
pub mod paramet;
pub mod proofkit;
pub mod tuples;

pub use exactmath::{Integer, MultiPoly, PolyMatrix, RatFunc, Rational, Universe};
