//! Büchi tuples, their pair representation, monic quadratic progressions,
//! the divisor-chain search and the Hensley family.

mod search;

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactmath::Integer;

pub use search::{enumerate_triples, search_chains, SearchConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TupleError {
    #[error("sequence too short: need at least {min} terms, got {got}")]
    TooShort { min: usize, got: usize },
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("degenerate parameter t = {0}: a cubic value vanishes")]
    DegenerateParameter(Integer),
}

/// Square roots u₁, ..., uₙ of a candidate sequence of squares.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BuchiTuple(Vec<Integer>);

impl BuchiTuple {
    pub fn new(u: Vec<Integer>) -> Result<Self, TupleError> {
        if u.is_empty() {
            return Err(TupleError::TooShort { min: 1, got: 0 });
        }
        if u.iter().any(Signed::is_negative) {
            return Err(TupleError::InvariantViolation("negative entry".into()));
        }
        Ok(BuchiTuple(u))
    }

    pub fn from_i64(u: &[i64]) -> Result<Self, TupleError> {
        Self::new(u.iter().map(|&v| Integer::from(v)).collect())
    }

    pub fn values(&self) -> &[Integer] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn squares(&self) -> Vec<Integer> {
        self.0.iter().map(|u| u * u).collect()
    }
}

impl fmt::Display for BuchiTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `a_{k+2} - 2a_{k+1} + a_k` for each admissible `k`.
pub fn second_differences(seq: &[Integer]) -> Result<Vec<Integer>, TupleError> {
    if seq.len() < 3 {
        return Err(TupleError::TooShort {
            min: 3,
            got: seq.len(),
        });
    }
    Ok(seq
        .windows(3)
        .map(|w| &w[2] - &w[1] * 2u32 + &w[0])
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub valid: bool,
    pub trivial: bool,
    pub contains_zero: bool,
}

/// Valid: strictly increasing with all second differences of the squares equal
/// to 2. Trivial: consecutive integers.
pub fn classify(u: &BuchiTuple) -> Classification {
    let v = u.values();
    let increasing = v.windows(2).all(|w| w[0] < w[1]);
    let two = Integer::from(2);
    let diffs_ok = v.len() < 3
        || second_differences(&u.squares())
            .unwrap()
            .iter()
            .all(|d| *d == two);
    let trivial = v.windows(2).all(|w| &w[1] - &w[0] == Integer::one());
    Classification {
        valid: increasing && diffs_ok,
        trivial,
        contains_zero: v.iter().any(Zero::is_zero),
    }
}

/// Pairs `(x_j, y_j)` with common product `D` and sums increasing by one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairTuple {
    pairs: Vec<(Integer, Integer)>,
}

impl PairTuple {
    pub fn new(pairs: Vec<(Integer, Integer)>) -> Result<Self, TupleError> {
        let Some((x1, y1)) = pairs.first() else {
            return Err(TupleError::TooShort { min: 1, got: 0 });
        };
        if pairs
            .iter()
            .any(|(x, y)| x.is_negative() || y.is_negative())
        {
            return Err(TupleError::InvariantViolation("negative pair entry".into()));
        }
        let d = x1 * y1;
        for (j, w) in pairs.windows(2).enumerate() {
            let (a, b) = (&w[0], &w[1]);
            if &b.0 * &b.1 != d {
                return Err(TupleError::InvariantViolation(format!(
                    "product of pair {} differs from D = {d}",
                    j + 2
                )));
            }
            if (&b.0 + &b.1) - (&a.0 + &a.1) != Integer::one() {
                return Err(TupleError::InvariantViolation(format!(
                    "sums of pairs {} and {} do not differ by 1",
                    j + 1,
                    j + 2
                )));
            }
        }
        Ok(PairTuple { pairs })
    }

    pub fn from_i64(pairs: &[(i64, i64)]) -> Result<Self, TupleError> {
        Self::new(pairs.iter().map(|&(x, y)| (x.into(), y.into())).collect())
    }

    pub fn pairs(&self) -> &[(Integer, Integer)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Common product `D = x₁y₁`.
    pub fn d(&self) -> Integer {
        &self.pairs[0].0 * &self.pairs[0].1
    }

    /// Shift `s = x₁ + y₁ - 1`.
    pub fn s(&self) -> Integer {
        &self.pairs[0].0 + &self.pairs[0].1 - 1u32
    }

    pub fn is_trivial(&self) -> bool {
        self.d().is_zero()
    }

    /// The same tuple with every pair swapped.
    pub fn swapped(&self) -> Self {
        PairTuple {
            pairs: self
                .pairs
                .iter()
                .map(|(x, y)| (y.clone(), x.clone()))
                .collect(),
        }
    }

    pub(crate) fn from_raw(pairs: Vec<(Integer, Integer)>) -> Self {
        PairTuple { pairs }
    }
}

impl fmt::Display for PairTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(x, y)| format!("({x},{y})"))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Recovers `s` and `D` from `u₁, u₂` and builds `x_k = (s+k+u_k)/2`, `y_k = (s+k-u_k)/2`.
pub fn pairs_from_tuple(u: &BuchiTuple) -> Result<PairTuple, TupleError> {
    let v = u.values();
    if v.len() < 2 {
        return Err(TupleError::TooShort {
            min: 2,
            got: v.len(),
        });
    }
    let (u1, u2) = (&v[0], &v[1]);
    if (u2 - u1).is_even() {
        return Err(TupleError::ParityViolation(format!(
            "u2 - u1 = {} is even",
            u2 - u1
        )));
    }
    let s = (u2 * u2 - u1 * u1 - 3u32) / 2u32;
    let four_d = (&s + 1u32).pow(2) - u1 * u1;
    if !four_d.is_multiple_of(&Integer::from(4)) {
        return Err(TupleError::ParityViolation(
            "discriminant not divisible by 16".into(),
        ));
    }
    let d = four_d / 4u32;
    let mut pairs = Vec::with_capacity(v.len());
    for (k, uk) in v.iter().enumerate() {
        let base = &s + (k as u32 + 1);
        let (xx, yy) = (&base + uk, &base - uk);
        let (x, y) = (&xx / 2u32, yy / 2u32);
        if xx.is_odd() || &x * &y != d || y.is_negative() {
            return Err(TupleError::InvariantViolation(format!(
                "u_{} does not continue the progression",
                k + 1
            )));
        }
        pairs.push((x, y));
    }
    Ok(PairTuple { pairs })
}

/// `u_j = |x_j - y_j|`.
pub fn tuple_from_pairs(p: &PairTuple) -> Result<BuchiTuple, TupleError> {
    let p = PairTuple::new(p.pairs.clone())?;
    BuchiTuple::new(p.pairs.iter().map(|(x, y)| (x - y).abs()).collect())
}

/// `f(k) = k² + 2ak + b`; for a Büchi tuple `f(k) = u_k²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadProgression {
    pub a: Integer,
    pub b: Integer,
}

impl QuadProgression {
    /// Uses `u_k² = (s+k)² - 4D`, so `a = s` and `b = s² - 4D`.
    pub fn from_tuple(u: &BuchiTuple) -> Result<Self, TupleError> {
        let p = pairs_from_tuple(u)?;
        let s = p.s();
        let b = &s * &s - p.d() * 4u32;
        Ok(QuadProgression { a: s, b })
    }

    pub fn eval(&self, k: &Integer) -> Integer {
        k * k + &self.a * k * 2u32 + &self.b
    }

    pub fn discriminant(&self) -> Integer {
        &self.a * &self.a * 4u32 - &self.b * 4u32
    }
}

/// The value `u_k²` predicted by the displayed closed form
/// `k² + k(u₂² - u₁² - 1) + u₁²`, kept for comparison only.
pub fn quadpoly_as_printed(u1: &Integer, u2: &Integer, k: &Integer) -> Integer {
    k * k + k * (u2 * u2 - u1 * u1 - 1u32) + u1 * u1
}

/// Hensley's cubic family, absolute-valued and sorted ascending.
pub fn hensley(t: &Integer) -> Result<BuchiTuple, TupleError> {
    let cubic = |b: i64, c: i64, d: i64| -> Integer {
        let t2 = t * t;
        &t2 * t * 2 + &t2 * b + t * c + d
    };
    let mut u: Vec<Integer> = [
        cubic(12, 19, 6),
        cubic(14, 31, 23),
        cubic(16, 41, 32),
        cubic(18, 49, 39),
    ]
    .into_iter()
    .map(|v| v.abs())
    .collect();
    if u.iter().any(Zero::is_zero) {
        return Err(TupleError::DegenerateParameter(t.clone()));
    }
    u.sort();
    BuchiTuple::new(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn second_difference_examples() {
        assert_eq!(second_differences(&ints(&[1, 4, 9])).unwrap(), ints(&[2]));
        assert_eq!(
            second_differences(&ints(&[36, 529, 1024, 1521])).unwrap(),
            ints(&[2, 2])
        );
        assert_eq!(
            second_differences(&ints(&[1, 144, 289])).unwrap(),
            ints(&[2])
        );
        assert_eq!(
            second_differences(&ints(&[1, 4])),
            Err(TupleError::TooShort { min: 3, got: 2 })
        );
    }

    #[test]
    fn classification() {
        let c = classify(&BuchiTuple::from_i64(&[2, 3, 4, 5, 6]).unwrap());
        assert!(c.valid && c.trivial);
        let c = classify(&BuchiTuple::from_i64(&[6, 23, 32, 39]).unwrap());
        assert!(c.valid && !c.trivial);
        assert!(!classify(&BuchiTuple::from_i64(&[1, 12, 18]).unwrap()).valid);
        let c = classify(&BuchiTuple::from_i64(&[0, 7, 10]).unwrap());
        assert!(c.valid && c.contains_zero);
    }

    #[test]
    fn pair_conversion() {
        let p = pairs_from_tuple(&BuchiTuple::from_i64(&[1, 12, 17]).unwrap()).unwrap();
        assert_eq!(
            p,
            PairTuple::from_i64(&[(36, 35), (42, 30), (45, 28)]).unwrap()
        );
        assert_eq!((p.s(), p.d()), (70.into(), 1260.into()));
        let p = pairs_from_tuple(&BuchiTuple::from_i64(&[6, 23, 32, 39]).unwrap()).unwrap();
        assert_eq!(
            p,
            PairTuple::from_i64(&[(126, 120), (135, 112), (140, 108), (144, 105)]).unwrap()
        );
        assert_eq!((p.s(), p.d()), (245.into(), 15120.into()));
        let p = pairs_from_tuple(&BuchiTuple::from_i64(&[1, 2, 3]).unwrap()).unwrap();
        assert_eq!(p, PairTuple::from_i64(&[(1, 0), (2, 0), (3, 0)]).unwrap());
        assert!(p.is_trivial());
        assert!(matches!(
            pairs_from_tuple(&BuchiTuple::from_i64(&[1, 3, 5]).unwrap()),
            Err(TupleError::ParityViolation(_))
        ));
        assert!(matches!(
            pairs_from_tuple(&BuchiTuple::from_i64(&[1, 12, 18]).unwrap()),
            Err(TupleError::InvariantViolation(_))
        ));
    }

    #[test]
    fn tuple_from_pair_examples() {
        let p = PairTuple::from_i64(&[(36, 35), (42, 30), (45, 28)]).unwrap();
        assert_eq!(
            tuple_from_pairs(&p).unwrap(),
            BuchiTuple::from_i64(&[1, 12, 17]).unwrap()
        );
        let p = PairTuple::from_i64(&[(1, 0), (2, 0)]).unwrap();
        assert_eq!(
            tuple_from_pairs(&p).unwrap(),
            BuchiTuple::from_i64(&[1, 2]).unwrap()
        );
        assert!(PairTuple::from_i64(&[(36, 35), (42, 31)]).is_err());
    }

    #[test]
    fn quadratic_progression() {
        let u = BuchiTuple::from_i64(&[6, 23, 32, 39]).unwrap();
        let q = QuadProgression::from_tuple(&u).unwrap();
        for (k, uk) in u.values().iter().enumerate() {
            assert_eq!(q.eval(&Integer::from(k + 1)), uk * uk);
        }
        assert_eq!(q.discriminant(), Integer::from(16 * 15120));
        // the printed closed form is shifted by one index
        let printed = quadpoly_as_printed(&6.into(), &23.into(), &1.into());
        assert_eq!(printed, Integer::from(23 * 23));
    }

    #[test]
    fn hensley_examples() {
        assert_eq!(
            hensley(&0.into()).unwrap(),
            BuchiTuple::from_i64(&[6, 23, 32, 39]).unwrap()
        );
        assert_eq!(
            hensley(&(-1).into()).unwrap(),
            BuchiTuple::from_i64(&[3, 4, 5, 6]).unwrap()
        );
        assert_eq!(
            hensley(&(-2).into()),
            Err(TupleError::DegenerateParameter((-2).into()))
        );
        assert_eq!(
            hensley(&(-3).into()),
            Err(TupleError::DegenerateParameter((-3).into()))
        );
        assert_eq!(
            hensley(&(-4).into()).unwrap(),
            BuchiTuple::from_i64(&[3, 4, 5, 6]).unwrap()
        );
    }
}
