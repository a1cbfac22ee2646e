//! Parametrizing sequences of ordered Büchi pair tuples, their structural
//! constants, and the closed-form triple and quadruple generators.

mod quad;
mod triple;

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactmath::{Integer, MathError};
use crate::tuples::{PairTuple, TupleError};

pub use quad::{
    quad_pfaffian_check, quadruple_from_free, quadruple_symbolic, QuadCheck, QuadConstants,
    QuadFormulas, QUAD_FREE,
};
pub use triple::{
    skew_triple_relations, triple_from_seed, GapConstants, SeededTriple, SkewRelation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("not a pair of consecutive Büchi pairs: {0}")]
    NotBuchiPair(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("no admissible split: {0}")]
    InfeasibleSplit(String),
    #[error("structural constant outside its domain: {0}")]
    DomainViolation(String),
    #[error("unsupported constant pattern: {0}")]
    UnsupportedPattern(String),
    #[error("seed constraint violated: {0}")]
    SeedConstraintViolation(String),
    #[error("entry {0} is not integral")]
    NotIntegral(String),
    #[error("identity failed: {0}")]
    IdentityFailure(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Tuple(#[from] TupleError),
}

/// The `2ⁿ` entries `s₀, ..., s_{2ⁿ-1}`; pair `j` is read off bit `j-1` of the index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamSeq {
    n: usize,
    s: Vec<Integer>,
}

impl ParamSeq {
    pub fn new(n: usize, s: Vec<Integer>) -> Result<Self, ParamError> {
        if n == 0 || n > 16 || s.len() != 1 << n {
            return Err(ParamError::InvariantViolation(format!(
                "expected 2^{n} entries, got {}",
                s.len()
            )));
        }
        Ok(ParamSeq { n, s })
    }

    pub fn from_i64(n: usize, s: &[i64]) -> Result<Self, ParamError> {
        Self::new(n, s.iter().map(|&v| v.into()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Integer] {
        &self.s
    }

    pub fn is_positive(&self) -> bool {
        self.s.iter().all(Signed::is_positive)
    }

    /// Product of the entries whose index has the given bit values.
    pub fn product_where(&self, conds: &[(usize, bool)]) -> Integer {
        self.s
            .iter()
            .enumerate()
            .filter(|(k, _)| conds.iter().all(|&(b, set)| ((k >> b) & 1 == 1) == set))
            .fold(Integer::one(), |acc, (_, v)| acc * v)
    }

    /// `(u_{j,i} - u_{i,j}, v_{i,j} - w_{i,j})` for the 0-based bit positions `i < j`.
    pub fn position_differences(&self, i: usize, j: usize) -> (Integer, Integer) {
        let u_ij = self.product_where(&[(i, false), (j, true)]);
        let u_ji = self.product_where(&[(i, true), (j, false)]);
        let v = self.product_where(&[(i, false), (j, false)]);
        let w = self.product_where(&[(i, true), (j, true)]);
        (u_ji - u_ij, v - w)
    }
}

impl fmt::Display for ParamSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.s.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Pairs `(x_j, y_j)` read off a sequence; no validation.
pub fn reconstruct(seq: &ParamSeq) -> Vec<(Integer, Integer)> {
    (0..seq.n)
        .map(|b| {
            (
                seq.product_where(&[(b, false)]),
                seq.product_where(&[(b, true)]),
            )
        })
        .collect()
}

/// [`reconstruct`] followed by pair-tuple validation.
pub fn reconstruct_tuple(seq: &ParamSeq) -> Result<PairTuple, ParamError> {
    Ok(PairTuple::new(reconstruct(seq))?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdSplit {
    pub v: Integer,
    pub w: Integer,
    pub u_fwd: Integer,
    pub u_bwd: Integer,
}

impl GcdSplit {
    /// `(v - w, u_bwd - u_fwd)`.
    pub fn differences(&self) -> (Integer, Integer) {
        (&self.v - &self.w, &self.u_bwd - &self.u_fwd)
    }
}

pub fn gcd_split(p1: &(Integer, Integer), p2: &(Integer, Integer)) -> Result<GcdSplit, ParamError> {
    let (x1, y1) = p1;
    let (x2, y2) = p2;
    let d = x1 * y1;
    if !d.is_positive() || x2 * y2 != d {
        return Err(ParamError::NotBuchiPair("products differ or vanish".into()));
    }
    if (x2 + y2) - (x1 + y1) != Integer::one() {
        return Err(ParamError::NotBuchiPair("sums do not differ by 1".into()));
    }
    let split = GcdSplit {
        v: x1.gcd(x2),
        w: y1.gcd(y2),
        u_fwd: x1.gcd(y2),
        u_bwd: y1.gcd(x2),
    };
    let ok = &split.v * &split.u_fwd == *x1
        && &split.w * &split.u_bwd == *y1
        && &split.v * &split.u_bwd == *x2
        && &split.w * &split.u_fwd == *y2;
    if !ok {
        return Err(ParamError::NotBuchiPair("gcd reconstruction failed".into()));
    }
    Ok(split)
}

/// Orients every pair so that consecutive splits have `v - w = u_bwd - u_fwd = 1`
/// and `x₁ ≥ y₁`.
pub fn order_normalize(p: &PairTuple) -> Result<PairTuple, ParamError> {
    if p.is_trivial() {
        return Err(ParamError::InvariantViolation("trivial tuple".into()));
    }
    let pairs = p.pairs();
    let mut out = Vec::with_capacity(pairs.len());
    let first = &pairs[0];
    out.push(if first.0 >= first.1 {
        first.clone()
    } else {
        (first.1.clone(), first.0.clone())
    });
    for next in &pairs[1..] {
        let prev = out.last().unwrap();
        let split = gcd_split(prev, next)?;
        let oriented = if split.differences().0.is_one() {
            next.clone()
        } else {
            (next.1.clone(), next.0.clone())
        };
        let check = gcd_split(prev, &oriented)?;
        if check.differences() != (Integer::one(), Integer::one()) {
            return Err(ParamError::InvariantViolation(
                "split differences are not ±1".into(),
            ));
        }
        out.push(oriented);
    }
    Ok(PairTuple::new(out)?)
}

fn check_ordered(p: &PairTuple) -> Result<(), ParamError> {
    if p.is_trivial() {
        return Err(ParamError::InvariantViolation("trivial tuple".into()));
    }
    let pairs = p.pairs();
    if pairs[0].0 < pairs[0].1 {
        return Err(ParamError::InvariantViolation(
            "not ordered: need x1 >= y1".into(),
        ));
    }
    for w in pairs.windows(2) {
        if gcd_split(&w[0], &w[1])?.differences() != (Integer::one(), Integer::one()) {
            return Err(ParamError::InvariantViolation(
                "not ordered: split differences".into(),
            ));
        }
    }
    Ok(())
}

/// Positive parametrizing sequence of an ordered non-trivial tuple.
///
/// Each step splits `r_j = s_j s_{j+2ᵐ}` so the low halves multiply to
/// `x_{m+1}`; per prime the exponent goes to the highest admissible index
/// first, which gives the lexicographically smallest allocation.
pub fn build_param_seq(p: &PairTuple) -> Result<ParamSeq, ParamError> {
    if p.len() < 2 {
        return Err(ParamError::InvariantViolation(
            "need at least two pairs".into(),
        ));
    }
    check_ordered(p)?;
    let pairs = p.pairs();
    let g = gcd_split(&pairs[0], &pairs[1])?;
    let mut s = vec![g.v, g.u_bwd, g.u_fwd, g.w];
    for (m, pair) in pairs.iter().enumerate().skip(2) {
        let half = s.len();
        let mut remaining = pair.0.clone();
        let mut low = vec![Integer::zero(); half];
        for j in (0..half).rev() {
            let gj = s[j].gcd(&remaining);
            remaining /= &gj;
            low[j] = gj;
        }
        if !remaining.is_one() {
            return Err(ParamError::InfeasibleSplit(format!(
                "x_{} does not divide out",
                m + 1
            )));
        }
        let high: Vec<Integer> = s.iter().zip(&low).map(|(r, l)| r / l).collect();
        s = low.into_iter().chain(high).collect();
    }
    let seq = ParamSeq::new(p.len(), s)?;
    if reconstruct(&seq) != pairs {
        return Err(ParamError::InfeasibleSplit(
            "reconstruction mismatch".into(),
        ));
    }
    for b in 0..seq.n - 1 {
        if seq.position_differences(b, b + 1) != (Integer::one(), Integer::one()) {
            return Err(ParamError::InfeasibleSplit(format!(
                "adjacent differences at bits {b},{}",
                b + 1
            )));
        }
    }
    Ok(seq)
}

/// β, δ and γ of a parametrizing sequence, by tuple length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralConstants {
    pub n: usize,
    /// `β_j = u_{j+2,j} - u_{j,j+2}`.
    pub beta: Vec<u32>,
    /// `δ_j = v_{j+3,j} - w_{j+3,j}`.
    pub delta: Vec<u32>,
    /// `γ = v_{5,1} - w_{5,1}`.
    pub gamma: Option<u32>,
}

pub fn structural_constants(seq: &ParamSeq) -> Result<StructuralConstants, ParamError> {
    let n = seq.n();
    if !(3..=5).contains(&n) {
        return Err(ParamError::DomainViolation(format!(
            "tuple length {n} not in 3..=5"
        )));
    }
    if !seq.is_positive() {
        return Err(ParamError::DomainViolation(
            "sequence has non-positive entries".into(),
        ));
    }
    for b in 0..n - 1 {
        if seq.position_differences(b, b + 1) != (Integer::one(), Integer::one()) {
            return Err(ParamError::DomainViolation(format!(
                "adjacent difference at bits {b},{}",
                b + 1
            )));
        }
    }
    let pick = |i: usize, j: usize, gap: u32, use_u: bool, domain: &[u32], name: String| {
        let (du, dv) = seq.position_differences(i, j);
        let (val, other) = if use_u { (du, dv) } else { (dv, du) };
        let v = val.to_u32().filter(|v| domain.contains(v));
        match v {
            Some(v) if &val * &other == Integer::from(gap) => Ok(v),
            _ => Err(ParamError::DomainViolation(format!("{name} = {val}"))),
        }
    };
    let beta = (0..n - 2)
        .map(|j| pick(j, j + 2, 2, true, &[1, 2], format!("beta_{}", j + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    let delta = (0..n.saturating_sub(3))
        .map(|j| pick(j, j + 3, 3, false, &[1, 3], format!("delta_{}", j + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    let gamma = if n == 5 {
        Some(pick(0, 4, 4, false, &[1, 2, 4], "gamma".into())?)
    } else {
        None
    };
    Ok(StructuralConstants {
        n,
        beta,
        delta,
        gamma,
    })
}

/// `(ψ_i(j), ψ_i(j) + 2^{i-1})` where `ψ_i` inserts a zero bit at position `i-1`.
pub fn lexicon_map(i: usize, j: usize) -> Result<(usize, usize), ParamError> {
    if !(1..=5).contains(&i) || j > 15 {
        return Err(ParamError::IndexOutOfRange(format!("i = {i}, j = {j}")));
    }
    let low = j & ((1 << (i - 1)) - 1);
    let psi = ((j >> (i - 1)) << i) | low;
    Ok((psi, psi + (1 << (i - 1))))
}
