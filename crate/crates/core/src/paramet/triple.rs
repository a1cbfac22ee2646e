use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{reconstruct, ParamError, ParamSeq};
use crate::exactmath::{Integer, RatFunc, Rational};
use crate::tuples::BuchiTuple;

/// The pair `(u_{j,i} - u_{i,j}, v_{i,j} - w_{i,j})` across one gap of a triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapConstants {
    pub u: Rational,
    pub vw: Rational,
}

impl GapConstants {
    pub fn new(u: Rational, vw: Rational) -> Self {
        GapConstants { u, vw }
    }

    pub fn unit() -> Self {
        Self::new(Rational::one(), Rational::one())
    }
}

/// `scale · q[target] = Σ coeff · q[index]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewRelation {
    pub scale: Rational,
    pub target: usize,
    pub terms: Vec<(Rational, usize)>,
}

impl SkewRelation {
    pub fn residual(&self, q: &[Rational]) -> Rational {
        let rhs: Rational = self.terms.iter().map(|(c, i)| c * &q[*i]).sum();
        &self.scale * &q[self.target] - rhs
    }

    pub fn residual_symbolic(&self, q: &[RatFunc]) -> Result<RatFunc, crate::exactmath::MathError> {
        let mut acc = q[self.target].scale(&self.scale);
        for (c, i) in &self.terms {
            acc = acc.try_sub(&q[*i].scale(c))?;
        }
        Ok(acc)
    }
}

fn coeff_prefix(c: &Rational) -> String {
    if c.is_one() {
        String::new()
    } else if c.is_integer() {
        format!("{c}*")
    } else {
        format!("({c})*")
    }
}

impl fmt::Display for SkewRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}q{} =", coeff_prefix(&self.scale), self.target)?;
        for (k, (c, i)) in self.terms.iter().enumerate() {
            let mag = coeff_prefix(&c.abs());
            match (k, c.is_negative()) {
                (0, false) => write!(f, " {mag}q{i}")?,
                (0, true) => write!(f, " -{mag}q{i}")?,
                (_, false) => write!(f, " + {mag}q{i}")?,
                (_, true) => write!(f, " - {mag}q{i}")?,
            }
        }
        Ok(())
    }
}

/// The four linear relations satisfied by the eight entries of a triple's
/// parametrizing sequence, given the constants of both gaps and the outer
/// difference `u_{3,1} - u_{1,3}`.
pub fn skew_triple_relations(
    first: &GapConstants,
    second: &GapConstants,
    outer: &Rational,
) -> Result<Vec<SkewRelation>, ParamError> {
    let all = [&first.u, &first.vw, &second.u, &second.vw, outer];
    if all.iter().any(|c| !c.is_positive()) {
        return Err(ParamError::UnsupportedPattern(
            "constants must be positive".into(),
        ));
    }
    let gap_ok = |g: &GapConstants| {
        let p = &g.u * &g.vw;
        p.is_integer() && (p == Rational::one() || p == Rational::from_integer(2.into()))
    };
    if !gap_ok(first) || !gap_ok(second) {
        return Err(ParamError::UnsupportedPattern(
            "gap products must be 1 or 2".into(),
        ));
    }
    let rel = |target, a: &Rational, i, b: Rational, j| SkewRelation {
        scale: outer.clone(),
        target,
        terms: vec![(a.clone(), i), (b, j)],
    };
    Ok(vec![
        rel(0, &second.vw, 3, -&first.vw, 6),
        rel(2, &second.u, 1, first.u.clone(), 4),
        rel(5, &first.u, 3, second.u.clone(), 6),
        rel(7, &second.vw, 4, -&first.vw, 1),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeededTriple {
    pub seq: ParamSeq,
    pub tuple: BuchiTuple,
    /// Some entry is non-positive, so the output is not a genuine ordered triple.
    pub degenerate: bool,
}

/// Completes the seed `(s₁, s₃, s₄, s₆)` to a triple sequence:
/// `s₀ = (s₃-s₆)/β`, `s₂ = (s₁+s₄)/β`, `s₅ = (s₃+s₆)/β`, `s₇ = (s₄-s₁)/β`.
pub fn triple_from_seed(
    s1: &Integer,
    s3: &Integer,
    s4: &Integer,
    s6: &Integer,
    beta: u32,
) -> Result<SeededTriple, ParamError> {
    if beta != 1 && beta != 2 {
        return Err(ParamError::SeedConstraintViolation(format!(
            "beta = {beta}"
        )));
    }
    if [s1, s3, s4, s6].iter().any(|v| v.is_negative()) {
        return Err(ParamError::SeedConstraintViolation(
            "negative seed entry".into(),
        ));
    }
    let b = Integer::from(beta);
    if s1 * s3 - s4 * s6 != b {
        return Err(ParamError::SeedConstraintViolation(
            "s1*s3 - s4*s6 != beta".into(),
        ));
    }
    let div = |n: Integer| {
        let (q, r) = n.div_rem(&b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ParamError::SeedConstraintViolation(format!(
                "beta does not divide {n}"
            )))
        }
    };
    let s0 = div(s3 - s6)?;
    let s2 = div(s1 + s4)?;
    let s5 = div(s3 + s6)?;
    let s7 = div(s4 - s1)?;
    let seq = ParamSeq::new(
        3,
        vec![
            s0,
            s1.clone(),
            s2,
            s3.clone(),
            s4.clone(),
            s5,
            s6.clone(),
            s7,
        ],
    )?;
    let pairs = reconstruct(&seq);
    let degenerate = !seq.is_positive() || pairs.iter().any(|(x, y)| x < y);
    let tuple = BuchiTuple::new(pairs.iter().map(|(x, y)| (x - y).abs()).collect())?;
    Ok(SeededTriple {
        seq,
        tuple,
        degenerate,
    })
}
