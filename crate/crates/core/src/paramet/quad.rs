use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use super::{ParamError, ParamSeq};
use crate::exactmath::{
    equal_up_to_scalar, parse_ratfunc, pfaffian4, Integer, PolyMatrix, RatFunc, Rational, Universe,
};

/// Indices of the free entries `s₁, s₂, s₄, s₇, s₉, s₁₁, s₁₂, s₁₄`.
pub const QUAD_FREE: [usize; 8] = [1, 2, 4, 7, 9, 11, 12, 14];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadConstants {
    pub b1: u32,
    pub b2: u32,
    pub d: u32,
}

impl QuadConstants {
    pub fn new(b1: u32, b2: u32, d: u32) -> Result<Self, ParamError> {
        if ![1, 2].contains(&b1) || ![1, 2].contains(&b2) || ![1, 3].contains(&d) {
            return Err(ParamError::DomainViolation(format!(
                "(b1, b2, d) = ({b1}, {b2}, {d})"
            )));
        }
        Ok(QuadConstants { b1, b2, d })
    }

    pub fn all() -> Vec<QuadConstants> {
        let mut out = Vec::new();
        for b1 in [1, 2] {
            for b2 in [1, 2] {
                for d in [1, 3] {
                    out.push(QuadConstants { b1, b2, d });
                }
            }
        }
        out
    }

    fn lookup(&self, name: &str) -> Option<Rational> {
        let v = match name {
            "b1" => self.b1,
            "b2" => self.b2,
            "d" => self.d,
            _ => return None,
        };
        Some(Rational::from_integer(v.into()))
    }
}

const S13: &str = "(s4*s11 + d*s1*s14)/(b1*(2/b2)*s2)";
const S8: &str = "((3/d)*s4*s11 - s1*s14)/(b1*(2/b2)*s7)";
const S3: &str = "((b1*s7*s8 + b2*s1*s14)*s9 - b2*s4*s14*s12)/(b1*s2*s7)";
const S6: &str = "(b2*s1*s11*s9 - (b1*s2*s13 - b2*s4*s11)*s12)/(b1*s2*s7)";
const S3_COMPACT: &str = "((s1*s14 + (3/d)*s4*s11)*s9 - 2*s4*s14*s12)/(2*s2*s7)";
const S6_COMPACT: &str = "(2*s1*s11*s9 - (d*s1*s14 - s4*s11)*s12)/(2*s2*s7)";
const TAIL: [(usize, &str); 4] = [
    (0, "(s9*s11 - d*s12*s14)/(b1*s2)"),
    (5, "((3/d)*s9*s11 - s12*s14)/(b1*s7)"),
    (10, "(s1*s9 + s4*s12)/(b1*s2)"),
    (15, "(-s1*s9 + s4*s12)/(b1*s7)"),
];

const RELATIONS: [(&str, &str); 9] = [
    ("b1*s0*s8 = s3*s11 - s6*s14", "b1*s0*s8 - (s3*s11 - s6*s14)"),
    ("b1*s2*s10 = s1*s9 + s4*s12", "b1*s2*s10 - (s1*s9 + s4*s12)"),
    (
        "b1*s5*s13 = s3*s11 + s6*s14",
        "b1*s5*s13 - (s3*s11 + s6*s14)",
    ),
    ("b1*s7*s15 = s4*s12 - s1*s9", "b1*s7*s15 - (s4*s12 - s1*s9)"),
    ("b2*s0*s1 = s6*s7 - s12*s13", "b2*s0*s1 - (s6*s7 - s12*s13)"),
    ("b2*s4*s5 = s2*s3 + s8*s9", "b2*s4*s5 - (s2*s3 + s8*s9)"),
    (
        "b2*s10*s11 = s6*s7 + s12*s13",
        "b2*s10*s11 - (s6*s7 + s12*s13)",
    ),
    ("b2*s14*s15 = s8*s9 - s2*s3", "b2*s14*s15 - (s8*s9 - s2*s3)"),
    (
        "s1*s14*(s2*s13 - b2*(2/b1)*s4*s11) = s7*s8*(s4*s11 - b1*(2/b2)*s2*s13)",
        "s1*s14*(s2*s13 - b2*(2/b1)*s4*s11) - s7*s8*(s4*s11 - b1*(2/b2)*s2*s13)",
    ),
];

fn universe() -> Arc<Universe> {
    Universe::indexed("s", 0..16)
}

/// The sixteen entries of a quadruple sequence as rational functions of the free entries.
#[derive(Clone, Debug)]
pub struct QuadFormulas {
    pub constants: QuadConstants,
    pub entries: Vec<RatFunc>,
}

impl QuadFormulas {
    pub fn new(c: QuadConstants) -> Result<Self, ParamError> {
        let u = universe();
        let parse = |t: &str| parse_ratfunc(t, &u, &|n: &str| c.lookup(n));
        let mut entries: Vec<RatFunc> = (0..16).map(|i| RatFunc::var(&u, i)).collect();
        let f13 = parse(S13)?;
        let f8 = parse(S8)?;
        let subs = [(8, f8.clone()), (13, f13.clone())];
        entries[3] = parse(S3)?.substitute(&subs)?;
        entries[6] = parse(S6)?.substitute(&subs)?;
        entries[8] = f8;
        entries[13] = f13;
        for (i, t) in TAIL {
            entries[i] = parse(t)?;
        }
        Ok(QuadFormulas {
            constants: c,
            entries,
        })
    }

    fn parse_composed(&self, text: &str) -> Result<RatFunc, ParamError> {
        let c = self.constants;
        let f = parse_ratfunc(text, self.entries[0].universe(), &|n: &str| c.lookup(n))?;
        Ok(f.compose(&self.entries)?)
    }
}

/// Residuals of the defining relations after substituting the closed forms.
#[derive(Clone, Debug)]
pub struct QuadCheck {
    pub constants: QuadConstants,
    pub relations: Vec<(String, RatFunc)>,
    /// `(v_{1,4} - w_{1,4}) / (u_{2,1} - u_{1,2})`, expected to equal `δ`.
    pub ratio: RatFunc,
    /// Compact display forms of `s₃` and `s₆` minus the derived ones.
    pub compact_s3: RatFunc,
    pub compact_s6: RatFunc,
}

impl QuadCheck {
    pub fn ratio_holds(&self) -> bool {
        self.ratio.constant_value() == Some(Rational::from_integer(self.constants.d.into()))
    }

    pub fn compact_forms_hold(&self) -> bool {
        self.compact_s3.is_zero() && self.compact_s6.is_zero()
    }

    /// Fails on any nonzero relation residual or a wrong ratio.
    pub fn verify(&self) -> Result<(), ParamError> {
        if let Some((name, _)) = self.relations.iter().find(|(_, r)| !r.is_zero()) {
            return Err(ParamError::IdentityFailure(name.clone()));
        }
        if !self.ratio_holds() {
            return Err(ParamError::IdentityFailure(format!(
                "ratio = {}",
                self.ratio
            )));
        }
        Ok(())
    }
}

pub fn quadruple_symbolic(c: QuadConstants) -> Result<QuadCheck, ParamError> {
    let f = QuadFormulas::new(c)?;
    let relations = RELATIONS
        .iter()
        .map(|(name, text)| Ok((name.to_string(), f.parse_composed(text)?)))
        .collect::<Result<Vec<_>, ParamError>>()?;
    let vw = f.parse_composed("s0*s2*s4*s6 - s9*s11*s13*s15")?;
    let uu = f.parse_composed("s1*s5*s9*s13 - s2*s6*s10*s14")?;
    let ratio = vw.try_div(&uu)?;
    let compact_s3 = f.parse_composed(S3_COMPACT)?.try_sub(&f.entries[3])?;
    let compact_s6 = f.parse_composed(S6_COMPACT)?.try_sub(&f.entries[6])?;
    Ok(QuadCheck {
        constants: c,
        relations,
        ratio,
        compact_s3,
        compact_s6,
    })
}

/// Concrete reconstruction from the free entries, in [`QUAD_FREE`] order.
pub fn quadruple_from_free(free: &[Integer; 8], c: QuadConstants) -> Result<ParamSeq, ParamError> {
    let f = QuadFormulas::new(c)?;
    let mut point = vec![Rational::zero(); 16];
    for (i, v) in QUAD_FREE.iter().zip(free) {
        point[*i] = Rational::from_integer(v.clone());
    }
    let mut s = Vec::with_capacity(16);
    for (k, e) in f.entries.iter().enumerate() {
        let val = e
            .eval(&point)
            .map_err(|_| ParamError::NotIntegral(format!("s{k} has a vanishing denominator")))?;
        if !val.is_integer() {
            return Err(ParamError::NotIntegral(format!("s{k} = {val}")));
        }
        s.push(val.to_integer());
    }
    ParamSeq::new(4, s)
}

/// Pfaffian of the 4×4 skew system in `(s₃, s₆, s₉, s₁₂)` against the
/// polynomial Pfaffian equation; returns both and their ratio if constant.
pub fn quad_pfaffian_check(
    b1: u32,
    b2: u32,
) -> Result<(RatFunc, RatFunc, Option<Rational>), ParamError> {
    let c = QuadConstants::new(b1, b2, 1)?;
    let u = universe();
    let parse = |t: &str| parse_ratfunc(t, &u, &|n: &str| c.lookup(n));
    let rows = [
        ["0", "b1*s2*s7", "-b2*s1*s11", "b1*s2*s13 - b2*s4*s11"],
        ["-b1*s2*s7", "0", "b1*s7*s8 + b2*s1*s14", "-b2*s4*s14"],
        ["b2*s1*s11", "-b1*s7*s8 - b2*s1*s14", "0", "b1*s8*s13"],
        ["-b1*s2*s13 + b2*s4*s11", "b2*s4*s14", "-b1*s8*s13", "0"],
    ];
    let entries = rows
        .iter()
        .flatten()
        .map(|t| parse(t))
        .collect::<Result<Vec<_>, _>>()?;
    let m = PolyMatrix::new(&u, 4, 4, entries)?;
    let pf = pfaffian4(&m)?;
    let eq =
        parse("s1*s2*s13*s14 - b2*(2/b1)*s1*s4*s11*s14 + b1*(2/b2)*s2*s7*s8*s13 - s4*s7*s8*s11")?;
    let scalar = equal_up_to_scalar(&pf, &eq);
    Ok((pf, eq, scalar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn identities_hold_for_every_combination() {
        for c in QuadConstants::all() {
            let check = quadruple_symbolic(c).unwrap();
            check.verify().unwrap();
            assert_eq!(check.compact_forms_hold(), c.b1 == c.b2, "{c:?}");
        }
    }

    #[test]
    fn pfaffian_scalar() {
        for b1 in [1, 2] {
            for b2 in [1, 2] {
                let (_, _, k) = quad_pfaffian_check(b1, b2).unwrap();
                assert_eq!(k, Some(rat((b1 * b2) as i64, 1)));
            }
        }
    }

    #[test]
    fn rejects_bad_constants() {
        assert!(QuadConstants::new(3, 1, 1).is_err());
        assert!(QuadConstants::new(1, 1, 2).is_err());
    }
}
