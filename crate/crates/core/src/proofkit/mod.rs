//! Symbolic audit of the quintuple argument: the five Pfaffian systems, the
//! calibration identities, the structural equations with their matrices `M`
//! and `𝓜`, the sub-determinant catalog and the two elimination chains.
//!
//! Every display is held as text in [`tables`] and parsed per constants
//! [`Assignment`]. Checks produce [`IdentityRecord`]s; a failed comparison is
//! recorded, never raised, so a full audit always completes.

mod audit;
mod catalog;
mod pfaffian;
mod structural;
pub mod tables;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::exactmath::{equal_up_to_scalar, parse_ratfunc, MathError, RatFunc, Rational, Universe};
use crate::paramet::ParamError;

pub use audit::{
    audit_assignment, quintuple_audit, AssignmentReport, AuditOptions, AuditReport, Corruption,
    MatrixTarget, VERDICT_DISCREPANCY, VERDICT_PASS,
};
pub use catalog::{
    classify_type, subdet_catalog, type1_eliminate, type2_eliminate, type_factors,
    EliminationTrace, StepKind, TraceStep, TypeBranch,
};
pub use pfaffian::{
    build_quintuple_matrices, verify_calibrations, verify_pfaffian_equations, QuadrupleSystem,
};
pub use structural::{
    build_calm, build_m, calm_consistency, m_consistency, numeric_cross_check,
    structural_equations, t_universe, verify_b1b3, HEART, SPADE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("identity failed: {0}")]
    IdentityFailure(String),
    #[error("display inconsistent with the structural equations: {0}")]
    ConsistencyFailure(String),
    #[error("constants outside their domains: {0}")]
    DomainViolation(String),
    #[error("bad assignment filter: {0}")]
    Filter(String),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Param(#[from] ParamError),
}

/// Values of the structural constants `β₁, β₂, β₃, δ₁, δ₂, γ` of a quintuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Assignment {
    pub b1: u32,
    pub b2: u32,
    pub b3: u32,
    pub d1: u32,
    pub d2: u32,
    pub g: u32,
}

impl Assignment {
    pub fn new(b1: u32, b2: u32, b3: u32, d1: u32, d2: u32, g: u32) -> Result<Self, ProofError> {
        let ok = [b1, b2, b3].iter().all(|b| [1, 2].contains(b))
            && [d1, d2].iter().all(|d| [1, 3].contains(d))
            && [1, 2, 4].contains(&g);
        if !ok {
            return Err(ProofError::DomainViolation(format!(
                "({b1},{b2},{b3},{d1},{d2},{g})"
            )));
        }
        Ok(Assignment {
            b1,
            b2,
            b3,
            d1,
            d2,
            g,
        })
    }

    /// Every assignment in the finite domains, in lexicographic order.
    pub fn all() -> Vec<Assignment> {
        let mut out = Vec::with_capacity(96);
        for b1 in [1, 2] {
            for b2 in [1, 2] {
                for b3 in [1, 2] {
                    for d1 in [1, 3] {
                        for d2 in [1, 3] {
                            for g in [1, 2, 4] {
                                out.push(Assignment {
                                    b1,
                                    b2,
                                    b3,
                                    d1,
                                    d2,
                                    g,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn beta_equal(&self) -> bool {
        self.b1 == self.b3
    }

    /// Named constants for the display tables; `b` is the common `β₁ = β₃`.
    pub fn lookup(&self, name: &str) -> Option<Rational> {
        let v = match name {
            "b1" => self.b1,
            "b2" => self.b2,
            "b3" => self.b3,
            "d1" => self.d1,
            "d2" => self.d2,
            "g" => self.g,
            "b" if self.beta_equal() => self.b1,
            _ => return None,
        };
        Some(Rational::from_integer(v.into()))
    }

    pub fn parse_in(&self, text: &str, universe: &Arc<Universe>) -> Result<RatFunc, MathError> {
        parse_ratfunc(text, universe, &|n: &str| self.lookup(n))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "b1={},b2={},b3={},d1={},d2={},g={}",
            self.b1, self.b2, self.b3, self.d1, self.d2, self.g
        )
    }
}

/// Conjunction of `name=value` constraints, e.g. `b1=1,b2=2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssignmentFilter {
    pub constraints: Vec<(String, u32)>,
}

impl AssignmentFilter {
    pub fn matches(&self, a: &Assignment) -> bool {
        self.constraints.iter().all(|(k, v)| {
            a.lookup(k)
                .map(|x| x == Rational::from_integer((*v).into()))
                == Some(true)
        })
    }

    pub fn apply(&self, all: &[Assignment]) -> Vec<Assignment> {
        all.iter().copied().filter(|a| self.matches(a)).collect()
    }
}

impl FromStr for AssignmentFilter {
    type Err = ProofError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut constraints = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| ProofError::Filter(part.into()))?;
            let k = k.trim();
            if !["b1", "b2", "b3", "d1", "d2", "g"].contains(&k) {
                return Err(ProofError::Filter(format!("unknown constant {k}")));
            }
            let v: u32 = v
                .trim()
                .parse()
                .map_err(|_| ProofError::Filter(part.into()))?;
            constraints.push((k.to_string(), v));
        }
        Ok(AssignmentFilter { constraints })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Outcome of comparing a computed quantity with the claimed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRecord {
    pub name: String,
    pub assignment: Assignment,
    pub computed: String,
    pub claimed: String,
    /// `computed = scalar · claimed` when such a nonzero rational exists.
    pub scalar: Option<String>,
    pub status: Status,
}

impl IdentityRecord {
    /// Passes iff `computed = c · claimed` for a nonzero rational `c`.
    pub fn compare(
        name: impl Into<String>,
        a: Assignment,
        computed: &RatFunc,
        claimed: &RatFunc,
    ) -> Self {
        let scalar = equal_up_to_scalar(computed, claimed).filter(|c| !c.is_zero());
        IdentityRecord {
            name: name.into(),
            assignment: a,
            computed: computed.to_string(),
            claimed: claimed.to_string(),
            status: Status::from_bool(scalar.is_some()),
            scalar: scalar.map(|c| c.to_string()),
        }
    }

    /// Passes iff `computed` vanishes identically.
    pub fn vanishes(name: impl Into<String>, a: Assignment, computed: &RatFunc) -> Self {
        IdentityRecord {
            name: name.into(),
            assignment: a,
            computed: computed.to_string(),
            claimed: "0".into(),
            scalar: None,
            status: Status::from_bool(computed.is_zero()),
        }
    }

    pub fn fact(
        name: impl Into<String>,
        a: Assignment,
        computed: String,
        claimed: String,
        ok: bool,
    ) -> Self {
        IdentityRecord {
            name: name.into(),
            assignment: a,
            computed,
            claimed,
            scalar: None,
            status: Status::from_bool(ok),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `Err(IdentityFailure)` naming the first failed record.
pub fn require_all(records: &[IdentityRecord]) -> Result<(), ProofError> {
    match records.iter().find(|r| !r.passed()) {
        Some(r) => Err(ProofError::IdentityFailure(format!(
            "{} [{}]: {}",
            r.name, r.assignment, r.computed
        ))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assignment_counts() {
        let all = Assignment::all();
        assert_eq!(all.len(), 96);
        assert_eq!(all.iter().filter(|a| a.beta_equal()).count(), 48);
        assert!(Assignment::new(1, 1, 1, 2, 1, 1).is_err());
    }

    #[test]
    fn filters() {
        let f: AssignmentFilter = "b1=1, b2=2".parse().unwrap();
        assert_eq!(f.apply(&Assignment::all()).len(), 24);
        assert!("x=1".parse::<AssignmentFilter>().is_err());
        assert!("b1".parse::<AssignmentFilter>().is_err());
        assert_eq!(
            AssignmentFilter::default().apply(&Assignment::all()).len(),
            96
        );
    }

    #[test]
    fn constant_lookup() {
        let a = Assignment::new(2, 1, 1, 3, 1, 4).unwrap();
        assert_eq!(a.lookup("b"), None);
        let a = Assignment::new(2, 1, 2, 3, 1, 4).unwrap();
        assert_eq!(a.lookup("b"), Some(Rational::from_integer(2.into())));
        let u = Universe::indexed("t", 1..16);
        let f = a.parse_in("(3/d1)*g*t1", &u).unwrap();
        assert_eq!(f.to_string(), "4*t1");
    }
}
