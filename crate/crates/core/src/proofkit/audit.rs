//! Full audit over constants assignments, with optional fault injection.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{subdet_catalog, type1_eliminate, type2_eliminate, EliminationTrace};
use super::pfaffian::{build_quintuple_matrices, verify_calibrations, verify_pfaffian_equations};
use super::structural::{
    build_calm, build_m, calm_consistency, m_consistency, numeric_cross_check, t_universe,
    verify_b1b3, HEART, SPADE,
};
use super::{Assignment, IdentityRecord, ProofError};
use crate::exactmath::{PolyMatrix, RatFunc};

pub const VERDICT_PASS: &str = "no positive parametrizing sequence exists";
pub const VERDICT_DISCREPANCY: &str = "discrepancy";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MatrixTarget {
    M,
    CalM,
}

/// Adds one extra variable to a single entry of `M` or `𝓜`.
///
/// The extra variable is the first column variable of the other matrix, so the
/// entry stays in the right ring while the row identity breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Corruption {
    pub target: MatrixTarget,
    pub row: usize,
    pub col: usize,
}

impl Corruption {
    pub fn apply(&self, target: MatrixTarget, m: &mut PolyMatrix) -> Result<bool, ProofError> {
        if target != self.target {
            return Ok(false);
        }
        if self.row >= m.rows() || self.col >= m.cols() {
            return Err(ProofError::DomainViolation(format!(
                "corruption {self} outside {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let extra = match target {
            MatrixTarget::M => HEART[0],
            MatrixTarget::CalM => SPADE[0],
        };
        let u = t_universe();
        let e = m
            .get(self.row, self.col)
            .try_add(&RatFunc::var(&u, extra - 1))?;
        m.set(self.row, self.col, e)?;
        Ok(true)
    }
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.target {
            MatrixTarget::M => "M",
            MatrixTarget::CalM => "calM",
        };
        write!(f, "{t}:{}:{}", self.row, self.col)
    }
}

impl FromStr for Corruption {
    type Err = ProofError;

    /// `M:row:col` or `calM:row:col`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || {
            ProofError::Filter(format!(
                "corruption {s:?}; expected M:row:col or calM:row:col"
            ))
        };
        let parts: Vec<&str> = s.split(':').collect();
        let [t, r, c] = parts.as_slice() else {
            return Err(bad());
        };
        let target = match *t {
            "M" => MatrixTarget::M,
            "calM" => MatrixTarget::CalM,
            _ => return Err(bad()),
        };
        let (rows, cols) = if target == MatrixTarget::M {
            (10, 10)
        } else {
            (10, 5)
        };
        let row: usize = r.parse().map_err(|_| bad())?;
        let col: usize = c.parse().map_err(|_| bad())?;
        if row >= rows || col >= cols {
            return Err(bad());
        }
        Ok(Corruption { target, row, col })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AuditOptions {
    /// Random points for the numeric cross-check.
    pub samples: usize,
    /// Random points for the rank of `M`.
    pub rank_samples: usize,
    pub seed: u64,
    pub corruption: Option<Corruption>,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            samples: 1000,
            rank_samples: 8,
            seed: 0x5eed,
            corruption: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AssignmentReport {
    pub assignment: Assignment,
    pub identities: Vec<IdentityRecord>,
    pub trace: Vec<EliminationTrace>,
    pub failures: usize,
}

impl AssignmentReport {
    /// Identity records including those inside the elimination traces.
    pub fn all_records(&self) -> impl Iterator<Item = &IdentityRecord> {
        self.identities
            .iter()
            .chain(self.trace.iter().flat_map(|t| t.records.iter()))
    }

    pub fn record(&self, name: &str) -> Option<&IdentityRecord> {
        self.all_records().find(|r| r.name == name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub schema: u32,
    pub suite: String,
    pub corruption: Option<Corruption>,
    pub assignments: Vec<AssignmentReport>,
    pub failures: usize,
    pub verdict: String,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn failed_records(&self) -> impl Iterator<Item = &IdentityRecord> {
        self.assignments
            .iter()
            .flat_map(|a| a.all_records())
            .filter(|r| !r.passed())
    }
}

pub fn audit_assignment(
    a: &Assignment,
    opts: &AuditOptions,
) -> Result<AssignmentReport, ProofError> {
    let seed = opts.seed
        ^ (u64::from(a.b1) << 40 | u64::from(a.b2) << 32 | u64::from(a.b3) << 24)
        ^ (u64::from(a.d1) << 16 | u64::from(a.d2) << 8 | u64::from(a.g));
    let (systems, mut identities) = build_quintuple_matrices(a)?;
    identities.extend(verify_pfaffian_equations(a, &systems)?);
    identities.extend(verify_calibrations(a)?);

    let mut m = build_m(a)?;
    if let Some(c) = opts.corruption {
        c.apply(MatrixTarget::M, &mut m)?;
    }
    let rows = m_consistency(a, &m)?;
    let b1b3 = verify_b1b3(a, &m, opts.rank_samples, seed)?;
    let det_vanishes = b1b3[0].passed();
    identities.extend(numeric_cross_check(
        a,
        &m,
        &rows,
        det_vanishes,
        opts.samples,
        seed.wrapping_add(1),
    )?);
    identities.extend(rows);
    identities.extend(b1b3);

    let mut trace = Vec::new();
    if a.beta_equal() {
        let mut calm = build_calm(a)?;
        if let Some(c) = opts.corruption {
            c.apply(MatrixTarget::CalM, &mut calm)?;
        }
        identities.extend(calm_consistency(a, &calm)?);
        identities.extend(subdet_catalog(a, &calm)?);
        trace.push(type1_eliminate(a, &calm)?);
        trace.push(type2_eliminate(a, &calm)?);
    }
    let mut report = AssignmentReport {
        assignment: *a,
        identities,
        trace,
        failures: 0,
    };
    report.failures = report.all_records().filter(|r| !r.passed()).count();
    Ok(report)
}

/// Audits every assignment in parallel; output order follows the input.
pub fn quintuple_audit(
    assignments: &[Assignment],
    opts: &AuditOptions,
) -> Result<AuditReport, ProofError> {
    let reports = assignments
        .par_iter()
        .map(|a| audit_assignment(a, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let failures = reports.iter().map(|r| r.failures).sum();
    Ok(AuditReport {
        schema: 1,
        suite: "quintuple".into(),
        corruption: opts.corruption,
        assignments: reports,
        failures,
        verdict: if failures == 0 {
            VERDICT_PASS
        } else {
            VERDICT_DISCREPANCY
        }
        .into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corruption_parsing() {
        let c: Corruption = "calM:7:4".parse().unwrap();
        assert_eq!(
            c,
            Corruption {
                target: MatrixTarget::CalM,
                row: 7,
                col: 4
            }
        );
        assert_eq!(c.to_string(), "calM:7:4");
        assert!("M:10:0".parse::<Corruption>().is_err());
        assert!("calM:0:5".parse::<Corruption>().is_err());
        assert!("X:0:0".parse::<Corruption>().is_err());
    }

    #[test]
    fn corrupted_row_is_detected() {
        let a = Assignment::new(2, 1, 2, 1, 3, 4).unwrap();
        let opts = AuditOptions {
            samples: 4,
            rank_samples: 2,
            ..Default::default()
        };
        let base = audit_assignment(&a, &opts).unwrap();
        assert!(base.record("M row 3").unwrap().passed());
        let corrupt = Corruption {
            target: MatrixTarget::M,
            row: 3,
            col: 0,
        };
        let bad = audit_assignment(
            &a,
            &AuditOptions {
                corruption: Some(corrupt),
                ..opts
            },
        )
        .unwrap();
        assert!(!bad.record("M row 3").unwrap().passed());
        assert!(bad.failures > base.failures);
    }
}
