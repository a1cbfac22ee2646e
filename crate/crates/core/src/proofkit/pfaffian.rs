//! The five 4×4 Pfaffian systems and the calibrated quadruples.

use std::sync::Arc;

use super::tables::{self, Calibration};
use super::{Assignment, IdentityRecord, ProofError};
use crate::exactmath::{PolyMatrix, RatFunc, Rational, Universe};
use crate::paramet::{lexicon_map, quadruple_symbolic, QuadConstants};

/// A quadruple's skew system, mapped into `s0..s31`.
#[derive(Clone, Debug)]
pub struct QuadrupleSystem {
    pub label: &'static str,
    /// Index of the deleted pair, or `None` when the system is native in `s`.
    pub deleted: Option<usize>,
    pub matrix: PolyMatrix,
    pub skew: bool,
    /// `a01 a23 - a02 a13 + a03 a12`, read off the upper triangle.
    pub pfaffian: RatFunc,
}

pub(crate) fn s_universe() -> Arc<Universe> {
    Universe::indexed("s", 0..32)
}

fn r_universe() -> Arc<Universe> {
    Universe::indexed("r", 0..16)
}

fn parse_matrix<const C: usize>(
    a: &Assignment,
    rows: &[[&str; C]],
    u: &Arc<Universe>,
) -> Result<PolyMatrix, ProofError> {
    let entries = rows
        .iter()
        .flatten()
        .map(|t| a.parse_in(t, u))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyMatrix::new(u, rows.len(), C, entries)?)
}

fn upper_pfaffian(m: &PolyMatrix) -> RatFunc {
    let e = |i, j| m.get(i, j);
    &(&(e(0, 1) * e(2, 3)) - &(e(0, 2) * e(1, 3))) + &(e(0, 3) * e(1, 2))
}

/// Images of `r0..r15` in `s0..s31` when pair `i` is deleted.
fn lexicon_images(i: usize, s: &Arc<Universe>) -> Result<Vec<RatFunc>, ProofError> {
    (0..16)
        .map(|j| {
            let (lo, hi) = lexicon_map(i, j)?;
            Ok(&RatFunc::var(s, lo) * &RatFunc::var(s, hi))
        })
        .collect()
}

pub fn build_quintuple_matrices(
    a: &Assignment,
) -> Result<(Vec<QuadrupleSystem>, Vec<IdentityRecord>), ProofError> {
    let s = s_universe();
    let r = r_universe();
    let specs: [(&'static str, Option<usize>, &[[&str; 4]; 4]); 5] = [
        ("B5", None, &tables::PF_B5),
        ("B1", None, &tables::PF_B1),
        ("B4", Some(4), &tables::PF_B4),
        ("B2", Some(2), &tables::PF_B2),
        ("B3", Some(3), &tables::PF_B3),
    ];
    let mut systems = Vec::new();
    let mut records = Vec::new();
    for (label, deleted, rows) in specs {
        let matrix = match deleted {
            None => parse_matrix(a, rows, &s)?,
            Some(i) => {
                let images = lexicon_images(i, &s)?;
                parse_matrix(a, rows, &r)?.try_map(|e| e.compose(&images))?
            }
        };
        let skew = matrix.is_skew();
        let anti = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| matrix.get(i, j) + matrix.get(j, i))
            .find(|e| !e.is_zero());
        records.push(IdentityRecord::fact(
            format!("skew {label}"),
            *a,
            anti.map_or_else(
                || "A + A^T = 0".into(),
                |e| format!("A + A^T has entry {e}"),
            ),
            "A + A^T = 0".into(),
            skew,
        ));
        let pfaffian = upper_pfaffian(&matrix);
        systems.push(QuadrupleSystem {
            label,
            deleted,
            matrix,
            skew,
            pfaffian,
        });
    }
    Ok((systems, records))
}

/// Each system's Pfaffian against its polynomial equation.
pub fn verify_pfaffian_equations(
    a: &Assignment,
    systems: &[QuadrupleSystem],
) -> Result<Vec<IdentityRecord>, ProofError> {
    let s = s_universe();
    let eqs = [
        ("B5", tables::PF_EQ_B5),
        ("B1", tables::PF_EQ_B1),
        ("B4", tables::PF_EQ_B4),
        ("B2", tables::PF_EQ_B2),
        ("B3", tables::PF_EQ_B3),
    ];
    let mut out = Vec::new();
    for (label, text) in eqs {
        let sys = systems
            .iter()
            .find(|q| q.label == label)
            .ok_or_else(|| ProofError::ConsistencyFailure(format!("missing system {label}")))?;
        let eq = a.parse_in(text, &s)?;
        out.push(IdentityRecord::compare(
            format!("Pfaffian {label}"),
            *a,
            &sys.pfaffian,
            &eq,
        ));
    }
    Ok(out)
}

fn verify_calibration(
    a: &Assignment,
    cal: &Calibration,
) -> Result<Vec<IdentityRecord>, ProofError> {
    let r = r_universe();
    let mut images: Vec<RatFunc> = (0..16).map(|j| RatFunc::var(&r, j)).collect();
    for (name, text) in cal.formulas {
        let j = r
            .index_of(name)
            .ok_or_else(|| ProofError::ConsistencyFailure(name.into()))?;
        images[j] = a.parse_in(text, &r)?;
    }
    let mut out = Vec::new();
    for (k, rel) in cal.relations.iter().enumerate() {
        let residual = a.parse_in(rel, &r)?.compose(&images)?;
        out.push(IdentityRecord::vanishes(
            format!("calibration {} relation {k}", cal.label),
            *a,
            &residual,
        ));
    }
    let ratio = a.parse_in(tables::CAL_RATIO, &r)?.compose(&images)?;
    let claimed = a.parse_in(cal.ratio, &r)?;
    let ok = ratio == claimed;
    out.push(IdentityRecord::fact(
        format!("calibration {} ratio", cal.label),
        *a,
        ratio.to_string(),
        claimed.to_string(),
        ok,
    ));
    Ok(out)
}

fn verify_quad_calibration(
    a: &Assignment,
    label: &str,
    c: QuadConstants,
) -> Result<Vec<IdentityRecord>, ProofError> {
    let check = quadruple_symbolic(c)?;
    let mut out: Vec<IdentityRecord> = check
        .relations
        .iter()
        .enumerate()
        .map(|(k, (_, res))| {
            IdentityRecord::vanishes(format!("calibration {label} relation {k}"), *a, res)
        })
        .collect();
    out.push(IdentityRecord::fact(
        format!("calibration {label} ratio"),
        *a,
        check.ratio.to_string(),
        c.d.to_string(),
        check.ratio.constant_value() == Some(Rational::from_integer(c.d.into())),
    ));
    Ok(out)
}

/// Closed forms of all five quadruples substituted into their relations.
pub fn verify_calibrations(a: &Assignment) -> Result<Vec<IdentityRecord>, ProofError> {
    let mut out = verify_quad_calibration(a, "B5", QuadConstants::new(a.b1, a.b2, a.d1)?)?;
    out.extend(verify_quad_calibration(
        a,
        "B1",
        QuadConstants::new(a.b2, a.b3, a.d2)?,
    )?);
    for cal in [&tables::CAL_B4, &tables::CAL_B2, &tables::CAL_B3] {
        out.extend(verify_calibration(a, cal)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failed(records: &[IdentityRecord]) -> Vec<String> {
        records
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.name.clone())
            .collect()
    }

    #[test]
    fn b2_display_is_skew_only_for_unit_b1() {
        for a in Assignment::all() {
            let (_, recs) = build_quintuple_matrices(&a).unwrap();
            let expected: Vec<String> = if a.b1 == 2 {
                vec!["skew B2".into()]
            } else {
                vec![]
            };
            assert_eq!(failed(&recs), expected, "{a}");
        }
    }

    #[test]
    fn pfaffians_match_up_to_scalar() {
        for a in Assignment::all() {
            let (sys, _) = build_quintuple_matrices(&a).unwrap();
            let recs = verify_pfaffian_equations(&a, &sys).unwrap();
            let expected: Vec<String> = if a.beta_equal() {
                vec![]
            } else {
                vec!["Pfaffian B2".into()]
            };
            assert_eq!(failed(&recs), expected, "{a}");
        }
    }

    #[test]
    fn b5_pfaffian_is_lexicon_image() {
        let a = Assignment::new(1, 2, 1, 3, 1, 2).unwrap();
        let (sys, _) = build_quintuple_matrices(&a).unwrap();
        let b5 = &sys[0];
        assert_eq!(b5.label, "B5");
        let s = s_universe();
        let images = lexicon_images(5, &s).unwrap();
        let r = r_universe();
        let small = a
            .parse_in("b1*r2*r7", &r)
            .unwrap()
            .compose(&images)
            .unwrap();
        assert_eq!(b5.matrix.get(0, 1), &small);
    }
}
