//! Structural equations in the `t`-variables and their two matrix forms.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{tables, Assignment, IdentityRecord, ProofError};
use crate::exactmath::{equal_up_to_scalar, PolyMatrix, RatFunc, Rational, Universe};

/// `t`-indices of the row variables of `𝓜`.
pub const HEART: [usize; 5] = [1, 2, 4, 8, 15];
/// `t`-indices of the column variables of `M`.
pub const SPADE: [usize; 10] = [3, 5, 6, 7, 9, 10, 11, 12, 13, 14];

/// `t1..t15`; variable `tj` has index `j - 1`.
pub fn t_universe() -> Arc<Universe> {
    Universe::indexed("t", 1..16)
}

pub(crate) fn t_var(u: &Arc<Universe>, j: usize) -> RatFunc {
    RatFunc::var(u, j - 1)
}

pub fn structural_equations(a: &Assignment) -> Result<Vec<RatFunc>, ProofError> {
    let u = t_universe();
    Ok(tables::STRUCTURAL
        .iter()
        .map(|t| a.parse_in(t, &u))
        .collect::<Result<_, _>>()?)
}

fn parse_rows<const C: usize>(
    a: &Assignment,
    rows: &[[&str; C]],
) -> Result<PolyMatrix, ProofError> {
    let u = t_universe();
    let entries = rows
        .iter()
        .flatten()
        .map(|t| a.parse_in(t, &u))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyMatrix::new(&u, rows.len(), C, entries)?)
}

/// `M` with `M · t♠ = 0` encoding the structural equations.
pub fn build_m(a: &Assignment) -> Result<PolyMatrix, ProofError> {
    parse_rows(a, &tables::M)
}

/// `𝓜` with `𝓜 · t♥ = 0`; requires `β₁ = β₃`.
pub fn build_calm(a: &Assignment) -> Result<PolyMatrix, ProofError> {
    if !a.beta_equal() {
        return Err(ProofError::DomainViolation(format!("b1 != b3 in {a}")));
    }
    parse_rows(a, &tables::CAL_M)
}

fn row_identities(
    a: &Assignment,
    prefix: &str,
    m: &PolyMatrix,
    vars: &[usize],
    eqs: &[RatFunc],
) -> Result<Vec<IdentityRecord>, ProofError> {
    let u = m.universe().clone();
    let v: Vec<RatFunc> = vars.iter().map(|&j| t_var(&u, j)).collect();
    let rows = m.mul_vec(&v)?;
    Ok(rows
        .iter()
        .zip(eqs)
        .enumerate()
        .map(|(r, (lhs, eq))| IdentityRecord::compare(format!("{prefix} row {r}"), *a, lhs, eq))
        .collect())
}

/// Row `r` of `M` applied to `t♠` against structural equation `r`.
pub fn m_consistency(a: &Assignment, m: &PolyMatrix) -> Result<Vec<IdentityRecord>, ProofError> {
    row_identities(a, "M", m, &SPADE, &structural_equations(a)?)
}

/// Row `r` of `𝓜` applied to `t♥` against structural equation `r`.
pub fn calm_consistency(a: &Assignment, m: &PolyMatrix) -> Result<Vec<IdentityRecord>, ProofError> {
    row_identities(a, "calM", m, &HEART, &structural_equations(a)?)
}

fn random_point(rng: &mut StdRng) -> Vec<Rational> {
    (0..15)
        .map(|_| {
            Rational::new(
                rng.gen_range(1..60i64).into(),
                rng.gen_range(1..8i64).into(),
            )
        })
        .collect()
}

/// `det M ≡ 0`, `det M11 ≡ 0`, the closed form of `det M12` and the rank of `M`
/// at random positive points.
pub fn verify_b1b3(
    a: &Assignment,
    m: &PolyMatrix,
    samples: usize,
    seed: u64,
) -> Result<Vec<IdentityRecord>, ProofError> {
    let u = m.universe().clone();
    let all: Vec<usize> = (0..10).collect();
    let without = |k: usize| all.iter().copied().filter(|&i| i != k).collect::<Vec<_>>();
    let mut out = vec![
        IdentityRecord::vanishes("det M", *a, &m.det()?),
        IdentityRecord::vanishes("det M11", *a, &m.subdet(&without(0), &without(0))?),
    ];
    let m12 = m.subdet(&without(0), &without(1))?;
    let claim = a.parse_in(tables::DET_M12, &u)?;
    out.push(IdentityRecord::compare("det M12", *a, &m12, &claim));

    let mut rng = StdRng::seed_from_u64(seed);
    let mut rank = 0;
    for _ in 0..samples {
        rank = rank.max(m.rank_at(&random_point(&mut rng))?);
    }
    let (claimed, ok) = if a.beta_equal() {
        ("< 10", rank < 10)
    } else {
        ("9", rank == 9)
    };
    out.push(IdentityRecord::fact(
        "rank M",
        *a,
        rank.to_string(),
        claimed.into(),
        ok,
    ));
    Ok(out)
}

/// Re-checks symbolic row identities and `det M` at random positive points.
///
/// A row identity with scalar `c` must satisfy `row(t) = c · eq(t)`; the
/// evaluated rank of `M` must stay below 10 exactly when `det M ≡ 0`.
pub fn numeric_cross_check(
    a: &Assignment,
    m: &PolyMatrix,
    rows: &[IdentityRecord],
    det_vanishes: bool,
    samples: usize,
    seed: u64,
) -> Result<Vec<IdentityRecord>, ProofError> {
    let u = m.universe().clone();
    let eqs = structural_equations(a)?;
    let v: Vec<RatFunc> = SPADE.iter().map(|&j| t_var(&u, j)).collect();
    let lhs = m.mul_vec(&v)?;
    let scalars: Vec<Option<Rational>> = lhs
        .iter()
        .zip(&eqs)
        .map(|(l, e)| equal_up_to_scalar(l, e))
        .collect();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut row_mismatch = 0usize;
    let mut det_mismatch = 0usize;
    for _ in 0..samples {
        let p = random_point(&mut rng);
        for ((l, e), c) in lhs.iter().zip(&eqs).zip(&scalars) {
            let lv = l.eval(&p)?;
            let ev = e.eval(&p)?;
            if c.as_ref().is_some_and(|c| lv != c * &ev) {
                row_mismatch += 1;
            }
        }
        if (m.rank_at(&p)? < 10) != det_vanishes {
            det_mismatch += 1;
        }
    }
    let symbolic_rows = rows.iter().filter(|r| r.passed()).count();
    let numeric_rows = scalars.iter().filter(|c| c.is_some()).count();
    Ok(vec![
        IdentityRecord::fact(
            "numeric M rows",
            *a,
            format!("{numeric_rows} rows proportional, {row_mismatch} disagreements in {samples} points"),
            format!("{symbolic_rows} rows proportional"),
            row_mismatch == 0 && numeric_rows == symbolic_rows,
        ),
        IdentityRecord::fact(
            "numeric det M",
            *a,
            format!("{det_mismatch} disagreements in {samples} points"),
            "0 disagreements".into(),
            det_mismatch == 0,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_rows_match_equations() {
        for a in Assignment::all() {
            let m = build_m(&a).unwrap();
            let recs = m_consistency(&a, &m).unwrap();
            assert!(recs.iter().all(|r| r.passed()), "{a}");
            let neg: Vec<usize> = (0..10)
                .filter(|&r| recs[r].scalar.as_deref() == Some("-1"))
                .collect();
            assert_eq!(neg, vec![0, 2, 8]);
        }
    }

    #[test]
    fn calm_row_seven_sign() {
        for a in Assignment::all().into_iter().filter(|a| a.beta_equal()) {
            let m = build_calm(&a).unwrap();
            let recs = calm_consistency(&a, &m).unwrap();
            let failed: Vec<&str> = recs
                .iter()
                .filter(|r| !r.passed())
                .map(|r| r.name.as_str())
                .collect();
            assert_eq!(failed, vec!["calM row 7"], "{a}");
        }
        assert!(build_calm(&Assignment::new(1, 1, 2, 1, 1, 1).unwrap()).is_err());
    }

    #[test]
    fn determinants_and_rank() {
        let a = Assignment::new(2, 1, 1, 3, 1, 2).unwrap();
        let recs = verify_b1b3(&a, &build_m(&a).unwrap(), 5, 7).unwrap();
        assert!(recs.iter().all(|r| r.passed()), "{recs:?}");
        assert_eq!(recs[3].computed, "9");
        let a = Assignment::new(1, 2, 1, 1, 3, 4).unwrap();
        let recs = verify_b1b3(&a, &build_m(&a).unwrap(), 5, 7).unwrap();
        assert!(recs.iter().all(|r| r.passed()), "{recs:?}");
        assert_eq!(recs[3].computed, "7");
    }
}
