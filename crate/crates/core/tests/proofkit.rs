use std::collections::BTreeMap;
use std::sync::OnceLock;

use buchi_core::proofkit::{
    audit_assignment, build_calm, build_m, classify_type, quintuple_audit, structural_equations,
    type_factors, Assignment, AuditOptions, AuditReport, Corruption, MatrixTarget, TypeBranch,
    HEART, SPADE, VERDICT_DISCREPANCY,
};
use buchi_core::Rational;
use proptest::prelude::*;

fn full_audit() -> &'static AuditReport {
    static REPORT: OnceLock<AuditReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let opts = AuditOptions {
            samples: 20,
            rank_samples: 4,
            ..Default::default()
        };
        quintuple_audit(&Assignment::all(), &opts).unwrap()
    })
}

fn failure_counts(report: &AuditReport) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for r in report.failed_records() {
        *m.entry(r.name.clone()).or_default() += 1;
    }
    m
}

#[test]
fn audit_failures_are_frozen() {
    let report = full_audit();
    let expected: BTreeMap<String, usize> = [
        ("D25789", 48),
        ("D25789 factors", 48),
        ("D34689", 48),
        ("D34689 factors", 48),
        ("M0156 row 0", 48),
        ("Pfaffian B2", 48),
        ("calM row 7", 48),
        ("calibration B2 ratio", 48),
        ("calibration B2 relation 1", 48),
        ("calibration B2 relation 3", 48),
        ("calibration B2 relation 6", 48),
        ("calibration B2 relation 7", 48),
        ("calibration B3 relation 0", 48),
        ("calibration B3 relation 5", 48),
        ("calibration B3 relation 7", 48),
        ("det M0156^(0) as displayed", 48),
        ("det M0156^(3) as displayed", 24),
        ("det M3467^(3)", 48),
        ("det M3467^(3) as displayed", 48),
        ("skew B2", 48),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    assert_eq!(failure_counts(report), expected);
    assert_eq!(report.failures, 936);
    assert_eq!(report.verdict, VERDICT_DISCREPANCY);
    assert_eq!(report.schema, 1);
}

#[test]
fn assignment_order_is_deterministic() {
    let report = full_audit();
    let order: Vec<Assignment> = report.assignments.iter().map(|a| a.assignment).collect();
    assert_eq!(order, Assignment::all());
}

#[test]
fn type_one_chain_closes_and_type_two_does_not() {
    for a in &full_audit().assignments {
        if !a.assignment.beta_equal() {
            assert!(a.trace.is_empty());
            continue;
        }
        let [t1, t2] = a.trace.as_slice() else {
            panic!("two traces expected")
        };
        assert_eq!(t1.branch, TypeBranch::TypeI);
        assert!(t1.forced_zero, "{}: {}", a.assignment, t1.conclusion);
        assert_eq!(t2.branch, TypeBranch::TypeII);
        assert!(!t2.forced_zero);
        assert!(t2.conclusion.contains("D34689 factors"));
    }
}

#[test]
fn unequal_betas_are_excluded_by_det_m12() {
    for a in &full_audit().assignments {
        let m12 = a.record("det M12").unwrap();
        assert!(m12.passed(), "{}", a.assignment);
        let rank = a.record("rank M").unwrap();
        let expected = if a.assignment.beta_equal() { "7" } else { "9" };
        assert_eq!(rank.computed, expected, "{}", a.assignment);
    }
}

#[test]
fn m_row_scalars() {
    let a = &full_audit().assignments[0];
    let scalars: Vec<String> = (0..10)
        .map(|r| {
            a.record(&format!("M row {r}"))
                .unwrap()
                .scalar
                .clone()
                .unwrap()
        })
        .collect();
    assert_eq!(
        scalars,
        ["-1", "1", "-1", "1", "1", "1", "1", "1", "-1", "1"]
    );
}

#[test]
fn report_serializes() {
    let a = Assignment::new(1, 1, 1, 1, 1, 1).unwrap();
    let r = audit_assignment(
        &a,
        &AuditOptions {
            samples: 2,
            rank_samples: 1,
            ..Default::default()
        },
    )
    .unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["assignment"]["g"], 1);
    assert!(v["identities"]
        .as_array()
        .unwrap()
        .iter()
        .any(|i| i["name"] == "calM row 7" && i["status"] == "fail"));
    assert_eq!(v["trace"][0]["branch"], "TypeI");
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(
        (1i64..40, 1i64..6).prop_map(|(n, d)| Rational::new(n.into(), d.into())),
        15,
    )
}

fn assignment() -> impl Strategy<Value = Assignment> {
    (0usize..96).prop_map(|i| Assignment::all()[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_forms_agree_with_equations(a in assignment(), p in point()) {
        let eqs: Vec<Rational> = structural_equations(&a).unwrap().iter().map(|e| e.eval(&p).unwrap()).collect();
        let m = build_m(&a).unwrap().eval(&p).unwrap();
        let signs = [-1, 1, -1, 1, 1, 1, 1, 1, -1, 1];
        for r in 0..10 {
            let row: Rational = SPADE.iter().enumerate().map(|(c, &j)| &m[r][c] * &p[j - 1]).sum();
            prop_assert_eq!(row, &eqs[r] * Rational::from_integer(signs[r].into()));
        }
        if a.beta_equal() {
            let cm = build_calm(&a).unwrap().eval(&p).unwrap();
            for r in (0..10).filter(|&r| r != 7) {
                let row: Rational = HEART.iter().enumerate().map(|(c, &j)| &cm[r][c] * &p[j - 1]).sum();
                prop_assert!(row == eqs[r] || row == -eqs[r].clone());
            }
        }
    }

    #[test]
    fn vanishing_factor_decides_type(a in assignment(), p in point(), plus in any::<bool>()) {
        prop_assume!(a.beta_equal());
        let (fp, fm) = type_factors(&a).unwrap();
        let mut q = p.clone();
        // solve the chosen factor for t7 (index 6); the other stays nonzero
        q[6] = Rational::from_integer(0.into());
        let f = if plus { &fp } else { &fm };
        q[6] = f.eval(&q).unwrap() / &q[5];
        let expected = if plus { TypeBranch::TypeII } else { TypeBranch::TypeI };
        prop_assert_eq!(classify_type(&a, &q).unwrap(), expected);
    }

    #[test]
    fn corrupted_rows_change_their_identity(a in assignment(), calm in any::<bool>(), row in 0usize..10, col in 0usize..10) {
        let calm = calm && a.beta_equal();
        let (target, col, prefix) =
            if calm { (MatrixTarget::CalM, col % 5, "calM") } else { (MatrixTarget::M, col, "M") };
        let mut m = if calm { build_calm(&a).unwrap() } else { build_m(&a).unwrap() };
        let before = m.clone();
        let corruption = Corruption { target, row, col };
        prop_assert!(corruption.apply(target, &mut m).unwrap());
        let recs_before = if calm {
            buchi_core::proofkit::calm_consistency(&a, &before).unwrap()
        } else {
            buchi_core::proofkit::m_consistency(&a, &before).unwrap()
        };
        let recs_after = if calm {
            buchi_core::proofkit::calm_consistency(&a, &m).unwrap()
        } else {
            buchi_core::proofkit::m_consistency(&a, &m).unwrap()
        };
        let name = format!("{prefix} row {row}");
        let b = recs_before.iter().find(|r| r.name == name).unwrap();
        let c = recs_after.iter().find(|r| r.name == name).unwrap();
        prop_assert!(!c.passed());
        prop_assert_ne!(&b.computed, &c.computed);
    }
}
