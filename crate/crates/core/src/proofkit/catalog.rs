//! Sub-determinants of `𝓜`, the type split and the two elimination chains.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use super::structural::t_universe;
use super::{tables, Assignment, IdentityRecord, ProofError, Status};
use crate::exactmath::{equal_up_to_scalar, PolyMatrix, RatFunc, Rational, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TypeBranch {
    /// `F₋ = 0`, so the `F₊` minors force the first normalisation.
    TypeI,
    /// `F₊ = 0`, so the `F₋` minors force the second normalisation.
    TypeII,
    Neither,
    Both,
}

impl fmt::Display for TypeBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeBranch::TypeI => "Type I",
            TypeBranch::TypeII => "Type II",
            TypeBranch::Neither => "neither",
            TypeBranch::Both => "both",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Assumption,
    Identity,
    Substitution,
    Solve,
    Conclusion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub label: String,
    pub kind: StepKind,
    pub detail: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct EliminationTrace {
    pub branch: TypeBranch,
    pub assignment: Assignment,
    pub steps: Vec<TraceStep>,
    #[serde(skip)]
    pub records: Vec<IdentityRecord>,
    pub conclusion: String,
    /// Every identity held and the final linear systems are nonsingular.
    pub forced_zero: bool,
}

struct Tracer {
    a: Assignment,
    u: Arc<Universe>,
    steps: Vec<TraceStep>,
    records: Vec<IdentityRecord>,
    /// Names of records the elimination logic depends on.
    critical: Vec<String>,
}

impl Tracer {
    fn new(a: Assignment) -> Self {
        Tracer {
            a,
            u: t_universe(),
            steps: Vec::new(),
            records: Vec::new(),
            critical: Vec::new(),
        }
    }

    fn parse(&self, text: &str) -> Result<RatFunc, ProofError> {
        Ok(self.a.parse_in(text, &self.u)?)
    }

    fn note(&mut self, kind: StepKind, label: impl Into<String>, detail: impl Into<String>) {
        self.steps.push(TraceStep {
            label: label.into(),
            kind,
            detail: detail.into(),
            status: Status::Pass,
        });
    }

    fn record(&mut self, kind: StepKind, rec: IdentityRecord) {
        self.critical.push(rec.name.clone());
        self.record_aux(kind, rec);
    }

    /// A display or closed-form comparison that the chain does not rely on.
    fn record_aux(&mut self, kind: StepKind, rec: IdentityRecord) {
        let detail = match &rec.scalar {
            Some(c) => format!("{} = {} * ({})", rec.computed, c, rec.claimed),
            None => format!("computed {} vs claimed {}", rec.computed, rec.claimed),
        };
        self.steps.push(TraceStep {
            label: rec.name.clone(),
            kind,
            detail,
            status: rec.status,
        });
        self.records.push(rec);
    }

    fn subs(&self, pairs: &[(&str, &str)]) -> Result<Vec<(usize, RatFunc)>, ProofError> {
        pairs
            .iter()
            .map(|(v, e)| {
                let i = self
                    .u
                    .index_of(v)
                    .ok_or_else(|| ProofError::ConsistencyFailure(format!("no variable {v}")))?;
                Ok((i, self.parse(e)?))
            })
            .collect()
    }

    fn finish(self, branch: TypeBranch) -> EliminationTrace {
        let broken: Vec<&str> = self
            .records
            .iter()
            .filter(|r| !r.passed() && self.critical.contains(&r.name))
            .map(|r| r.name.as_str())
            .collect();
        let forced_zero = broken.is_empty();
        let conclusion = if forced_zero {
            "every positive solution forces a variable to vanish".to_string()
        } else {
            format!("chain broken at: {}", broken.join(", "))
        };
        let mut steps = self.steps;
        steps.push(TraceStep {
            label: "conclusion".into(),
            kind: StepKind::Conclusion,
            detail: conclusion.clone(),
            status: Status::from_bool(forced_zero),
        });
        EliminationTrace {
            branch,
            assignment: self.a,
            steps,
            records: self.records,
            conclusion,
            forced_zero,
        }
    }
}

fn substitute(m: &PolyMatrix, subs: &[(usize, RatFunc)]) -> Result<PolyMatrix, ProofError> {
    Ok(m.try_map(|e| e.substitute(subs))?)
}

fn all_cols(m: &PolyMatrix) -> Vec<usize> {
    (0..m.cols()).collect()
}

/// `(F₊, F₋)`, whose product is a factor of `D01579`.
pub fn type_factors(a: &Assignment) -> Result<(RatFunc, RatFunc), ProofError> {
    let u = t_universe();
    Ok((
        a.parse_in(tables::F_PLUS, &u)?,
        a.parse_in(tables::F_MINUS, &u)?,
    ))
}

/// The six catalogued minors of `𝓜` and the separation `F₊ - F₋`.
pub fn subdet_catalog(
    a: &Assignment,
    calm: &PolyMatrix,
) -> Result<Vec<IdentityRecord>, ProofError> {
    let u = calm.universe().clone();
    let cols = all_cols(calm);
    let mut out = Vec::new();
    for (name, rows, claim) in tables::CATALOG {
        let d = calm.subdet(&rows, &cols)?;
        out.push(IdentityRecord::compare(
            name,
            *a,
            &d,
            &a.parse_in(claim, &u)?,
        ));
    }
    let (fp, fm) = type_factors(a)?;
    out.push(IdentityRecord::compare(
        "F+ - F-",
        *a,
        &fp.try_sub(&fm)?,
        &a.parse_in("2*(3/d2)*t12*t13", &u)?,
    ));
    Ok(out)
}

/// Which of `F₊`, `F₋` vanishes at a point of `t1..t15`.
pub fn classify_type(a: &Assignment, point: &[Rational]) -> Result<TypeBranch, ProofError> {
    let (fp, fm) = type_factors(a)?;
    let p = fp.eval(point)?.is_zero();
    let m = fm.eval(point)?.is_zero();
    Ok(match (p, m) {
        (true, true) => TypeBranch::Both,
        (false, true) => TypeBranch::TypeI,
        (true, false) => TypeBranch::TypeII,
        (false, false) => TypeBranch::Neither,
    })
}

/// Coefficients of a form linear in two monomials, read off at two points.
fn linear_coeffs(form: &RatFunc, points: &[Vec<Rational>; 2]) -> Result<[Rational; 2], ProofError> {
    Ok([form.eval(&points[0])?, form.eval(&points[1])?])
}

fn unit_point(ones: &[usize]) -> Vec<Rational> {
    let mut p = vec![Rational::zero(); 15];
    for &j in ones {
        p[j - 1] = Rational::from_integer(1.into());
    }
    p
}

/// Each pairing of a form from `a_forms` with one from `b_forms` must be a
/// nonsingular system in the two monomials.
fn pairings(
    t: &mut Tracer,
    prefix: &str,
    a_forms: &[&str],
    b_forms: &[&str],
    points: &[Vec<Rational>; 2],
) -> Result<(), ProofError> {
    for (i, fa) in a_forms.iter().enumerate() {
        for (j, fb) in b_forms.iter().enumerate() {
            let [p, q] = linear_coeffs(&t.parse(fa)?, points)?;
            let [r, s] = linear_coeffs(&t.parse(fb)?, points)?;
            let det = &p * &s - &q * &r;
            let rec = IdentityRecord::fact(
                format!("{prefix} system {i}{j}"),
                t.a,
                format!("det [[{p}, {q}], [{r}, {s}]] = {det}"),
                "nonzero".into(),
                !det.is_zero(),
            );
            t.record(StepKind::Solve, rec);
        }
    }
    Ok(())
}

fn vanish_under(
    t: &mut Tracer,
    name: &str,
    text: &str,
    subs: &[(usize, RatFunc)],
) -> Result<(), ProofError> {
    let f = t.parse(text)?.substitute(subs)?;
    let rec = IdentityRecord::vanishes(name, t.a, &f);
    t.record(StepKind::Identity, rec);
    Ok(())
}

fn minor_claims(
    t: &mut Tracer,
    m: &PolyMatrix,
    claims: &[(&str, [usize; 5], &str)],
) -> Result<(), ProofError> {
    let cols = all_cols(m);
    for (name, rows, claim) in claims {
        let d = m.subdet(rows, &cols)?;
        let rec = IdentityRecord::compare(*name, t.a, &d, &t.parse(claim)?);
        t.record(StepKind::Identity, rec);
    }
    Ok(())
}

fn display_rows(
    t: &mut Tracer,
    name: &str,
    m: &PolyMatrix,
    rows: &[usize],
    display: &PolyMatrix,
) -> Result<(), ProofError> {
    for (k, &r) in rows.iter().enumerate() {
        let pivot = (0..m.cols()).find(|&c| !display.get(k, c).is_zero());
        let c = pivot
            .and_then(|c| equal_up_to_scalar(m.get(r, c), display.get(k, c)))
            .filter(|c| !c.is_zero());
        let ok = c
            .as_ref()
            .is_some_and(|c| (0..m.cols()).all(|j| m.get(r, j) == &display.get(k, j).scale(c)));
        let computed: Vec<String> = (0..m.cols()).map(|j| m.get(r, j).to_string()).collect();
        let claimed: Vec<String> = (0..m.cols())
            .map(|j| display.get(k, j).to_string())
            .collect();
        let mut rec = IdentityRecord::fact(
            format!("{name} row {r}"),
            t.a,
            computed.join(", "),
            claimed.join(", "),
            ok,
        );
        rec.scalar = c.filter(|_| ok).map(|c| c.to_string());
        t.record_aux(StepKind::Identity, rec);
    }
    Ok(())
}

/// Passes when the numerator of `f` is a monomial times the product of `forms`.
fn factor_check(t: &mut Tracer, name: &str, f: &RatFunc, forms: &[&str]) -> Result<(), ProofError> {
    let mut rest = Some(f.num().clone()).filter(|n| !n.is_zero());
    for form in forms {
        let p = t.parse(form)?;
        rest = match (rest, p.as_polynomial()) {
            (Some(n), Some(p)) => n.exact_div(p).ok(),
            _ => None,
        };
    }
    let ok = rest.as_ref().is_some_and(|r| r.num_terms() == 1);
    let claimed = format!(
        "monomial * {}",
        forms
            .iter()
            .map(|f| format!("({f})"))
            .collect::<Vec<_>>()
            .join(" * ")
    );
    let rec = IdentityRecord::fact(name, t.a, f.to_string(), claimed, ok);
    t.record(StepKind::Identity, rec);
    Ok(())
}

fn del_col_det(m: &PolyMatrix, col: usize) -> Result<RatFunc, ProofError> {
    let rows: Vec<usize> = (0..m.rows()).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|&c| c != col).collect();
    Ok(m.subdet(&rows, &cols)?)
}

fn parse_display<const C: usize>(t: &Tracer, rows: &[[&str; C]]) -> Result<PolyMatrix, ProofError> {
    let entries = rows
        .iter()
        .flatten()
        .map(|e| t.parse(e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyMatrix::new(&t.u, rows.len(), C, entries)?)
}

/// The chain for `F₋ = 0`.
pub fn type1_eliminate(a: &Assignment, calm: &PolyMatrix) -> Result<EliminationTrace, ProofError> {
    let mut t = Tracer::new(*a);
    t.note(
        StepKind::Assumption,
        "F- = 0",
        format!("F- = {}; F+ = 2*(3/d2)*t12*t13 > 0", tables::F_MINUS),
    );
    let sub1 = t.subs(&tables::TYPE1_SUBS)?;
    t.note(
        StepKind::Substitution,
        "normalise",
        tables::TYPE1_SUBS
            .iter()
            .map(|(v, e)| format!("{v} = {e}"))
            .collect::<Vec<_>>()
            .join(", "),
    );
    vanish_under(
        &mut t,
        "D23468 square factor",
        "b1*b2*t5*t10 - t3*t12 - (3/d1)*t6*t9",
        &sub1,
    )?;
    vanish_under(&mut t, "D45679 factor", "d1*t3*t12 - t6*t9", &sub1)?;
    vanish_under(
        &mut t,
        "D03579 factor",
        "b1*d1*t5*t10 - (4/b2)*t6*t9",
        &sub1,
    )?;
    let m1 = substitute(calm, &sub1)?;
    minor_claims(&mut t, &m1, &tables::TYPE1_MINORS)?;

    let solved = t.subs(&tables::TYPE1_SOLVED)?;
    for (v, factor) in tables::TYPE1_VANISHING {
        t.note(
            StepKind::Solve,
            format!("solve {v}"),
            format!("{factor} = 0"),
        );
        vanish_under(&mut t, &format!("{v} solves its factor"), factor, &solved)?;
    }
    let m2 = substitute(&m1, &solved)?;

    let d0156 = parse_display(&t, &tables::TYPE1_M0156)?;
    display_rows(&mut t, "M0156", &m2, &tables::TYPE1_M0156_ROWS, &d0156)?;
    // The displayed "(0)" and "(3)" minors drop the last and the first column.
    let sub0156 = m2.submatrix(&tables::TYPE1_M0156_ROWS, &all_cols(&m2))?;
    let rec = IdentityRecord::vanishes("det M0156^(0)", *a, &del_col_det(&sub0156, 4)?);
    t.record(StepKind::Identity, rec);
    let rec = IdentityRecord::vanishes("det M0156^(0) as displayed", *a, &del_col_det(&d0156, 4)?);
    t.record_aux(StepKind::Identity, rec);
    let m0156_3 = del_col_det(&sub0156, 0)?;
    factor_check(
        &mut t,
        "det M0156^(3) factors",
        &m0156_3,
        &tables::TYPE1_FORMS_A,
    )?;
    let claim = t.parse(tables::TYPE1_M0156_DEL3)?;
    t.record_aux(
        StepKind::Identity,
        IdentityRecord::compare("det M0156^(3)", *a, &m0156_3, &claim),
    );
    let rec = IdentityRecord::compare(
        "det M0156^(3) as displayed",
        *a,
        &del_col_det(&d0156, 0)?,
        &claim,
    );
    t.record_aux(StepKind::Identity, rec);

    let d3467 = parse_display(&t, &tables::TYPE1_M3467)?;
    display_rows(&mut t, "M3467", &m2, &tables::TYPE1_M3467_ROWS, &d3467)?;
    let sub3467 = m2.submatrix(&tables::TYPE1_M3467_ROWS, &all_cols(&m2))?;
    let m3467_3 = del_col_det(&sub3467, 3)?;
    factor_check(
        &mut t,
        "det M3467^(3) factors",
        &m3467_3,
        &tables::TYPE1_FORMS_B,
    )?;
    let claim = t.parse(tables::TYPE1_M3467_DEL3)?;
    t.record_aux(
        StepKind::Identity,
        IdentityRecord::compare("det M3467^(3)", *a, &m3467_3, &claim),
    );
    let rec = IdentityRecord::compare(
        "det M3467^(3) as displayed",
        *a,
        &del_col_det(&d3467, 3)?,
        &claim,
    );
    t.record_aux(StepKind::Identity, rec);

    let points = [unit_point(&[11]), unit_point(&[5, 13])];
    pairings(
        &mut t,
        "Type I",
        &tables::TYPE1_FORMS_A,
        &tables::TYPE1_FORMS_B,
        &points,
    )?;
    Ok(t.finish(TypeBranch::TypeI))
}

/// The chain for `F₊ = 0`.
pub fn type2_eliminate(a: &Assignment, calm: &PolyMatrix) -> Result<EliminationTrace, ProofError> {
    let mut t = Tracer::new(*a);
    t.note(
        StepKind::Assumption,
        "F+ = 0",
        format!("F+ = {}; F- = -2*(3/d2)*t12*t13 < 0", tables::F_PLUS),
    );
    let sub2 = t.subs(&tables::TYPE2_SUBS)?;
    t.note(
        StepKind::Substitution,
        "normalise",
        tables::TYPE2_SUBS
            .iter()
            .map(|(v, e)| format!("{v} = {e}"))
            .collect::<Vec<_>>()
            .join(", "),
    );
    vanish_under(&mut t, "D01589 factor", "g*t5*t7 - (2/b1)*t12*t14", &sub2)?;
    vanish_under(&mut t, "D14589 factor", "d1*t5*t7 - t9*t11", &sub2)?;
    let n1 = substitute(calm, &sub2)?;
    minor_claims(&mut t, &n1, &tables::TYPE2_MINORS)?;

    let t10 = t.parse(tables::TYPE2_T10)?;
    let i10 = t.u.index_of("t10").expect("t10");
    let i6 = t.u.index_of("t6").expect("t6");
    let t6 = t
        .parse(tables::TYPE2_T6)?
        .substitute(&[(i10, t10.clone())])?;
    let solved = vec![(i10, t10), (i6, t6)];
    t.note(
        StepKind::Solve,
        "solve t10",
        format!("t10 = {}", tables::TYPE2_T10),
    );
    vanish_under(
        &mut t,
        "t10 solves D04567 factor",
        "b1*b2*d1*d2*t10 - 4*t12*t13*t9",
        &solved,
    )?;
    t.note(
        StepKind::Solve,
        "solve t6",
        format!("t6 = {}", tables::TYPE2_T6),
    );
    vanish_under(
        &mut t,
        "t6 solves D24689 factor",
        "b1*b2*t10 - t12*t3 - (3/d1)*t6*t9",
        &solved,
    )?;
    let n2 = substitute(&n1, &solved)?;
    let cols = all_cols(&n2);
    for ((name, rows, claim), forms) in tables::TYPE2_FINAL
        .iter()
        .zip([&tables::TYPE2_FORMS_A, &tables::TYPE2_FORMS_B])
    {
        let d = n2.subdet(rows, &cols)?;
        factor_check(&mut t, &format!("{name} factors"), &d, forms)?;
        let rec = IdentityRecord::compare(*name, *a, &d, &t.parse(claim)?);
        t.record_aux(StepKind::Identity, rec);
    }

    let points = [unit_point(&[3]), unit_point(&[9, 13])];
    pairings(
        &mut t,
        "Type II",
        &tables::TYPE2_FORMS_A,
        &tables::TYPE2_FORMS_B,
        &points,
    )?;
    Ok(t.finish(TypeBranch::TypeII))
}
