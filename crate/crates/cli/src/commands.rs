use std::fmt;
use std::fs;
use std::time::Instant;

use buchi_core::paramet::{
    build_param_seq, order_normalize, quad_pfaffian_check, quadruple_symbolic, reconstruct_tuple,
    structural_constants, triple_from_seed, ParamSeq, QuadConstants,
};
use buchi_core::proofkit::{
    quintuple_audit, Assignment, AssignmentFilter, AuditOptions, AuditReport, Corruption,
    IdentityRecord, Status, VERDICT_DISCREPANCY, VERDICT_PASS,
};
use buchi_core::tuples::{
    classify, hensley, pairs_from_tuple, search_chains, second_differences, tuple_from_pairs,
    BuchiTuple, PairTuple, SearchConfig,
};
use buchi_core::Integer;
use serde_json::{json, Value};

use crate::output::{int, ints, pairs, Report};

/// Exit codes of the `buchi` binary.
pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_QUINTUPLE: i32 = 3;

#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

pub type Outcome = Result<(Report, i32), CliError>;

pub fn parse_integers(text: &str) -> Result<Vec<Integer>, CliError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<Integer>()
                .map_err(|_| CliError(format!("not an integer: {p:?}")))
        })
        .collect()
}

/// `a..b`, inclusive at both ends.
pub fn parse_range(text: &str) -> Result<(i64, i64), CliError> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| CliError(format!("expected a..b, got {text:?}")))?;
    let a: i64 = a
        .trim()
        .parse()
        .map_err(|_| CliError(format!("bad range start {a:?}")))?;
    let b: i64 = b
        .trim()
        .parse()
        .map_err(|_| CliError(format!("bad range end {b:?}")))?;
    if a > b {
        return Err(CliError(format!("empty range {text}")));
    }
    Ok((a, b))
}

fn chain_row(p: &PairTuple) -> Result<Vec<Value>, CliError> {
    let t = tuple_from_pairs(p)?;
    Ok(vec![
        int(&p.d()),
        int(&p.s()),
        pairs(p.pairs()),
        ints(t.values()),
        Value::from(p.is_trivial()),
    ])
}

pub fn search(n: usize, d_max: u64, shards: usize) -> Outcome {
    if !(3..=6).contains(&n) {
        return Err(CliError(format!("--n must lie in 3..=6, got {n}")));
    }
    if d_max < 1 || shards < 1 {
        return Err(CliError("--dmax and --shards must be at least 1".into()));
    }
    let start = Instant::now();
    let chains = search_chains(SearchConfig { n, d_max, shards })?;
    let mut r = Report::new("search", vec!["D", "s", "pairs", "tuple", "trivial"]);
    r.meta.insert("n".into(), json!(n));
    r.meta.insert("dmax".into(), json!(d_max));
    r.meta.insert("count".into(), json!(chains.len()));
    for c in &chains {
        r.rows.push(chain_row(c)?);
        r.text.push(format!(
            "D={} s={} pairs={} tuple={}",
            c.d(),
            c.s(),
            c,
            tuple_from_pairs(c)?
        ));
    }
    r.text.push(format!(
        "{} chains of length {n} with D <= {d_max} ({:.2?})",
        chains.len(),
        start.elapsed()
    ));
    let code = if n >= 5 && !chains.is_empty() {
        EXIT_QUINTUPLE
    } else {
        EXIT_OK
    };
    Ok((r, code))
}

fn tuple_columns() -> Vec<&'static str> {
    vec![
        "input",
        "tuple",
        "valid",
        "trivial",
        "contains_zero",
        "second_differences",
        "warning",
    ]
}

fn tuple_row(input: Value, u: &BuchiTuple) -> Vec<Value> {
    let c = classify(u);
    let diffs = second_differences(&u.squares())
        .map(|d| ints(&d))
        .unwrap_or(Value::Null);
    vec![
        input,
        ints(u.values()),
        json!(c.valid),
        json!(c.trivial),
        json!(c.contains_zero),
        diffs,
        Value::Null,
    ]
}

fn warning_row(input: Value, width: usize, warning: String) -> Vec<Value> {
    let mut row = vec![Value::Null; width];
    row[0] = input;
    row[width - 1] = Value::String(warning);
    row
}

pub fn generate_hensley(range: (i64, i64)) -> Outcome {
    let mut r = Report::new("generate", tuple_columns());
    r.meta.insert("family".into(), json!("hensley"));
    for t in range.0..=range.1 {
        match hensley(&Integer::from(t)) {
            Ok(u) => {
                let c = classify(&u);
                r.text
                    .push(format!("t={t} {u} valid={} trivial={}", c.valid, c.trivial));
                r.rows.push(tuple_row(json!(t), &u));
            }
            Err(e) => {
                eprintln!("warning: t={t}: {e}");
                r.text.push(format!("t={t} warning: {e}"));
                r.rows
                    .push(warning_row(json!(t), r.columns.len(), e.to_string()));
            }
        }
    }
    Ok((r, EXIT_OK))
}

/// Seeds are `s1 s3 s4 s6 beta`; a rejected seed is a usage error, a
/// degenerate one a warning.
pub fn generate_triples(seeds: &[String]) -> Outcome {
    let mut columns = tuple_columns();
    columns.insert(2, "s");
    let mut r = Report::new("generate", columns);
    r.meta.insert("family".into(), json!("triple"));
    let mut rejected = 0;
    for line in seeds {
        let v = parse_integers(line)?;
        let input = Value::String(line.trim().to_string());
        let [s1, s3, s4, s6, beta] = v.as_slice() else {
            return Err(CliError(format!(
                "seed {line:?} needs five integers s1 s3 s4 s6 beta"
            )));
        };
        let beta = u32::try_from(beta).map_err(|_| CliError(format!("bad beta in {line:?}")))?;
        match triple_from_seed(s1, s3, s4, s6, beta) {
            Ok(t) => {
                let mut row = tuple_row(input, &t.tuple);
                row.insert(2, ints(t.seq.entries()));
                if t.degenerate {
                    let w = format!("seed {} is degenerate", line.trim());
                    eprintln!("warning: {w}");
                    *row.last_mut().expect("row has a warning column") = Value::String(w);
                }
                r.text.push(format!(
                    "seed {} -> {} s={} degenerate={}",
                    line.trim(),
                    t.tuple,
                    t.seq,
                    t.degenerate
                ));
                r.rows.push(row);
            }
            Err(e) => {
                rejected += 1;
                eprintln!("rejected: seed {}: {e}", line.trim());
                r.text.push(format!("seed {} rejected: {e}", line.trim()));
                let width = r.columns.len();
                r.rows.push(warning_row(input, width, e.to_string()));
            }
        }
    }
    Ok((r, if rejected > 0 { EXIT_USAGE } else { EXIT_OK }))
}

pub fn read_seed_file(path: &str) -> Result<Vec<String>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError(format!("{path}: {e}")))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect())
}

pub enum ConvertInput {
    Tuple(String),
    Pairs(String),
    Seq(String),
}

fn parse_pairs(text: &str) -> Result<PairTuple, CliError> {
    let v = parse_integers(text)?;
    if v.len() % 2 != 0 {
        return Err(CliError("pairs need an even number of integers".into()));
    }
    Ok(PairTuple::new(
        v.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect(),
    )?)
}

/// Converts between tuple, pair and parametrizing-sequence forms.
pub fn convert(input: ConvertInput) -> Outcome {
    let pairs_form = match &input {
        ConvertInput::Tuple(t) => pairs_from_tuple(&BuchiTuple::new(parse_integers(t)?)?)?,
        ConvertInput::Pairs(p) => parse_pairs(p)?,
        ConvertInput::Seq(s) => {
            let v = parse_integers(s)?;
            let n = v.len().trailing_zeros() as usize;
            if v.len() != 1 << n {
                return Err(CliError(format!(
                    "sequence length {} is not a power of two",
                    v.len()
                )));
            }
            reconstruct_tuple(&ParamSeq::new(n, v)?)?
        }
    };
    let tuple = tuple_from_pairs(&pairs_form)?;
    let c = classify(&tuple);
    let mut r = Report::new(
        "convert",
        vec![
            "tuple", "pairs", "D", "ordered", "seq", "beta", "delta", "gamma", "valid", "trivial",
            "warning",
        ],
    );
    let mut warning = Value::Null;
    let mut ordered = Value::Null;
    let (mut seq, mut beta, mut delta, mut gamma) =
        (Value::Null, Value::Null, Value::Null, Value::Null);
    match order_normalize(&pairs_form).and_then(|o| Ok((build_param_seq(&o)?, o))) {
        Ok((s, o)) => {
            ordered = pairs(o.pairs());
            seq = ints(s.entries());
            if let Ok(k) = structural_constants(&s) {
                beta = json!(k.beta);
                delta = json!(k.delta);
                gamma = json!(k.gamma);
            }
            r.text.push(format!("ordered {o}"));
            r.text.push(format!("seq {s}"));
        }
        Err(e) => {
            eprintln!("warning: {e}");
            warning = Value::String(e.to_string());
        }
    }
    r.text.insert(
        0,
        format!("tuple {tuple} pairs {pairs_form} D={}", pairs_form.d()),
    );
    r.rows.push(vec![
        ints(tuple.values()),
        pairs(pairs_form.pairs()),
        int(&pairs_form.d()),
        ordered,
        seq,
        beta,
        delta,
        gamma,
        json!(c.valid),
        json!(c.trivial),
        warning,
    ]);
    Ok((r, EXIT_OK))
}

pub struct VerifyArgs {
    pub quad: bool,
    pub quintuple: bool,
    pub filter: AssignmentFilter,
    pub corruption: Option<Corruption>,
    pub samples: usize,
    pub seed: u64,
}

fn quad_records(filter: &AssignmentFilter) -> Result<(Vec<Vec<Value>>, Vec<Value>), CliError> {
    let keep = |c: &QuadConstants| {
        filter.constraints.iter().all(|(k, v)| match k.as_str() {
            "b1" => c.b1 == *v,
            "b2" => c.b2 == *v,
            "d1" => c.d == *v,
            _ => true,
        })
    };
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for c in QuadConstants::all().into_iter().filter(keep) {
        let label = format!("b1={},b2={},d={}", c.b1, c.b2, c.d);
        let check = quadruple_symbolic(c)?;
        for (name, res) in &check.relations {
            let ok = res.is_zero();
            rows.push(verify_row(
                "quad",
                &label,
                &format!("relation {name}"),
                ok,
                None,
                &res.to_string(),
                "0",
            ));
        }
        rows.push(verify_row(
            "quad",
            &label,
            "ratio",
            check.ratio_holds(),
            None,
            &check.ratio.to_string(),
            &c.d.to_string(),
        ));
        let (pf, eq, scalar) = quad_pfaffian_check(c.b1, c.b2)?;
        let expected = buchi_core::Rational::from_integer((c.b1 * c.b2).into());
        let ok = scalar.as_ref() == Some(&expected);
        let s = scalar.map(|s| s.to_string());
        rows.push(verify_row(
            "quad",
            &label,
            "Pfaffian",
            ok,
            s.as_deref(),
            &pf.to_string(),
            &eq.to_string(),
        ));
        notes.push(json!({
            "constants": label,
            "name": "compact s3 and s6 forms",
            "holds": check.compact_forms_hold(),
        }));
    }
    Ok((rows, notes))
}

fn verify_row(
    suite: &str,
    constants: &str,
    name: &str,
    ok: bool,
    scalar: Option<&str>,
    computed: &str,
    claimed: &str,
) -> Vec<Value> {
    vec![
        json!(suite),
        json!(constants),
        json!(name),
        json!(if ok { "pass" } else { "fail" }),
        scalar.map_or(Value::Null, |s| json!(s)),
        json!(computed),
        json!(claimed),
    ]
}

fn record_row(r: &IdentityRecord) -> Vec<Value> {
    verify_row(
        "quintuple",
        &r.assignment.to_string(),
        &r.name,
        r.status == Status::Pass,
        r.scalar.as_deref(),
        &r.computed,
        &r.claimed,
    )
}

/// Names of identities whose status or computed value differ between runs.
pub fn corruption_effects(base: &AuditReport, bad: &AuditReport) -> Vec<String> {
    let mut out = Vec::new();
    for (a, b) in base.assignments.iter().zip(&bad.assignments) {
        for (x, y) in a.all_records().zip(b.all_records()) {
            if x.status != y.status || x.computed != y.computed {
                out.push(format!("{} [{}]", y.name, y.assignment));
            }
        }
    }
    out
}

pub fn verify(args: VerifyArgs) -> Outcome {
    let start = Instant::now();
    let mut r = Report::new(
        "verify",
        vec![
            "suite",
            "constants",
            "name",
            "status",
            "scalar",
            "computed",
            "claimed",
        ],
    );
    let suite = match (args.quad, args.quintuple) {
        (true, true) => "all",
        (true, false) => "quad",
        _ => "quintuple",
    };
    r.meta.insert("suite".into(), json!(suite));
    let filter_text: Vec<String> = args
        .filter
        .constraints
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    r.meta
        .insert("assignments".into(), json!(filter_text.join(",")));
    if args.quad {
        let (rows, notes) = quad_records(&args.filter)?;
        r.rows.extend(rows);
        r.extra.insert("quad_notes".into(), Value::Array(notes));
    }
    if args.quintuple {
        let assignments = args.filter.apply(&Assignment::all());
        if assignments.is_empty() {
            return Err(CliError("the assignment filter selects nothing".into()));
        }
        let opts = AuditOptions {
            samples: args.samples,
            seed: args.seed,
            corruption: args.corruption,
            ..Default::default()
        };
        let report = quintuple_audit(&assignments, &opts)?;
        for a in &report.assignments {
            r.rows.extend(a.identities.iter().map(record_row));
            for t in &a.trace {
                r.rows.extend(t.records.iter().map(record_row));
            }
        }
        let traces: Vec<Value> = report
            .assignments
            .iter()
            .flat_map(|a| &a.trace)
            .map(|t| json!(t))
            .collect();
        r.extra.insert("trace".into(), Value::Array(traces));
        if let Some(c) = args.corruption {
            let base = quintuple_audit(
                &assignments,
                &AuditOptions {
                    corruption: None,
                    ..opts
                },
            )?;
            let effects = corruption_effects(&base, &report);
            for e in &effects {
                eprintln!("corruption {c} changes {e}");
            }
            r.meta.insert("corruption".into(), json!(c.to_string()));
            r.extra.insert("corruption_effects".into(), json!(effects));
            r.text.extend(
                effects
                    .iter()
                    .map(|e| format!("corruption {c} changes {e}")),
            );
        }
    }
    let failures = r.rows.iter().filter(|row| row[3] == "fail").count();
    for row in r.rows.iter().filter(|row| row[3] == "fail") {
        r.text.push(format!(
            "FAIL {} [{}]: computed {} claimed {}",
            crate::output::cell(&row[2]),
            crate::output::cell(&row[1]),
            crate::output::cell(&row[5]),
            crate::output::cell(&row[6])
        ));
    }
    let verdict = match (failures, args.quintuple) {
        (0, true) => VERDICT_PASS,
        (0, false) => "all identities hold",
        _ => VERDICT_DISCREPANCY,
    };
    r.text.push(format!(
        "{} identities, {failures} failures ({:.2?})",
        r.rows.len(),
        start.elapsed()
    ));
    r.text.push(format!("verdict: {verdict}"));
    r.meta.insert("failures".into(), json!(failures));
    r.meta.insert("verdict".into(), json!(verdict));
    Ok((
        r,
        if failures == 0 {
            EXIT_OK
        } else {
            EXIT_DISCREPANCY
        },
    ))
}
