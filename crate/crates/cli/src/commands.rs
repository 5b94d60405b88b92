//! The verification suites behind each subcommand. Every function returns a
//! finished [`Report`]; rendering and exit codes live in the caller.

use std::fmt;
use std::time::Instant;

use permgrp::alternating::{
    alternating_group, alternating_group_with_cap, centralizer_order, count_cycle_type, cycle_type_census,
    family_structure, klein_vierergruppe, symmetric_group, symmetric_group_with_cap, verify_centralizer_structure,
    verify_commutator_prop, verify_klein_sylow, Family, MaximalityRoute,
};
use permgrp::iwasawa::{simplicity_via_iwasawa, Counterexample, NormalEvidence};
use permgrp::{Action, Error, FiniteGroup, IwasawaReport, PartitionOfN, Permutation, Subgroup};
use serde_json::{json, Value};

use crate::format::{FormatError, GroupFile};
use crate::report::{Check, Report, Table, Verdict, PLUMBING};

/// Largest degree the verification suites accept.
pub const MAX_SUITE_DEGREE: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub cap: usize,
    pub slow: bool,
    pub timings: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Format { path: String, error: FormatError },
    Cap { cap: usize, needed: Option<u64> },
    Engine(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Cap { .. } | CliError::Engine(Error::GroupTooLarge { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Format { path, error } => write!(f, "{path}: {error}"),
            CliError::Cap { cap, needed: Some(n) } => {
                write!(f, "group order {n} exceeds the cap of {cap} (raise it with --cap)")
            }
            CliError::Cap { cap, needed: None } => {
                write!(f, "group order exceeds the cap of {cap} (raise it with --cap)")
            }
            CliError::Engine(Error::GroupTooLarge { cap }) => {
                write!(f, "group order exceeds the cap of {cap} (raise it with --cap)")
            }
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

type Outcome = Result<Report, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    K2,
    K3,
    K4,
}

impl Route {
    pub fn family(self) -> Family {
        match self {
            Route::K2 => Family::Transposition,
            Route::K3 => Family::ThreeCycle,
            Route::K4 => Family::Klein,
        }
    }
}

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Transposition => "transpositions",
        Family::ThreeCycle => "3-cycles",
        Family::Klein => "Klein four-groups",
    }
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i))
}

fn ensure_cap(opts: &Options, needed: Option<u64>) -> Result<(), CliError> {
    match needed {
        Some(order) if order <= opts.cap as u64 => Ok(()),
        _ => Err(CliError::Cap { cap: opts.cap, needed }),
    }
}

/// Degrees past the suite range report the cap first when `n!` exceeds it.
fn ensure_degree(opts: &Options, n: usize, min: usize) -> Result<(), CliError> {
    if n > MAX_SUITE_DEGREE {
        ensure_cap(opts, factorial(n))?;
    }
    if n < min || n > MAX_SUITE_DEGREE {
        return Err(CliError::Usage(format!("--n must be between {min} and {MAX_SUITE_DEGREE}, got {n}")));
    }
    Ok(())
}

fn perms<'a>(it: impl IntoIterator<Item = &'a Permutation>) -> Value {
    Value::Array(it.into_iter().map(|p| Value::String(p.to_string())).collect())
}

/// Accumulates checks, timing each one when asked.
struct Suite {
    report: Report,
    timings: bool,
}

impl Suite {
    fn new(command: &str, opts: &Options) -> Self {
        Suite { report: Report::new(command), timings: opts.timings }
    }

    fn check<F>(&mut self, name: impl Into<String>, anchor: &str, f: F) -> Result<(), CliError>
    where
        F: FnOnce() -> Result<(Verdict, Value), CliError>,
    {
        let start = Instant::now();
        let (verdict, evidence) = f()?;
        let ms = start.elapsed().as_millis() as u64;
        self.push(name, anchor, verdict, evidence, ms);
        Ok(())
    }

    fn push(&mut self, name: impl Into<String>, anchor: &str, verdict: Verdict, evidence: Value, ms: u64) {
        self.report.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            verdict,
            evidence,
            wall_time_ms: self.timings.then_some(ms),
        });
    }

    fn skip(&mut self, name: impl Into<String>, anchor: &str, reason: &str) {
        self.report.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            verdict: Verdict::Skipped,
            evidence: json!({ "reason": reason }),
            wall_time_ms: None,
        });
    }

    fn finish(self) -> Outcome {
        Ok(self.report)
    }
}

const SLOW_REASON: &str = "degree 7 suites run only with --slow";

fn counterexample_json(c: &Counterexample) -> Value {
    match c {
        Counterexample::NonCommuting { point, a, b } => {
            json!({ "kind": "non-commuting", "point": point, "a": a.to_string(), "b": b.to_string() })
        }
        Counterexample::NotCovariant { g, point } => {
            json!({ "kind": "not-covariant", "g": g.to_string(), "point": point })
        }
        Counterexample::NotGenerating { generated_order } => {
            json!({ "kind": "not-generating", "generated_order": generated_order })
        }
        Counterexample::NotQuasiprimitive { normal_generators, normal_order } => json!({
            "kind": "not-quasiprimitive",
            "normal_order": normal_order,
            "normal_generators": perms(normal_generators),
        }),
        Counterexample::ConclusionFails { normal_generators, normal_order } => json!({
            "kind": "conclusion-fails",
            "normal_order": normal_order,
            "normal_generators": perms(normal_generators),
        }),
    }
}

fn normal_evidence_json(rows: &[NormalEvidence]) -> Value {
    rows.iter()
        .map(|e| {
            json!({
                "order": e.order,
                "generators": perms(&e.generators),
                "acts_nontrivially": e.acts_nontrivially,
                "contains_derived": e.contains_derived,
                "joins_with_base": e.joins_to_group_with_base,
            })
        })
        .collect()
}

fn counterexample_of(report: &IwasawaReport, pick: impl Fn(&Counterexample) -> bool) -> Value {
    report.counterexample.as_ref().filter(|c| pick(c)).map_or(Value::Null, counterexample_json)
}

/// The hypothesis, conclusion and proof-step checks of one criterion run.
fn iwasawa_checks(
    suite: &mut Suite,
    prefix: &str,
    report: &IwasawaReport,
    primitive: bool,
    group_order: usize,
    ms: u64,
) {
    let label = |s: &str| if prefix.is_empty() { s.to_string() } else { format!("{prefix}: {s}") };
    suite.push(
        label("every T(x) is abelian"),
        "Iwasawa criterion, commutativity hypothesis",
        Verdict::of(report.all_commutative()),
        json!({
            "points": report.commutative.len(),
            "counterexample": counterexample_of(report, |c| matches!(c, Counterexample::NonCommuting { .. })),
        }),
        ms,
    );
    suite.push(
        label("T(g.x) = g T(x) g^-1"),
        "Iwasawa criterion, covariance hypothesis",
        Verdict::of(report.covariant),
        json!({
            "counterexample": counterexample_of(report, |c| matches!(c, Counterexample::NotCovariant { .. })),
        }),
        ms,
    );
    suite.push(
        label("the T(x) generate G"),
        "Iwasawa criterion, generation hypothesis",
        Verdict::of(report.generates),
        json!({
            "group_order": group_order,
            "counterexample": counterexample_of(report, |c| matches!(c, Counterexample::NotGenerating { .. })),
        }),
        ms,
    );
    suite.push(
        label("the action is quasiprimitive"),
        "Iwasawa criterion, quasiprimitivity hypothesis",
        Verdict::of(report.quasiprimitive == Some(true)),
        json!({
            "primitive": primitive,
            "counterexample": counterexample_of(report, |c| matches!(c, Counterexample::NotQuasiprimitive { .. })),
        }),
        ms,
    );
    suite.push(
        label("every nontrivially acting normal subgroup contains D(G)"),
        "Iwasawa criterion, conclusion",
        Verdict::of(report.conclusion_verified),
        json!({
            "derived_order": report.derived_order,
            "normal_subgroups": normal_evidence_json(&report.normal_subgroups),
            "counterexample": counterexample_of(report, |c| matches!(c, Counterexample::ConclusionFails { .. })),
        }),
        ms,
    );
    let acting: Vec<&NormalEvidence> = report.normal_subgroups.iter().filter(|e| e.acts_nontrivially).collect();
    let joins = acting.iter().all(|e| e.joins_to_group_with_base == Some(true));
    let verdict = if !report.hypotheses_hold() { Verdict::Skipped } else { Verdict::of(joins) };
    let evidence = if verdict == Verdict::Skipped {
        json!({ "reason": "hypotheses do not hold" })
    } else {
        json!({ "base_point": 0, "normal_orders": acting.iter().map(|e| e.order).collect::<Vec<_>>() })
    };
    suite.push(label("<N, T(a)> = G for every such N"), "Iwasawa criterion, proof step", verdict, evidence, ms);
}

/// Simplicity of `A_n` through one Iwasawa route, cross-checked by brute force.
pub fn verify_an_simple(command: &str, opts: &Options, n: usize, route: Route) -> Outcome {
    ensure_degree(opts, n, 5)?;
    let family = route.family();
    let needed = match family {
        Family::Transposition => factorial(n),
        _ => factorial(n).map(|f| f / 2),
    };
    ensure_cap(opts, needed)?;
    let mut suite = Suite::new(command, opts);
    let k = family.subset_size();
    suite.report.property("group", if family == Family::Transposition { format!("S{n}") } else { format!("A{n}") });
    suite.report.property("action", format!("subsets({n},{k})"));
    suite.report.property("family", family_name(family));
    if n == 7 && !opts.slow {
        for name in ["Iwasawa criterion", "A_n simple by the criterion", "A_n simple by enumeration"] {
            suite.skip(name, "simplicity of A_n", SLOW_REASON);
        }
        return suite.finish();
    }
    let start = Instant::now();
    let v = simplicity_via_iwasawa(n, k, family)?;
    let ms = start.elapsed().as_millis() as u64;
    suite.report.property("primitive", v.primitive);
    suite.report.property("faithful", v.faithful);
    let order = needed.unwrap_or(0) as usize;
    iwasawa_checks(&mut suite, "", &v.report, v.primitive, order, ms);
    match v.simple_by_iwasawa {
        Some(simple) => suite.push(
            format!("A{n} simple by the criterion"),
            "simplicity of A_n",
            Verdict::of(simple),
            json!({
                "conclusion_verified": v.report.conclusion_verified,
                "derived_equals_group": v.derived_equals_group,
                "faithful": v.faithful,
            }),
            ms,
        ),
        None => suite.skip(
            format!("A{n} simple by the criterion"),
            "simplicity of A_n",
            "the transposition family acts through S_n, so the criterion bounds normal subgroups of S_n only",
        ),
    }
    suite.push(
        format!("A{n} simple by enumeration"),
        "simplicity of A_n, brute-force cross-check",
        Verdict::of(v.simple_brute_force && v.consistent()),
        json!({ "simple": v.simple_brute_force, "agrees_with_criterion": v.consistent() }),
        ms,
    );
    suite.finish()
}

fn subgroup_name(h: &Subgroup<'_>, n: usize, alternating: &FiniteGroup, klein: Option<&Subgroup<'_>>) -> String {
    if h.is_trivial() {
        "{e}".into()
    } else if h.is_whole() {
        format!("S{n}")
    } else if h.elements().eq(alternating.elements().iter()) {
        format!("A{n}")
    } else if klein.is_some_and(|v| v == h) {
        "V".into()
    } else {
        format!("order {}", h.order())
    }
}

pub fn verify_sn_normal(command: &str, opts: &Options, n: usize) -> Outcome {
    ensure_degree(opts, n, 1)?;
    ensure_cap(opts, factorial(n))?;
    let mut suite = Suite::new(command, opts);
    let start = Instant::now();
    let s = symmetric_group(n)?;
    let a = alternating_group(n)?;
    let klein = if n == 4 { Some(klein_vierergruppe(&s, [0, 1, 2, 3])?) } else { None };
    let normals = s.normal_subgroups();
    let names: Vec<String> = normals.iter().map(|h| subgroup_name(h, n, &a, klein.as_ref())).collect();
    let expected: Vec<String> = match n {
        1 => vec!["{e}".into()],
        2 => vec!["{e}".into(), "S2".into()],
        4 => vec!["{e}".into(), "V".into(), "A4".into(), "S4".into()],
        _ => vec!["{e}".into(), format!("A{n}"), format!("S{n}")],
    };
    let ms = start.elapsed().as_millis() as u64;
    suite.report.table(Table {
        title: format!("normal subgroups of S{n}"),
        columns: vec!["name".into(), "order".into(), "generators".into()],
        rows: normals
            .iter()
            .zip(&names)
            .map(|(h, name)| {
                let gens: Vec<String> = h.generators().map(|g| g.to_string()).collect();
                vec![name.clone(), h.order().to_string(), if gens.is_empty() { "()".into() } else { gens.join(" ") }]
            })
            .collect(),
    });
    suite.push(
        format!("normal subgroups of S{n} are {}", expected.join(", ")),
        "normal subgroups of S_n",
        Verdict::of(names == expected),
        json!({ "found": names, "orders": normals.iter().map(Subgroup::order).collect::<Vec<_>>() }),
        ms,
    );
    suite.check("every listed subgroup is invariant under conjugation", PLUMBING, || {
        let ok =
            normals.iter().all(|h| s.elements().iter().all(|g| h.elements().all(|x| h.contains(&x.conjugate_by(g)))));
        Ok((Verdict::of(ok), json!({ "subgroups": normals.len() })))
    })?;
    suite.finish()
}

pub fn verify_commutators(command: &str, opts: &Options, n: Option<usize>) -> Outcome {
    let degrees: Vec<usize> = match n {
        Some(n) => {
            ensure_degree(opts, n, 1)?;
            vec![n]
        }
        None => (2..=MAX_SUITE_DEGREE).collect(),
    };
    ensure_cap(opts, factorial(*degrees.last().unwrap()))?;
    let mut suite = Suite::new(command, opts);
    for n in degrees {
        if n == 7 && !opts.slow {
            suite.skip("D(S7) = A7", "derived subgroup of S_n", SLOW_REASON);
            suite.skip("D(A7) = A7", "derived subgroup of A_n", SLOW_REASON);
            continue;
        }
        let start = Instant::now();
        let rec = verify_commutator_prop(n)?;
        let ms = start.elapsed().as_millis() as u64;
        suite.push(
            format!("D(S{n}) = A{n}"),
            "derived subgroup of S_n",
            Verdict::of(rec.derived_symmetric_is_alternating),
            json!({ "alternating_order": factorial(n).map(|f| (f / 2).max(1)) }),
            ms,
        );
        if n >= 5 {
            suite.push(
                format!("D(A{n}) = A{n}"),
                "derived subgroup of A_n",
                Verdict::of(rec.derived_alternating_is_alternating),
                json!({ "derived_order": rec.derived_alternating_order }),
                ms,
            );
        } else if n == 4 {
            suite.check("D(A4) = V", "derived subgroup of A_4", || {
                let a4 = alternating_group(4)?;
                let v = klein_vierergruppe(&a4, [0, 1, 2, 3])?;
                let d = a4.derived_subgroup();
                Ok((Verdict::of(d == v && d.order() == 4), json!({ "derived_order": d.order() })))
            })?;
        } else {
            suite.push(
                format!("D(A{n}) = {{e}}"),
                "derived subgroup of A_n",
                Verdict::of(rec.derived_alternating_order == 1),
                json!({ "derived_order": rec.derived_alternating_order }),
                ms,
            );
        }
    }
    suite.finish()
}

fn route_json(route: &MaximalityRoute, action: &Action) -> Value {
    json!({
        "group_order": route.group_order,
        "stabilizer_order": route.stabilizer_order,
        "intermediate_order": route.intermediate_order,
        "witness_block": route.witness_block.as_ref().map(|b| action.block_label(b)),
        "partition_stabilizer_order": route.partition_stabilizer_order,
    })
}

pub fn verify_prop_maximal(command: &str, opts: &Options, n: usize, k: usize) -> Outcome {
    ensure_degree(opts, n, 1)?;
    if k > n {
        return Err(CliError::Usage(format!("--k must be at most --n, got k = {k} > n = {n}")));
    }
    ensure_cap(opts, factorial(n))?;
    let mut suite = Suite::new(command, opts);
    suite.report.property("hypothesis 0 < k < n - k", 0 < k && 2 * k < n);
    let anchor_a = "maximality of (S_k x S_{n-k}) inside A_n";
    let anchor_s = "maximality of S_k x S_{n-k} in S_n";
    if n == 7 && !opts.slow {
        for (name, anchor) in [("A7 primitive", anchor_a), ("S7 primitive", anchor_s)] {
            suite.skip(name, anchor, SLOW_REASON);
        }
        return suite.finish();
    }
    let start = Instant::now();
    let rec = permgrp::alternating::verify_prop_maximal(n, k)?;
    let ms = start.elapsed().as_millis() as u64;
    let a_action = Action::on_subsets(alternating_group(n)?, k)?;
    let s_action = Action::on_subsets(symmetric_group(n)?, k)?;
    for (label, route, action, anchor) in [
        (format!("A{n}"), &rec.alternating, &a_action, anchor_a),
        (format!("S{n}"), &rec.symmetric, &s_action, anchor_s),
    ] {
        let evidence = route_json(route, action);
        suite.push(
            format!("{label} on subsets({n},{k}) is primitive"),
            anchor,
            Verdict::of(route.primitive),
            evidence.clone(),
            ms,
        );
        suite.push(
            format!("stabilizer of {{1..{k}}} is maximal in {label}"),
            anchor,
            Verdict::of(route.stabilizer_maximal),
            evidence,
            ms,
        );
        suite.push(
            format!("{label}: primitivity agrees with maximality"),
            "primitivity via maximal stabilizers",
            Verdict::of(route.routes_agree()),
            json!({ "primitive": route.primitive, "stabilizer_maximal": route.stabilizer_maximal }),
            ms,
        );
    }
    suite.finish()
}

/// The default instantiations, or the single one picked by `--n`/`--route`.
pub fn verify_iwasawa(command: &str, opts: &Options, n: Option<usize>, route: Option<Route>) -> Outcome {
    let runs: Vec<(usize, Family)> = match (n, route) {
        (None, None) => {
            vec![(5, Family::Transposition), (5, Family::ThreeCycle), (6, Family::Klein), (7, Family::ThreeCycle)]
        }
        (n, route) => vec![(n.unwrap_or(5), route.unwrap_or(Route::K3).family())],
    };
    for &(n, family) in &runs {
        ensure_degree(opts, n, 1)?;
        if family.subset_size() > n {
            return Err(CliError::Usage(format!(
                "route needs {}-subsets, which requires n >= {}",
                family.subset_size(),
                family.subset_size()
            )));
        }
        let needed = if family == Family::Transposition { factorial(n) } else { factorial(n).map(|f| (f / 2).max(1)) };
        ensure_cap(opts, needed)?;
    }
    let mut suite = Suite::new(command, opts);
    for (n, family) in runs {
        let k = family.subset_size();
        let group = if family == Family::Transposition { format!("S{n}") } else { format!("A{n}") };
        let prefix = format!("{group} on subsets({n},{k}), {}", family_name(family));
        if n == 7 && !opts.slow {
            suite.skip(format!("{prefix}: criterion"), "Iwasawa criterion", SLOW_REASON);
            continue;
        }
        let start = Instant::now();
        let action = Action::on_subsets(family.ambient_group(n)?, k)?;
        let report = family_structure(&action, family)?.conclude();
        let primitive = action.is_primitive();
        let ms = start.elapsed().as_millis() as u64;
        iwasawa_checks(&mut suite, &prefix, &report, primitive, action.group().order(), ms);
    }
    suite.finish()
}

pub fn verify_klein_sylow_suite(command: &str, opts: &Options) -> Outcome {
    ensure_cap(opts, Some(24))?;
    let mut suite = Suite::new(command, opts);
    let start = Instant::now();
    let rec = verify_klein_sylow()?;
    let ms = start.elapsed().as_millis() as u64;
    let anchor = "Sylow 2-subgroup of A_4";
    let rows = [
        ("A4 has exactly one subgroup of order 4", rec.sylow_count == 1 && rec.sylow_order == 4),
        ("that subgroup is V", rec.sylow_equals_klein),
        ("its elements have type () or (2,2)", rec.sylow_types_restricted),
        ("A4 has 3 elements of type (2,2)", rec.double_transpositions == 3),
        ("V is normal in A4", rec.klein_normal_in_alternating),
        ("V is normal in S4", rec.klein_normal_in_symmetric),
    ];
    let evidence = json!({
        "alternating_order": rec.alternating_order,
        "sylow_order": rec.sylow_order,
        "sylow_count": rec.sylow_count,
        "double_transpositions": rec.double_transpositions,
    });
    for (name, ok) in rows {
        suite.push(name, anchor, Verdict::of(ok), evidence.clone(), ms);
    }
    suite.finish()
}

struct ClassRow {
    partition: PartitionOfN,
    formula: u64,
    census: u64,
    centralizer: u64,
}

fn class_rows(group: &FiniteGroup, n: usize) -> Result<Vec<ClassRow>, CliError> {
    let census = cycle_type_census(group);
    PartitionOfN::all(n)
        .into_iter()
        .map(|partition| {
            let ct = partition.cycle_type();
            Ok(ClassRow {
                formula: count_cycle_type(n, &partition)?,
                census: census.get(&ct).copied().unwrap_or(0),
                centralizer: centralizer_order(&partition)?,
                partition,
            })
        })
        .collect()
}

fn class_table(rows: &[ClassRow], n: usize) -> Table {
    let mut out: Vec<Vec<String>> = rows
        .iter()
        .map(|r| vec![r.partition.to_string(), r.formula.to_string(), r.census.to_string(), r.centralizer.to_string()])
        .collect();
    let formula: u64 = rows.iter().map(|r| r.formula).sum();
    let census: u64 = rows.iter().map(|r| r.census).sum();
    out.push(vec!["total".into(), formula.to_string(), census.to_string(), "-".into()]);
    Table {
        title: format!("cycle types of S{n}"),
        columns: vec!["cycle type".into(), "formula".into(), "census".into(), "centralizer".into()],
        rows: out,
    }
}

fn census_checks(suite: &mut Suite, rows: &[ClassRow], n: usize, ms: u64) {
    let anchor = "number of permutations of a given cycle type";
    let mismatches: Vec<String> =
        rows.iter().filter(|r| r.formula != r.census).map(|r| r.partition.to_string()).collect();
    suite.push(
        "formula count equals census for every cycle type",
        anchor,
        Verdict::of(mismatches.is_empty()),
        json!({ "cycle_types": rows.len(), "mismatches": mismatches }),
        ms,
    );
    let fact = factorial(n).unwrap_or(0);
    let total: u64 = rows.iter().map(|r| r.census).sum();
    suite.push(
        format!("class sizes sum to {n}!"),
        anchor,
        Verdict::of(total == fact && rows.iter().map(|r| r.formula).sum::<u64>() == fact),
        json!({ "total": total, "factorial": fact }),
        ms,
    );
}

fn class_group(opts: &Options, n: usize) -> Result<FiniteGroup, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    ensure_cap(opts, factorial(n))?;
    Ok(symmetric_group_with_cap(n, opts.cap)?)
}

pub fn classes(command: &str, opts: &Options, n: usize) -> Outcome {
    let s = class_group(opts, n)?;
    let mut suite = Suite::new(command, opts);
    let start = Instant::now();
    let rows = class_rows(&s, n)?;
    let ms = start.elapsed().as_millis() as u64;
    suite.report.table(class_table(&rows, n));
    census_checks(&mut suite, &rows, n, ms);
    suite.finish()
}

pub fn verify_class_count(command: &str, opts: &Options, n: usize) -> Outcome {
    ensure_degree(opts, n, 1)?;
    let s = class_group(opts, n)?;
    let mut suite = Suite::new(command, opts);
    let start = Instant::now();
    let rows = class_rows(&s, n)?;
    let ms = start.elapsed().as_millis() as u64;
    suite.report.table(class_table(&rows, n));
    census_checks(&mut suite, &rows, n, ms);
    suite.check(format!("|class| * |centralizer| = {n}! for every class"), "order of a centralizer in S_n", || {
        let fact = factorial(n).unwrap_or(0);
        let mut bad = Vec::new();
        for class in s.conjugacy_classes() {
            let g = s.element(class.representative());
            let z = s.centralizer(g)?;
            let formula = centralizer_order(&g.cycle_type().to_partition())?;
            if (class.len() * z.order()) as u64 != fact || z.order() as u64 != formula {
                bad.push(g.cycle_type().to_string());
            }
        }
        Ok((Verdict::of(bad.is_empty()), json!({ "classes": rows.len(), "failures": bad })))
    })?;
    let name = format!("centralizer structure for every g in S{n}");
    let anchor = "structure of the centralizer of a permutation";
    if n > 5 {
        suite.skip(name, anchor, "replayed for n <= 5 only");
    } else {
        suite.check(name, anchor, || {
            let mut failures = Vec::new();
            for g in s.elements() {
                if !verify_centralizer_structure(n, g)?.all_hold() {
                    failures.push(g.to_string());
                }
            }
            Ok((Verdict::of(failures.is_empty()), json!({ "elements": s.order(), "failures": failures })))
        })?;
    }
    suite.finish()
}

/// `S<n>`, `A<n>` or a path to a group file.
pub fn load_group(spec: &str, opts: &Options) -> Result<FiniteGroup, CliError> {
    let named = |prefix: char| spec.strip_prefix(prefix).and_then(|d| d.parse::<usize>().ok()).filter(|&d| d > 0);
    if let Some(n) = named('S') {
        ensure_cap(opts, factorial(n))?;
        return Ok(symmetric_group_with_cap(n, opts.cap)?);
    }
    if let Some(n) = named('A') {
        ensure_cap(opts, factorial(n).map(|f| (f / 2).max(1)))?;
        return Ok(alternating_group_with_cap(n, opts.cap)?);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::Usage(format!("{spec}: not S<n>, A<n> or a readable group file ({e})")))?;
    let file = GroupFile::parse(&text).map_err(|error| CliError::Format { path: spec.into(), error })?;
    file.enumerate(opts.cap).map_err(|e| match e {
        Error::GroupTooLarge { cap } => CliError::Cap { cap, needed: None },
        e => CliError::Engine(e),
    })
}

/// `natural` or `subsets(n,k)`.
pub fn parse_action(spec: &str, degree: usize) -> Result<Option<usize>, CliError> {
    let bad = || CliError::Usage(format!("invalid action {spec:?}: expected natural or subsets(n,k)"));
    if spec == "natural" {
        return Ok(None);
    }
    let inner = spec.strip_prefix("subsets(").and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
    let (n, k) = inner.split_once(',').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let k: usize = k.trim().parse().map_err(|_| bad())?;
    if n != degree {
        return Err(CliError::Usage(format!("action subsets({n},{k}) does not match the group degree {degree}")));
    }
    Ok(Some(k))
}

pub fn blocks(command: &str, opts: &Options, group: &str, action: Option<&str>, k: Option<usize>) -> Outcome {
    let g = load_group(group, opts)?;
    let degree = g.degree();
    let k = match (action, k) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --action or --k, not both".into())),
        (Some(spec), None) => parse_action(spec, degree)?,
        (None, k) => k,
    };
    let action = match k {
        None => Action::natural(g),
        Some(k) if k <= degree && k <= permgrp::subsets::MAX_POINTS => Action::on_subsets(g, k)?,
        Some(k) => return Err(CliError::Usage(format!("subset size {k} exceeds the degree {degree}"))),
    };
    let mut suite = Suite::new(command, opts);
    let start = Instant::now();
    let transitive = action.is_pretransitive();
    let two_transitive = action.is_two_transitive();
    let primitive = action.is_primitive();
    let quasiprimitive = action.is_quasiprimitive();
    let witness = if transitive { action.nontrivial_block()? } else { None };
    let ms = start.elapsed().as_millis() as u64;
    suite.report.property("group", group);
    suite.report.property("order", action.group().order());
    suite.report.property("action", action.descriptor());
    suite.report.property("points", action.points());
    suite.report.property("transitive", transitive);
    suite.report.property("2-transitive", two_transitive);
    suite.report.property("primitive", primitive);
    suite.report.property("quasiprimitive", quasiprimitive);
    suite.report.property("faithful", action.is_faithful());
    suite.report.property("witness block", witness.as_ref().map_or(Value::Null, |b| action.block_label(b).into()));
    match &witness {
        Some(b) => suite.push(
            "witness is a nontrivial block",
            "blocks of an action",
            Verdict::of(action.is_block(b.points()) && 1 < b.len() && b.len() < action.points()),
            json!({ "block": action.block_label(b), "size": b.len() }),
            ms,
        ),
        None => suite.skip("witness is a nontrivial block", "blocks of an action", "no nontrivial block"),
    }
    suite.push(
        "2-transitive implies primitive",
        "2-transitive actions are primitive",
        Verdict::of(!two_transitive || primitive),
        json!({ "two_transitive": two_transitive, "primitive": primitive }),
        ms,
    );
    suite.push(
        "primitive implies quasiprimitive",
        "primitive actions are quasiprimitive",
        Verdict::of(!primitive || quasiprimitive),
        json!({ "primitive": primitive, "quasiprimitive": quasiprimitive }),
        ms,
    );
    let name = "primitive iff point stabilizers are maximal";
    let anchor = "primitivity via maximal stabilizers";
    if transitive && action.points() > 1 {
        suite.check(name, anchor, || {
            let stab = action.stabilizer(0)?;
            let maximal = action.group().is_maximal(&stab)?;
            Ok((Verdict::of(maximal == primitive), json!({ "stabilizer_order": stab.order(), "maximal": maximal })))
        })?;
    } else {
        suite.skip(name, anchor, "needs a transitive action on more than one point");
    }
    suite.finish()
}
