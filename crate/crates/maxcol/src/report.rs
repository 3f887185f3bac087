//! Text and JSON renderings of checker reports.

use std::fmt::Write as _;

use maxcol_core::verify::{E2eReport, GadgetMethod, LemmaReport};
use serde_json::{json, Map, Value};

use crate::prov::problem_name;

fn method_name(m: &GadgetMethod) -> String {
    match m {
        GadgetMethod::Structured => "structured".into(),
        GadgetMethod::Fallback(why) => format!("fallback: {why}"),
    }
}

/// Whether a report came out the way it should: checks are clean, controls
/// are caught.
pub fn lemma_as_expected(r: &LemmaReport) -> bool {
    r.success() != r.control
}

pub fn lemma_text(r: &LemmaReport, timing: bool) -> String {
    let mut out = format!("lemma{}", r.lemma);
    for (name, value) in &r.point {
        write!(out, " {name}={value}").unwrap();
    }
    let kind = if r.control { "control" } else { "check" };
    write!(out, " {kind} mode={} colorings={} violations={}", r.mode, r.colorings, r.violation_count).unwrap();
    if timing {
        if let Some(t) = r.elapsed {
            write!(out, " ms={}", t.as_millis()).unwrap();
        }
    }
    out.push_str(if lemma_as_expected(r) { " ok" } else { " FAILED" });
    for (what, count) in &r.observations {
        write!(out, "\n  {what}: {count}").unwrap();
    }
    for v in &r.violations {
        write!(out, "\n  violation: {v}").unwrap();
    }
    out
}

pub fn lemma_json(r: &LemmaReport, timing: bool) -> Value {
    let point: Map<String, Value> = r.point.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let observations: Vec<Value> = r.observations.iter().map(|(w, c)| json!({"what": w, "count": c})).collect();
    let mut v = json!({
        "lemma": r.lemma,
        "point": point,
        "control": r.control,
        "mode": r.mode,
        "colorings": r.colorings,
        "violation_count": r.violation_count,
        "violations": r.violations,
        "observations": observations,
        "success": r.success(),
        "as_expected": lemma_as_expected(r),
    });
    if timing {
        v["elapsed_ms"] = json!(r.elapsed.map(|t| t.as_millis() as u64));
    }
    v
}

fn set_text(s: &Option<maxcol_core::SolutionSet>) -> String {
    match s {
        None => "-".into(),
        Some(s) => format!("{{{}}}", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
    }
}

pub fn e2e_text(r: &E2eReport) -> String {
    let mut out = format!(
        "e2e-{} n={} k={} tree={} r={} reduced={} general={} oracle={} oracle_set={} extracted={} method={} vectors={} vertices={} components={}",
        problem_name(r.problem),
        r.n,
        r.k,
        r.tree,
        r.color_bound.map_or("-".into(), |c| c.to_string()),
        yes_no(r.reduced_yes),
        yes_no(r.general_yes),
        yes_no(r.oracle_yes),
        set_text(&r.oracle_solution),
        set_text(&r.extracted),
        method_name(&r.method),
        r.vectors_checked,
        r.vertices,
        r.components,
    );
    out.push_str(if r.success() { " ok" } else { " FAILED" });
    for v in &r.violations {
        write!(out, "\n  violation: {v}").unwrap();
    }
    out
}

pub fn e2e_json(r: &E2eReport) -> Value {
    json!({
        "problem": problem_name(r.problem),
        "n": r.n,
        "k": r.k,
        "tree": r.tree,
        "color_bound": r.color_bound,
        "reduced_yes": r.reduced_yes,
        "general_yes": r.general_yes,
        "oracle_yes": r.oracle_yes,
        "oracle_solution": r.oracle_solution,
        "extracted": r.extracted,
        "method": method_name(&r.method),
        "vectors_checked": r.vectors_checked,
        "vertices": r.vertices,
        "components": r.components,
        "violations": r.violations,
        "success": r.success(),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
