//! End-to-end agreement between a reduction's threshold decision and a
//! brute-force oracle on the source graph.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::coloring::{coloring_weight, is_proper, Coloring};
use crate::error::Result;
use crate::graph::SourceGraph;
use crate::reductions::{
    extract_solution, forest_to_tree, reduce_ds, reduce_is, witness_coloring, Problem, ReductionInstance, SolutionSet,
};
use crate::solvers::{decide_budget, max_is, min_ds};

use super::structured::{decide_gadget, GadgetMethod};

#[derive(Clone, Debug)]
pub struct E2eReport {
    pub problem: Problem,
    pub n: usize,
    pub k: usize,
    /// Whether the decision ran on the forest-to-tree transform.
    pub tree: bool,
    pub color_bound: Option<usize>,
    pub reduced_yes: bool,
    /// Decision of the general tuple search on the same instance.
    pub general_yes: bool,
    pub oracle_yes: bool,
    pub oracle_solution: Option<SolutionSet>,
    pub extracted: Option<SolutionSet>,
    pub method: GadgetMethod,
    pub vectors_checked: usize,
    pub vertices: usize,
    pub components: usize,
    pub violations: Vec<String>,
}

impl E2eReport {
    pub fn success(&self) -> bool {
        self.violations.is_empty()
    }
}

fn solves(problem: Problem, graph: &SourceGraph, k: usize, z: &SolutionSet) -> bool {
    match problem {
        Problem::IndependentSet => z.len() == k && graph.is_independent(z),
        Problem::DominatingSet => z.len() <= k && graph.is_dominating(z),
    }
}

fn check_coloring(instance: &ReductionInstance, c: &Coloring, exact: bool, what: &str, out: &mut Vec<String>) {
    let f = &instance.forest;
    if !is_proper(f, c).unwrap_or(false) {
        out.push(format!("{what} is not proper"));
        return;
    }
    let w = coloring_weight(f, c).expect("total coloring");
    if w > instance.threshold || (exact && w != instance.threshold) {
        out.push(format!("{what} weighs {w}, threshold {}", instance.threshold));
    }
    if let Some(r) = instance.color_bound {
        if c.nonempty_class_count() > r {
            out.push(format!("{what} uses {} classes, bound {r}", c.nonempty_class_count()));
        }
    }
}

/// Reduction decision versus brute force on `(G, k)`.
pub fn e2e_check(problem: Problem, graph: &SourceGraph, k: usize) -> Result<E2eReport> {
    run(problem, graph, k, false)
}

/// Same, deciding on the single tree produced by the forest-to-tree
/// transform; also checks that a tree witness restricted to the original
/// vertices fits the original threshold.
pub fn e2e_check_tree(problem: Problem, graph: &SourceGraph, k: usize) -> Result<E2eReport> {
    run(problem, graph, k, true)
}

fn run(problem: Problem, graph: &SourceGraph, k: usize, tree: bool) -> Result<E2eReport> {
    let base = match problem {
        Problem::IndependentSet => reduce_is(graph, k)?,
        Problem::DominatingSet => reduce_ds(graph, k)?,
    };
    let inst = if tree { forest_to_tree(&base)? } else { base.clone() };
    let mut violations = Vec::new();
    if tree && inst.forest.components().len() != 1 {
        violations.push("transform left several components".into());
    }

    let decision = decide_gadget(&inst, &inst.threshold);
    let mut extracted = None;
    if let Some(sol) = decision.result.solution() {
        check_coloring(&inst, &sol.witness, false, "decision witness", &mut violations);
        match extract_solution(&inst, &sol.witness) {
            Ok(z) => {
                if !solves(problem, graph, k, &z) {
                    violations.push(format!("extracted set {z:?} does not solve the source instance"));
                }
                extracted = Some(z);
            }
            Err(e) => violations.push(format!("extraction failed: {e}")),
        }
        if tree {
            // original weights are even over 2D, so a restriction within
            // 2M + 1 is within 2M, i.e. within M on the original forest
            let old = sol.witness.truncated(base.forest.vertex_count());
            let halves = coloring_weight(&base.forest.rescaled(2), &old).expect("total");
            if halves.numerator().bit(0) || halves > inst.threshold {
                violations.push(format!("restricted tree witness weighs {halves} half-units"));
            }
            check_coloring(&base, &old.canonical(), false, "restricted tree witness", &mut violations);
        }
    }

    let general = decide_budget(&inst.forest, &inst.threshold, inst.color_bound);
    if let Some(sol) = general.solution() {
        check_coloring(&inst, &sol.witness, false, "general solver witness", &mut violations);
    }
    if general.is_feasible() != decision.result.is_feasible() {
        violations.push("structured and general solvers disagree".into());
    }

    let oracle = match problem {
        Problem::IndependentSet => max_is(graph, k),
        Problem::DominatingSet => min_ds(graph, k),
    };
    let reduced_yes = decision.result.is_feasible();
    if reduced_yes != oracle.is_some() {
        violations.push(format!(
            "reduction says {}, oracle says {} (oracle certificate {:?}, extracted {:?})",
            yes_no(reduced_yes),
            yes_no(oracle.is_some()),
            oracle,
            extracted
        ));
    }
    if let Some(z) = &oracle {
        let padded = pad(z, k, graph.vertex_count());
        match witness_coloring(&inst, &padded) {
            Ok(c) => {
                check_coloring(&inst, &c, true, "solution witness", &mut violations);
                match extract_solution(&inst, &c) {
                    Ok(back) if back == padded => {}
                    Ok(back) => violations.push(format!("round trip gave {back:?} for {padded:?}")),
                    Err(e) => violations.push(format!("round trip extraction failed: {e}")),
                }
            }
            Err(e) => violations.push(format!("witness construction failed: {e}")),
        }
    }

    Ok(E2eReport {
        problem,
        n: graph.vertex_count(),
        k,
        tree,
        color_bound: inst.color_bound,
        reduced_yes,
        general_yes: general.is_feasible(),
        oracle_yes: oracle.is_some(),
        oracle_solution: oracle,
        extracted,
        method: decision.method,
        vectors_checked: decision.vectors_checked,
        vertices: inst.forest.vertex_count(),
        components: inst.forest.components().len(),
        violations,
    })
}

/// Grows a dominating set to exactly `k` vertices (supersets still dominate).
fn pad(z: &SolutionSet, k: usize, n: usize) -> SolutionSet {
    let mut out = z.clone();
    for v in 0..n {
        if out.len() >= k {
            break;
        }
        out.insert(v);
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
