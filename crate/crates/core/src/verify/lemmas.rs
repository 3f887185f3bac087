//! Exhaustive checkers for the four gadget lemmas on small parameter points,
//! each with a deliberately broken variant as a negative control.
//!
//! Classes are named by the level of their weight: `S_l` is the class whose
//! weight lies at level `l`, and `R_ell = S_{4k+ell}`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;
use core::time::Duration;

use crate::coloring::{class_weights, Coloring};
use crate::error::Result;
use crate::forest::{VertexId, WeightedForest};
use crate::gadgets::{self, GadgetParams};
use crate::solvers::{decide_budget, enumerate_colorings, sigma_min};
use crate::weight::ScaledWeight;

use super::structured::StructuredSolver;

const KEPT_VIOLATIONS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: u8,
    /// Parameter point, e.g. `[("k", 1), ("n", 2), ("i", 3)]`.
    pub point: Vec<(&'static str, usize)>,
    /// Whether the run was a negative control.
    pub control: bool,
    /// `"exhaustive"` or `"census"`.
    pub mode: &'static str,
    pub colorings: u64,
    pub violation_count: u64,
    /// The first few violations, described.
    pub violations: Vec<String>,
    /// Named tallies (branch counts and the like).
    pub observations: Vec<(String, u64)>,
    /// Filled in by callers that have a clock.
    pub elapsed: Option<Duration>,
}

impl LemmaReport {
    fn new(lemma: u8, point: Vec<(&'static str, usize)>, control: bool, mode: &'static str) -> Self {
        LemmaReport {
            lemma,
            point,
            control,
            mode,
            colorings: 0,
            violation_count: 0,
            violations: Vec::new(),
            observations: Vec::new(),
            elapsed: None,
        }
    }

    pub fn success(&self) -> bool {
        self.violation_count == 0
    }

    fn violation(&mut self, msg: String) {
        self.violation_count += 1;
        if self.violations.len() < KEPT_VIOLATIONS {
            self.violations.push(msg);
        }
    }

    fn observe(&mut self, name: impl Into<String>, count: u64) {
        self.observations.push((name.into(), count));
    }
}

fn host(params: &GadgetParams) -> WeightedForest {
    WeightedForest::new(params.denominator().clone()).expect("positive denominator")
}

/// Level of every class weight (`None` for empty classes).
fn class_levels(params: &GadgetParams, forest: &WeightedForest, c: &Coloring) -> Vec<Option<usize>> {
    class_weights(forest, c)
        .expect("enumerated colorings are total")
        .iter()
        .map(|w| if w.is_zero() { None } else { params.classify(w).map(|x| x.level) })
        .collect()
}

fn level_name(params: &GadgetParams, level: Option<usize>) -> String {
    match level {
        Some(l) if l >= 4 * params.k() => format!("R_{}", l - 4 * params.k()),
        Some(l) => format!("S_{l}"),
        None => "?".into(),
    }
}

/// Binomial tree checks: every vertex of weight `w_l^0` lies in one class and
/// at most one class sits at level `l`.
fn lemma1_on(params: &GadgetParams, forest: &WeightedForest, top: usize, report: &mut LemmaReport) {
    let budget = params.threshold();
    let by_level: Vec<Vec<VertexId>> = (0..=top)
        .map(|l| {
            let w = params.scheme_weight(l, 0);
            (0..forest.vertex_count()).filter(|&v| forest.weight(v) == &w).collect()
        })
        .collect();
    let mut found = 0u64;
    let mut bad = Vec::new();
    enumerate_colorings(forest, &budget, |c, _| {
        found += 1;
        let levels = class_levels(params, forest, c);
        for (l, vs) in by_level.iter().enumerate() {
            let classes: BTreeSet<usize> = vs.iter().map(|&v| c.color(v)).collect();
            if classes.len() > 1 {
                bad.push(format!("weight w_{l}^0 spread over {} classes", classes.len()));
            }
            let at_level = levels.iter().filter(|&&x| x == Some(l)).count();
            if at_level > 1 {
                bad.push(format!("{at_level} classes at level {l}"));
            }
        }
        ControlFlow::Continue(())
    });
    report.colorings = found;
    for b in bad {
        report.violation(b);
    }
    if found == 0 {
        report.violation("no coloring within the budget: the statement holds only vacuously".into());
    }
}

/// One-class-per-level property of a standalone `B_i`.
pub fn check_lemma_bin(k: usize, n: usize, i: usize) -> Result<LemmaReport> {
    let params = GadgetParams::new(n, k)?;
    let mut forest = host(&params);
    gadgets::build_binomial(&params, &mut forest, i)?;
    let mut report = LemmaReport::new(1, vec![("k", k), ("n", n), ("i", i)], false, "exhaustive");
    lemma1_on(&params, &forest, i, &mut report);
    Ok(report)
}

/// The same check on a broken `B_i`. With `structural` the `B_1` child of the root
/// loses its leaf (needs `i >= 3`); otherwise the root weight is raised to
/// `w_0^0`.
pub fn control_lemma_bin(k: usize, n: usize, i: usize, structural: bool) -> Result<LemmaReport> {
    let params = GadgetParams::new(n, k)?;
    let mut forest = host(&params);
    let h = gadgets::build_binomial(&params, &mut forest, i)?;
    let mut report = LemmaReport::new(1, vec![("k", k), ("n", n), ("i", i)], true, "exhaustive");
    if structural {
        if i < 3 {
            return Err(crate::Error::invalid("structural corruption needs i >= 3"));
        }
        let mut broken = host(&params);
        let root = broken.add_vertex(params.scheme_weight(i, 0));
        for j in 0..i {
            let child = if j == 1 {
                broken.add_vertex(params.scheme_weight(1, 0))
            } else {
                gadgets::binomial(&params, &mut broken, j)
            };
            broken.add_edge(root, child)?;
        }
        forest = broken;
    } else {
        forest.set_weight(h.root, params.scheme_weight(0, 0));
    }
    lemma1_on(&params, &forest, i, &mut report);
    Ok(report)
}

fn lemma2_on(
    params: &GadgetParams,
    forest: &WeightedForest,
    u: VertexId,
    v: VertexId,
    i: usize,
    report: &mut LemmaReport,
) {
    let r0 = 4 * params.k();
    let (mut first, mut second, mut found) = (0u64, 0u64, 0u64);
    let mut bad = Vec::new();
    enumerate_colorings(forest, &params.threshold(), |c, _| {
        found += 1;
        let levels = class_levels(params, forest, c);
        let (lu, lv) = (levels[c.color(u)], levels[c.color(v)]);
        let b1 = lu == Some(r0);
        let b2 = i >= 1 && lv == Some(i) && lu == Some(i - 1);
        first += b1 as u64;
        second += b2 as u64;
        if !b1 && !b2 {
            bad.push(format!("u in {}, v in {}", level_name(params, lu), level_name(params, lv)));
        }
        ControlFlow::Continue(())
    });
    report.colorings = found;
    if found == 0 {
        report.observe("vacuous: no coloring within the budget", 1);
    }
    report.observe("u in R_0", first);
    report.observe("v in S_i and u in S_{i-1}", second);
    for b in bad {
        report.violation(b);
    }
}

fn aux_host(params: &GadgetParams, i: usize, j: usize, skip: Option<usize>) -> (WeightedForest, VertexId, VertexId) {
    let mut forest = host(params);
    gadgets::binomial(params, &mut forest, params.level_count() - 1);
    let h = gadgets::auxiliary_without(params, &mut forest, i, j, skip);
    let v = h.get(gadgets::Anchor::Subroot).expect("subroot");
    (forest, h.root, v)
}

/// Root/subroot branches of `A_i^j`, hosted next to `B_{4k+3}`.
pub fn check_lemma_aux(k: usize, n: usize, i: usize, j: usize) -> Result<LemmaReport> {
    let params = GadgetParams::new(n, k)?;
    let mut probe = host(&params);
    gadgets::build_auxiliary(&params, &mut probe, i, j)?;
    let (forest, u, v) = aux_host(&params, i, j, None);
    let mut report = LemmaReport::new(2, vec![("k", k), ("n", n), ("i", i), ("j", j)], false, "exhaustive");
    lemma2_on(&params, &forest, u, v, i, &mut report);
    Ok(report)
}

/// The branch check with one binomial tree under the root left out: `B_1` for
/// `i <= 1` (for `i = 1` the `B_0` is absent by definition), else `B_0`.
pub fn control_lemma_aux(k: usize, n: usize, i: usize, j: usize) -> Result<LemmaReport> {
    let params = GadgetParams::new(n, k)?;
    let mut probe = host(&params);
    gadgets::build_auxiliary(&params, &mut probe, i, j)?;
    let skip = if i <= 1 { 1 } else { 0 };
    let (forest, u, v) = aux_host(&params, i, j, Some(skip));
    let mut report = LemmaReport::new(2, vec![("k", k), ("n", n), ("i", i), ("j", j)], true, "exhaustive");
    lemma2_on(&params, &forest, u, v, i, &mut report);
    Ok(report)
}

/// Class levels of the two AND inputs in one coloring.
type InputLevels = (Option<usize>, Option<usize>);

fn and_host(params: &GadgetParams, flavor: usize, guarded: bool) -> Result<(WeightedForest, [VertexId; 3])> {
    let mut forest = host(params);
    gadgets::binomial(params, &mut forest, params.level_count() - 1);
    let mut stub = || {
        let s = forest.add_vertex(params.special(1));
        gadgets::hang(params, &mut forest, s, 0..4 * params.k());
        s
    };
    let (i1, i2) = (stub(), stub());
    let [_, _, _, out] = gadgets::and_stage(params, &mut forest, i1, i2, flavor, guarded)?;
    Ok((forest, [i1, i2, out]))
}

fn lemma3_on(
    params: &GadgetParams,
    forest: &WeightedForest,
    [i1, i2, out]: [VertexId; 3],
    flavor: usize,
    report: &mut LemmaReport,
) {
    let r = |ell: usize| Some(4 * params.k() + ell);
    let mut outcomes: BTreeMap<InputLevels, BTreeSet<Option<usize>>> = BTreeMap::new();
    let mut counts: BTreeMap<(Option<usize>, Option<usize>), u64> = BTreeMap::new();
    let mut found = 0u64;
    let mut bad = Vec::new();
    enumerate_colorings(forest, &params.threshold(), |c, _| {
        found += 1;
        let levels = class_levels(params, forest, c);
        let key = (levels[c.color(i1)], levels[c.color(i2)]);
        let lo = levels[c.color(out)];
        outcomes.entry(key).or_default().insert(lo);
        *counts.entry(key).or_default() += 1;
        if key == (r(flavor), r(flavor)) && lo != r(flavor) {
            bad.push(format!("both inputs in R_{flavor} but O in {}", level_name(params, lo)));
        }
        ControlFlow::Continue(())
    });
    report.colorings = found;
    for b in bad {
        report.violation(b);
    }
    for a in 0..2 {
        for b in 0..2 {
            let key = (r(a), r(b));
            let seen = outcomes.get(&key).cloned().unwrap_or_default();
            report.observe(format!("inputs (R_{a}, R_{b})"), counts.get(&key).copied().unwrap_or(0));
            if a == flavor && b == flavor {
                if seen.is_empty() {
                    report.violation(format!("forcing combination (R_{a}, R_{b}) never occurs"));
                }
                continue;
            }
            for o in 0..2 {
                if !seen.contains(&r(o)) {
                    report.violation(format!("inputs (R_{a}, R_{b}): no coloring puts O in R_{o}"));
                }
            }
        }
    }
}

/// AND behaviour on `B_{4k+3}` plus two `W_1` input stubs (each carrying
/// `B_0..B_{4k-1}`) joined by an `R_flavor`-AND gadget.
pub fn check_lemma_and(k: usize, n: usize, flavor: usize) -> Result<LemmaReport> {
    let params = GadgetParams::new(n, k)?;
    if flavor > 1 {
        return Err(crate::Error::invalid("AND flavor must be 0 or 1"));
    }
    let (forest, anchors) = and_host(&params, flavor, true)?;
    let mut report = LemmaReport::new(3, vec![("k", k), ("n", n), ("flavor", flavor)], false, "exhaustive");
    lemma3_on(&params, &forest, anchors, flavor, &mut report);
    Ok(report)
}

/// The AND check with the `B_{4k+2}` under `v3` left out.
pub fn control_lemma_and(k: usize, n: usize, flavor: usize) -> Result<LemmaReport> {
    let params = GadgetParams::new(n, k)?;
    if flavor > 1 {
        return Err(crate::Error::invalid("AND flavor must be 0 or 1"));
    }
    let (forest, anchors) = and_host(&params, flavor, false)?;
    let mut report = LemmaReport::new(3, vec![("k", k), ("n", n), ("flavor", flavor)], true, "exhaustive");
    lemma3_on(&params, &forest, anchors, flavor, &mut report);
    Ok(report)
}

fn lemma4_on(
    params: &GadgetParams,
    forest: &WeightedForest,
    roots: &[((usize, usize), VertexId)],
    report: &mut LemmaReport,
) {
    let budget = params.threshold();
    let (r0, r1) = (4 * params.k(), 4 * params.k() + 1);
    let mut solver = match StructuredSolver::new(forest, params, 1, None) {
        Ok(s) => s,
        Err(e) => {
            report.violation(format!("structured solver rejected the forest: {e}"));
            return;
        }
    };
    let probes: Vec<VertexId> = roots.iter().map(|&(_, v)| v).collect();
    let census = match solver.census(&budget, &probes) {
        Ok(c) => c,
        Err(e) => {
            report.violation(e);
            return;
        }
    };
    report.colorings = census.len() as u64;
    let mut chosen: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for entry in &census {
        if entry.weight != budget {
            report.violation(format!("offsets {:?} give weight {} below M", entry.offsets.0, entry.weight));
        }
        for i in 0..params.k() {
            let mut selected = Vec::new();
            for (((ti, j), _), classes) in roots.iter().zip(&entry.probe_classes) {
                if *ti != i {
                    continue;
                }
                match classes[..] {
                    [c] if c == r0 => selected.push(*j),
                    [c] if c == r1 => {}
                    _ => report.violation(format!(
                        "offsets {:?}: root of T_{i}^{j} can take classes {:?}",
                        entry.offsets.0, classes
                    )),
                }
            }
            if selected.len() != 1 {
                report.violation(format!(
                    "offsets {:?}: {} roots of level {i} forced into R_0",
                    entry.offsets.0,
                    selected.len()
                ));
            } else {
                *chosen.entry((i, selected[0])).or_default() += 1;
            }
        }
    }
    if census.is_empty() {
        report.violation("no coloring within the budget".into());
    }
    for ((i, j), count) in chosen {
        report.observe(format!("T_{i}^{j} root in R_0"), count);
    }
    let below = ScaledWeight::new(budget.numerator() - 1u32);
    if decide_budget(forest, &below, None).is_feasible() {
        report.violation("a coloring of weight M - 1 exists".into());
    }
    let general = sigma_min(forest, Some(&budget));
    let structured = solver.solve(Some(&budget), None).map(|(r, _)| r);
    match structured {
        Some(s) if s.weight() == general.weight() => {}
        other => report.violation(format!(
            "structured optimum {:?} differs from the general solver's {:?}",
            other.as_ref().and_then(|s| s.weight()),
            general.weight()
        )),
    }
}

/// Root classes of vertex trees: `B_{4k+3}` and every `T_i^j`, through the structured census.
pub fn check_lemma_vtree(k: usize, n: usize) -> Result<LemmaReport> {
    let params = GadgetParams::new(n, k)?;
    let mut forest = host(&params);
    gadgets::binomial(&params, &mut forest, params.level_count() - 1);
    let mut roots = Vec::new();
    for i in 0..k {
        for j in 0..n {
            roots.push(((i, j), gadgets::build_vertex_tree(&params, &mut forest, i, j)?.root));
        }
    }
    let mut report = LemmaReport::new(4, vec![("k", k), ("n", n)], false, "census");
    lemma4_on(&params, &forest, &roots, &mut report);
    Ok(report)
}

/// The vertex-tree check with `T_0^0` built twice in place of `T_0^1`.
pub fn control_lemma_vtree(k: usize, n: usize) -> Result<LemmaReport> {
    let params = GadgetParams::new(n, k)?;
    let mut forest = host(&params);
    gadgets::binomial(&params, &mut forest, params.level_count() - 1);
    let mut roots = Vec::new();
    for i in 0..k {
        for j in 0..n {
            let built = if i == 0 && j == 1 { 0 } else { j };
            roots.push(((i, j), gadgets::build_vertex_tree(&params, &mut forest, i, built)?.root));
        }
    }
    let mut report = LemmaReport::new(4, vec![("k", k), ("n", n)], true, "census");
    lemma4_on(&params, &forest, &roots, &mut report);
    Ok(report)
}
