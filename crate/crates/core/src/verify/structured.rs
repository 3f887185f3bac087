//! Structured solver for forests built from the gadget weight scheme.
//!
//! Every such forest contains a copy of `B_{4k+3}` (possibly hanging off the
//! connector of a transformed instance). An induction over the binomial
//! recursion shows that a coloring of `B_i` either has exactly one class
//! whose heaviest vertex sits at each level `0..=i`, or costs at least
//! `Σ_{l<=i} w_l^0 + w_i^0`. The slack of every budget this solver handles in
//! structured mode is below `W_3 = w_{4k+3}^0`, and every extra class or
//! class promoted to a heavier level costs at least `W_3`, so any coloring
//! within budget has exactly one class per level (plus, after the
//! forest-to-tree transform, possibly a class holding only the connector).
//! Such colorings are described by one offset per level, and their weight is
//! the offset-0 base plus the offset sum. The search walks offset vectors by
//! increasing weight and decides each with per-component list-coloring
//! checks, memoized per isomorphism class as monotone sets.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::canon::{Canon, TreeKey};
use crate::coloring::{class_weights, coloring_weight, Coloring};
use crate::forest::{VertexId, WeightedForest};
use crate::gadgets::{self, GadgetParams};
use crate::listcolor::{self, Allowed, Rooted};
use crate::reductions::{descale, ReductionInstance};
use crate::solvers::{self, Solution, SolveResult, WeightTuple};
use crate::weight::ScaledWeight;

/// One offset per level, `j_l` for class `l`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OffsetVector(pub Vec<usize>);

impl OffsetVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Σ_l w_l^{j_l}` over the scheme's denominator.
    pub fn weight(&self, params: &GadgetParams) -> ScaledWeight {
        self.0.iter().enumerate().map(|(l, &j)| params.scheme_weight(l, j)).sum()
    }
}

/// How a structured call reached its answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetMethod {
    Structured,
    /// The general tuple search answered; the reason is kept for reporting.
    Fallback(String),
}

#[derive(Clone, Debug)]
pub struct GadgetSolve {
    pub result: SolveResult,
    pub method: GadgetMethod,
    /// Offset vectors decided (structured mode only).
    pub vectors_checked: usize,
    pub offsets: Option<OffsetVector>,
}

/// One feasible offset vector together with, for each probe vertex, the
/// classes it takes across the colorings that vector admits.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub offsets: OffsetVector,
    pub hub_class: bool,
    pub weight: ScaledWeight,
    pub probe_classes: Vec<Vec<usize>>,
}

struct Component {
    rooted: Rooted,
    /// Level and offset of each local position; `None` for the connector.
    slots: Vec<Option<(usize, usize)>>,
    shape: usize,
    has_hub: bool,
}

/// Monotone feasibility memo of one isomorphism class.
#[derive(Default)]
struct Memo {
    feasible: Vec<Vec<usize>>,
    infeasible: Vec<Vec<usize>>,
}

pub struct StructuredSolver<'a> {
    forest: &'a WeightedForest,
    params: GadgetParams,
    scale: u32,
    hub: Option<VertexId>,
    components: Vec<Component>,
    /// Owning component and local position of every vertex.
    place: Vec<(usize, usize)>,
    /// Levels whose offset may vary, with their candidate offsets (ascending, 0 first).
    variables: Vec<(usize, Vec<usize>)>,
    /// Per shape: for each variable, the offsets its vertices use.
    projections: Vec<Vec<Vec<usize>>>,
    memo: Vec<Memo>,
    checked: usize,
    use_memo: bool,
}

impl<'a> StructuredSolver<'a> {
    /// Fails with a reason when the forest is not a scheme forest.
    pub fn new(
        forest: &'a WeightedForest,
        params: &GadgetParams,
        scale: u32,
        hub: Option<VertexId>,
    ) -> Result<Self, String> {
        if forest.denominator() != &(params.denominator() * scale) {
            return Err("denominator does not match the weight scheme".into());
        }
        if let Some(h) = hub {
            if h >= forest.vertex_count() || forest.weight(h) != &ScaledWeight::from(1) || scale < 2 {
                return Err("connector vertex does not carry the half-unit weight".into());
            }
        }
        let levels = params.level_count();
        let mut lw = vec![None; forest.vertex_count()];
        for (v, w) in forest.weights().iter().enumerate() {
            if Some(v) == hub {
                continue;
            }
            if (w.numerator() % scale) != num_bigint::BigUint::from(0u32) {
                return Err(alloc::format!("weight of vertex {v} is not a scheme weight"));
            }
            match params.classify(&descale(w, scale)) {
                Some(x) => lw[v] = Some((x.level, x.offset)),
                None => return Err(alloc::format!("weight of vertex {v} is not a scheme weight")),
            }
        }

        // components of the forest without the connector, for the
        // binomial-tree check
        let mut canon = Canon::new();
        let mut reference = WeightedForest::new(params.denominator().clone()).expect("positive");
        gadgets::build_binomial(params, &mut reference, levels - 1).expect("top level");
        let reference = reference.rescaled(scale);
        let all: Vec<VertexId> = (0..reference.vertex_count()).collect();
        let b_key = canon.key(&reference, &all, None);
        let pieces = pieces_without(forest, hub);
        if !pieces.iter().any(|p| p.len() == all.len() && canon.key(forest, p, hub) == b_key) {
            return Err(alloc::format!("no component is a copy of B_{}", levels - 1));
        }

        let mut offsets_at: Vec<Vec<usize>> = vec![vec![0]; levels];
        for &(l, j) in lw.iter().flatten() {
            offsets_at[l].push(j);
        }
        let variables: Vec<(usize, Vec<usize>)> = offsets_at
            .into_iter()
            .enumerate()
            .filter_map(|(l, mut o)| {
                o.sort_unstable();
                o.dedup();
                (o.len() > 1).then_some((l, o))
            })
            .collect();

        let mut shapes: BTreeMap<TreeKey, usize> = BTreeMap::new();
        let mut components = Vec::new();
        let mut place = vec![(0, 0); forest.vertex_count()];
        let mut projections = Vec::new();
        for comp in forest.components() {
            let has_hub = hub.is_some_and(|h| comp.contains(&h));
            let key = canon.key(forest, &comp, None);
            let next = shapes.len();
            let shape = if has_hub { usize::MAX } else { *shapes.entry(key).or_insert(next) };
            let rooted = Rooted::component(forest, comp[0]);
            let slots: Vec<_> = rooted.order.iter().map(|&v| lw[v]).collect();
            for (i, &v) in rooted.order.iter().enumerate() {
                place[v] = (components.len(), i);
            }
            if shape != usize::MAX && shape == projections.len() {
                projections.push(project_offsets(&variables, &slots));
            }
            components.push(Component { rooted, slots, shape, has_hub });
        }
        let memo = (0..projections.len()).map(|_| Memo::default()).collect();
        Ok(StructuredSolver {
            forest,
            params: params.clone(),
            scale,
            hub,
            components,
            place,
            variables,
            projections,
            memo,
            checked: 0,
            use_memo: true,
        })
    }

    /// For an instance built by the reductions module.
    pub fn for_instance(instance: &'a ReductionInstance) -> Result<Self, String> {
        Self::new(&instance.forest, &instance.params, instance.scale, instance.hub)
    }

    pub fn vectors_checked(&self) -> usize {
        self.checked
    }

    /// Disables the feasibility memo (for cross-checking it).
    pub fn without_memo(mut self) -> Self {
        self.use_memo = false;
        self
    }

    fn levels(&self) -> usize {
        self.params.level_count()
    }

    /// `s · Σ_l w_l^0`: weight of the all-zero vector in forest units.
    pub fn base(&self) -> ScaledWeight {
        self.params.base_sum().rescaled(self.scale)
    }

    /// Extra cost (above the base) from which structured reasoning no longer
    /// applies: `s · W_3`.
    pub fn window(&self) -> usize {
        self.scale as usize * 2 * self.params.n() * self.params.k()
    }

    fn full_vector(&self, values: &[usize]) -> OffsetVector {
        let mut v = vec![0; self.levels()];
        for (&(l, _), &j) in self.variables.iter().zip(values) {
            v[l] = j;
        }
        OffsetVector(v)
    }

    fn lists(&self, comp: &Component, full: &OffsetVector, hub_class: bool) -> Vec<Allowed> {
        let levels = self.levels() as u32;
        comp.slots
            .iter()
            .map(|s| match *s {
                Some((l, j)) => Allowed::prefix(l as u32 + (j <= full.0[l]) as u32),
                None => Allowed::prefix(levels + hub_class as u32),
            })
            .collect()
    }

    fn component_feasible(&mut self, c: usize, values: &[usize], full: &OffsetVector, hub_class: bool) -> bool {
        let comp = &self.components[c];
        if comp.has_hub || !self.use_memo {
            return listcolor::is_feasible(&comp.rooted, &self.lists(comp, full, hub_class));
        }
        let shape = comp.shape;
        let point: Vec<usize> = self.projections[shape]
            .iter()
            .zip(values)
            .map(|(used, &j)| used.iter().copied().filter(|&o| o <= j).max().unwrap_or(0))
            .collect();
        let memo = &self.memo[shape];
        if memo.feasible.iter().any(|f| f.iter().zip(&point).all(|(a, b)| a <= b)) {
            return true;
        }
        if memo.infeasible.iter().any(|f| f.iter().zip(&point).all(|(a, b)| a >= b)) {
            return false;
        }
        let ok = listcolor::is_feasible(&comp.rooted, &self.lists(comp, full, hub_class));
        let memo = &mut self.memo[shape];
        if ok {
            memo.feasible.push(point);
        } else {
            memo.infeasible.push(point);
        }
        ok
    }

    /// Decides one vector over all components.
    pub fn feasible(&mut self, full: &OffsetVector, hub_class: bool) -> bool {
        self.checked += 1;
        let values: Vec<usize> = self.variables.iter().map(|&(l, _)| full.0[l]).collect();
        (0..self.components.len()).all(|c| self.component_feasible(c, &values, full, hub_class))
    }

    /// Visits the vectors with extra cost `<= max_extra` (and below the
    /// window) in order of extra cost, then lexicographically, with the
    /// connector class tried second.
    fn walk<F>(&mut self, max_extra: usize, allow_hub_class: bool, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&mut Self, OffsetVector, bool) -> ControlFlow<()>,
    {
        let s = self.scale as usize;
        let hubs: &[bool] = if allow_hub_class && self.hub.is_some() { &[false, true] } else { &[false] };
        let cands: Vec<Vec<usize>> = self.variables.iter().map(|(_, o)| o.clone()).collect();
        for extra in 0..=max_extra.min(self.window() - 1) {
            for &h in hubs {
                let rest = extra - (h as usize).min(extra);
                if (h && extra == 0) || rest % s != 0 {
                    continue;
                }
                let mut found = Vec::new();
                vectors_with_total(&cands, rest / s, &mut Vec::new(), &mut found);
                for values in found {
                    let full = self.full_vector(&values);
                    visit(self, full, h)?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Minimum weight coloring with at most `r` classes (any number if
    /// `None`) and weight `<= budget` (if given), or `None` when the answer
    /// lies outside what structured reasoning covers.
    pub fn solve(
        &mut self,
        budget: Option<&ScaledWeight>,
        r: Option<usize>,
    ) -> Option<(SolveResult, Option<OffsetVector>)> {
        let base = self.base();
        let levels = self.levels();
        let max_extra = match budget {
            Some(b) if *b < base => return Some((SolveResult::Infeasible, None)),
            Some(b) => usize::try_from(b.numerator() - base.numerator()).unwrap_or(usize::MAX),
            None => usize::MAX,
        };
        if r.is_some_and(|r| r < levels) {
            return None;
        }
        let allow_hub = r.is_none_or(|r| r > levels);
        let mut best = None;
        let _ = self.walk(max_extra, allow_hub, |me, full, h| {
            if me.feasible(&full, h) {
                best = Some((full, h));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        match best {
            Some((full, h)) => {
                let sol = self.solution(&full, h);
                Some((SolveResult::Feasible(sol), Some(full)))
            }
            None if max_extra < self.window() => Some((SolveResult::Infeasible, None)),
            None => None,
        }
    }

    /// The witness for a feasible vector: class `l` per level, connector class last.
    pub fn coloring(&self, full: &OffsetVector, hub_class: bool) -> Option<Coloring> {
        let mut assignment = vec![0usize; self.forest.vertex_count()];
        for comp in &self.components {
            let lists = self.lists(comp, full, hub_class);
            let states = listcolor::solve(&comp.rooted, &lists)?;
            let local = listcolor::witness(&comp.rooted, &lists, &states);
            for (i, &c) in local.iter().enumerate() {
                assignment[comp.rooted.order[i]] = c as usize;
            }
        }
        if hub_class {
            assignment[self.hub.expect("connector class needs a connector")] = self.levels();
        }
        Coloring::new(assignment, self.levels() + hub_class as usize).ok()
    }

    fn solution(&self, full: &OffsetVector, hub_class: bool) -> Solution {
        let witness = self.coloring(full, hub_class).expect("vector was checked feasible");
        let weight = coloring_weight(self.forest, &witness).expect("total coloring");
        let mut values = class_weights(self.forest, &witness).expect("total coloring");
        values.sort_unstable_by(|a, b| b.cmp(a));
        Solution { weight, tuple: WeightTuple::new(values).expect("sorted"), witness }
    }

    /// All feasible vectors of weight `<= budget` (which must lie inside the
    /// window), with the classes each probe can take under each of them.
    pub fn census(&mut self, budget: &ScaledWeight, probes: &[VertexId]) -> Result<Vec<CensusEntry>, String> {
        let base = self.base();
        if *budget < base {
            return Ok(Vec::new());
        }
        let extra = usize::try_from(budget.numerator() - base.numerator()).unwrap_or(usize::MAX);
        if extra >= self.window() {
            return Err("census budget reaches past the structured window".into());
        }
        let mut out = Vec::new();
        let _ = self.walk(extra, true, |me, full, h| {
            if me.feasible(&full, h) {
                let probe_classes = probes.iter().map(|&p| me.probe(p, &full, h)).collect();
                let weight = full.weight(&me.params).rescaled(me.scale) + ScaledWeight::from(h as u64);
                out.push(CensusEntry { offsets: full, hub_class: h, weight, probe_classes });
            }
            ControlFlow::Continue(())
        });
        Ok(out)
    }

    /// Classes `p` takes in some coloring admitted by the vector.
    fn probe(&self, p: VertexId, full: &OffsetVector, hub_class: bool) -> Vec<usize> {
        let (c, pos) = self.place[p];
        let comp = &self.components[c];
        let lists = self.lists(comp, full, hub_class);
        let limit = lists[pos].limit;
        (0..limit)
            .filter(|&class| {
                let mut pinned = lists.clone();
                pinned[pos] = Allowed::pinned(class, limit);
                listcolor::is_feasible(&comp.rooted, &pinned)
            })
            .map(|c| c as usize)
            .collect()
    }

    /// Vectors with extra cost `<= max_extra`, for exhaustive cross-checks.
    pub fn vectors(&mut self, max_extra: usize) -> Vec<(OffsetVector, bool)> {
        let mut out = Vec::new();
        let _ = self.walk(max_extra, true, |_, full, h| {
            out.push((full, h));
            ControlFlow::Continue(())
        });
        out
    }
}

/// For each variable level, the positive offsets present in a component.
fn project_offsets(variables: &[(usize, Vec<usize>)], slots: &[Option<(usize, usize)>]) -> Vec<Vec<usize>> {
    variables
        .iter()
        .map(|&(l, _)| {
            let mut used: Vec<usize> = slots.iter().flatten().filter(|s| s.0 == l && s.1 > 0).map(|s| s.1).collect();
            used.sort_unstable();
            used.dedup();
            used
        })
        .collect()
}

/// Lexicographic enumeration of vectors drawn from `cands` with the given sum.
fn vectors_with_total(cands: &[Vec<usize>], total: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let i = prefix.len();
    if i == cands.len() {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for &c in &cands[i] {
        if c > total {
            break;
        }
        prefix.push(c);
        vectors_with_total(cands, total - c, prefix, out);
        prefix.pop();
    }
}

/// Vertex sets of the components left after deleting `hub`.
fn pieces_without(forest: &WeightedForest, hub: Option<VertexId>) -> Vec<Vec<VertexId>> {
    let Some(h) = hub else {
        return forest.components();
    };
    let n = forest.vertex_count();
    let mut seen = vec![false; n];
    seen[h] = true;
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut piece = vec![s];
        let mut head = 0;
        while head < piece.len() {
            let v = piece[head];
            head += 1;
            for &w in forest.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    piece.push(w);
                }
            }
        }
        piece.sort_unstable();
        out.push(piece);
    }
    out
}

fn fallback(
    forest: &WeightedForest,
    budget: Option<&ScaledWeight>,
    r: Option<usize>,
    reason: String,
    decide: bool,
) -> GadgetSolve {
    let result = match (decide, budget, r) {
        (true, Some(b), r) => solvers::decide_budget(forest, b, r),
        (_, b, Some(r)) => solvers::sigma_r_tuple(forest, r, b),
        (_, b, None) => solvers::sigma_min(forest, b),
    };
    GadgetSolve { result, method: GadgetMethod::Fallback(reason), vectors_checked: 0, offsets: None }
}

fn run(
    forest: &WeightedForest,
    params: &GadgetParams,
    scale: u32,
    hub: Option<VertexId>,
    budget: Option<&ScaledWeight>,
    r: Option<usize>,
    decide: bool,
) -> GadgetSolve {
    let mut solver = match StructuredSolver::new(forest, params, scale, hub) {
        Ok(s) => s,
        Err(reason) => return fallback(forest, budget, r, reason, decide),
    };
    match solver.solve(budget, r) {
        Some((result, offsets)) => {
            GadgetSolve { result, method: GadgetMethod::Structured, vectors_checked: solver.vectors_checked(), offsets }
        }
        None => {
            let reason = if r.is_some_and(|r| r < params.level_count()) {
                "color bound below the number of levels".into()
            } else {
                "optimum lies outside the structured window".into()
            };
            fallback(forest, budget, r, reason, decide)
        }
    }
}

/// `σ` of a reduction instance (`σ_r` when it carries a color bound).
pub fn sigma_gadget(instance: &ReductionInstance) -> GadgetSolve {
    run(&instance.forest, &instance.params, instance.scale, instance.hub, None, instance.color_bound, false)
}

/// Threshold decision for a reduction instance: a coloring of weight `<=
/// budget` within its color bound, or infeasible.
pub fn decide_gadget(instance: &ReductionInstance, budget: &ScaledWeight) -> GadgetSolve {
    run(&instance.forest, &instance.params, instance.scale, instance.hub, Some(budget), instance.color_bound, true)
}

/// Structured solve of a forest built under `params`, possibly rescaled by
/// `scale` with a connector `hub` (as produced by the forest-to-tree transform).
pub fn sigma_gadget_scaled(
    forest: &WeightedForest,
    params: &GadgetParams,
    scale: u32,
    hub: Option<VertexId>,
    budget: Option<&ScaledWeight>,
    r: Option<usize>,
) -> GadgetSolve {
    run(forest, params, scale, hub, budget, r, false)
}

/// Structured solve of an arbitrary forest under a given scheme.
pub fn sigma_gadget_forest(
    forest: &WeightedForest,
    params: &GadgetParams,
    budget: Option<&ScaledWeight>,
    r: Option<usize>,
) -> GadgetSolve {
    run(forest, params, 1, None, budget, r, false)
}
