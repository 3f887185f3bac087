//! The Independent Set and Dominating Set reductions, the witness coloring
//! built from a solution, solution extraction from a coloring, and the
//! forest-to-tree transform.
//!
//! Colors of a reduction coloring are indexed by level: class `l` is the one
//! whose weight sits at level `l`, so `R_ell` is class `4k + ell`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::coloring::{class_weights, coloring_weight, is_proper, Coloring};
use crate::error::{Error, Result};
use crate::forest::{VertexId, WeightedForest};
use crate::gadgets::{self, GadgetParams};
use crate::graph::SourceGraph;
use crate::listcolor::{self, Allowed, Rooted};
use crate::weight::ScaledWeight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Problem {
    IndependentSet,
    DominatingSet,
}

/// The gadget a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GadgetTag {
    /// The lone `B_{4k+3}` component.
    Binomial,
    /// A standalone vertex tree.
    Standalone,
    /// `H_{e,i1,i2}` for the source edge `(u, v)`, `u < v`.
    Edge { u: usize, v: usize, i1: usize, i2: usize },
    /// `H_{v,i1,i2}` of the independent set reduction.
    Vertex { v: usize, i1: usize, i2: usize },
    /// `H_v` of the dominating set reduction.
    Dominating { v: usize },
    /// The connector added by the forest-to-tree transform.
    Connector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RoleKind {
    VtreeRoot,
    AndOutput,
    BRoot,
    Hub,
}

impl RoleKind {
    pub fn name(self) -> &'static str {
        match self {
            RoleKind::VtreeRoot => "vtree_root",
            RoleKind::AndOutput => "and_output",
            RoleKind::BRoot => "b_root",
            RoleKind::Hub => "hub",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Role {
    pub kind: RoleKind,
    /// `(i, j)` of a vertex-tree root.
    pub index: Option<(usize, usize)>,
    pub tag: GadgetTag,
}

/// One vertex tree placed by a reduction, with the auxiliary trees the
/// witness construction pins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VtreeRecord {
    pub i: usize,
    pub j: usize,
    pub tag: GadgetTag,
    pub root: VertexId,
    /// `(level, offset, root, subroot)` of its six auxiliary trees.
    pub aux: Vec<(usize, usize, VertexId, VertexId)>,
}

/// A set of source-graph vertices.
pub type SolutionSet = BTreeSet<usize>;

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub problem: Problem,
    pub graph: SourceGraph,
    pub forest: WeightedForest,
    pub params: GadgetParams,
    /// Budget over `forest.denominator()`.
    pub threshold: ScaledWeight,
    pub color_bound: Option<usize>,
    pub provenance: BTreeMap<VertexId, Role>,
    /// `beta[v]` is the offset representing source vertex `v`.
    pub beta: Vec<usize>,
    pub vtrees: Vec<VtreeRecord>,
    pub b_root: VertexId,
    /// Factor between `forest.denominator()` and the scheme's `D`.
    pub scale: u32,
    /// Connector vertex of a transformed instance.
    pub hub: Option<VertexId>,
}

impl ReductionInstance {
    /// `β⁻¹`.
    pub fn source_vertex(&self, j: usize) -> usize {
        self.beta.iter().position(|&b| b == j).expect("beta is a bijection")
    }

    /// Scheme weight `w_level^0`, in this instance's units.
    pub fn level_weight(&self, level: usize) -> ScaledWeight {
        self.params.scheme_weight(level, 0).rescaled(self.scale)
    }

    /// Roots of the standalone vertex trees, by `(i, j)`.
    pub fn standalone_roots(&self) -> BTreeMap<(usize, usize), VertexId> {
        self.vtrees.iter().filter(|t| t.tag == GadgetTag::Standalone).map(|t| ((t.i, t.j), t.root)).collect()
    }
}

struct Builder {
    params: GadgetParams,
    forest: WeightedForest,
    provenance: BTreeMap<VertexId, Role>,
    vtrees: Vec<VtreeRecord>,
}

impl Builder {
    fn new(n: usize, k: usize) -> Result<Self> {
        let params = GadgetParams::new(n, k)?;
        let forest = WeightedForest::new(params.denominator().clone())?;
        Ok(Builder { params, forest, provenance: BTreeMap::new(), vtrees: Vec::new() })
    }

    fn binomial(&mut self, i: usize) -> VertexId {
        gadgets::build_binomial(&self.params, &mut self.forest, i).expect("level in range").root
    }

    fn vtree(&mut self, i: usize, j: usize, tag: GadgetTag) -> VertexId {
        let h = gadgets::build_vertex_tree(&self.params, &mut self.forest, i, j).expect("indices in range");
        self.provenance.insert(h.root, Role { kind: RoleKind::VtreeRoot, index: Some((i, j)), tag });
        self.vtrees.push(VtreeRecord { i, j, tag, root: h.root, aux: h.aux_trees() });
        h.root
    }

    /// AND of `inputs` (the input itself when there is only one) with a
    /// `B_block` hung on the output.
    fn guarded_and(&mut self, inputs: &[VertexId], flavor: usize, block: usize, tag: GadgetTag) {
        let out = if inputs.len() == 1 {
            inputs[0]
        } else {
            let h = gadgets::build_and(&self.params, &mut self.forest, inputs, flavor).expect("fresh inputs");
            self.provenance.insert(h.root, Role { kind: RoleKind::AndOutput, index: None, tag });
            h.root
        };
        let b = self.binomial(block);
        self.forest.add_edge(out, b).expect("fresh subtree");
    }

    fn finish(
        mut self,
        problem: Problem,
        graph: &SourceGraph,
        b_root: VertexId,
        color_bound: Option<usize>,
    ) -> ReductionInstance {
        self.provenance.insert(b_root, Role { kind: RoleKind::BRoot, index: None, tag: GadgetTag::Binomial });
        ReductionInstance {
            problem,
            graph: graph.clone(),
            threshold: self.params.threshold(),
            forest: self.forest,
            params: self.params,
            color_bound,
            provenance: self.provenance,
            beta: (0..graph.vertex_count()).collect(),
            vtrees: self.vtrees,
            b_root,
            scale: 1,
            hub: None,
        }
    }
}

fn check_k(graph: &SourceGraph, k: usize) -> Result<()> {
    if k == 0 || k > graph.vertex_count() {
        return Err(Error::invalid(format!("k = {k} outside 1..={}", graph.vertex_count())));
    }
    Ok(())
}

/// Builds `(G', M)` with `σ(G') <= M` iff `G` has an independent set of size `k`.
pub fn reduce_is(graph: &SourceGraph, k: usize) -> Result<ReductionInstance> {
    check_k(graph, k)?;
    let n = graph.vertex_count();
    let mut b = Builder::new(n, k)?;
    let b_root = b.binomial(4 * k + 3);
    for (u, v) in graph.edges() {
        for i1 in 0..k {
            for i2 in 0..k {
                let tag = GadgetTag::Edge { u, v, i1, i2 };
                let r1 = b.vtree(i1, u, tag);
                let r2 = b.vtree(i2, v, tag);
                b.guarded_and(&[r1, r2], 0, 4 * k, tag);
            }
        }
    }
    for v in 0..n {
        for i1 in 0..k {
            for i2 in (0..k).filter(|&i2| i2 != i1) {
                let tag = GadgetTag::Vertex { v, i1, i2 };
                let r1 = b.vtree(i1, v, tag);
                let r2 = b.vtree(i2, v, tag);
                b.guarded_and(&[r1, r2], 0, 4 * k, tag);
            }
        }
    }
    standalone_trees(&mut b, n, k);
    Ok(b.finish(Problem::IndependentSet, graph, b_root, None))
}

/// Builds `(G', M, r = 4k+4)` with `σ(G'; r) <= M` iff `G` has a dominating
/// set of size at most `k`.
pub fn reduce_ds(graph: &SourceGraph, k: usize) -> Result<ReductionInstance> {
    check_k(graph, k)?;
    let n = graph.vertex_count();
    let mut b = Builder::new(n, k)?;
    let b_root = b.binomial(4 * k + 3);
    for v in 0..n {
        let tag = GadgetTag::Dominating { v };
        let closed = graph.closed_neighborhood(v);
        let mut roots = Vec::new();
        for i in 0..k {
            for &u in &closed {
                roots.push(b.vtree(i, u, tag));
            }
        }
        b.guarded_and(&roots, 1, 4 * k + 1, tag);
    }
    standalone_trees(&mut b, n, k);
    Ok(b.finish(Problem::DominatingSet, graph, b_root, Some(4 * k + 4)))
}

fn standalone_trees(b: &mut Builder, n: usize, k: usize) {
    for i in 0..k {
        for j in 0..n {
            b.vtree(i, j, GadgetTag::Standalone);
        }
    }
}

/// Joins all components through one new vertex of weight one unit of the
/// doubled denominator. The threshold becomes `2M + 1` and the color bound,
/// if any, grows by one.
pub fn forest_to_tree(instance: &ReductionInstance) -> Result<ReductionInstance> {
    if instance.forest.is_empty() {
        return Err(Error::invalid("cannot transform an empty forest"));
    }
    if instance.hub.is_some() {
        return Err(Error::invalid("instance is already a tree from a previous transform"));
    }
    let mut forest = instance.forest.rescaled(2);
    let anchors: Vec<VertexId> = forest.components().iter().map(|c| c[0]).collect();
    let hub = forest.add_vertex(ScaledWeight::from(1));
    for a in anchors {
        forest.add_edge(hub, a)?;
    }
    let mut provenance = instance.provenance.clone();
    provenance.insert(hub, Role { kind: RoleKind::Hub, index: None, tag: GadgetTag::Connector });
    Ok(ReductionInstance {
        forest,
        threshold: instance.threshold.rescaled(2) + ScaledWeight::from(1),
        color_bound: instance.color_bound.map(|r| r + 1),
        provenance,
        scale: instance.scale * 2,
        hub: Some(hub),
        ..instance.clone()
    })
}

fn validate_solution(instance: &ReductionInstance, z: &SolutionSet) -> Result<()> {
    let k = instance.params.k();
    if z.len() != k {
        return Err(Error::invalid(format!("solution has {} vertices, expected {k}", z.len())));
    }
    if let Some(&v) = z.iter().find(|&&v| v >= instance.graph.vertex_count()) {
        return Err(Error::invalid(format!("{v} is not a source vertex")));
    }
    let ok = match instance.problem {
        Problem::IndependentSet => instance.graph.is_independent(z),
        Problem::DominatingSet => instance.graph.is_dominating(z),
    };
    if !ok {
        return Err(Error::invalid("set is not a solution of the source problem"));
    }
    Ok(())
}

/// The coloring of weight exactly `M` (or `2M + 1` after the transform)
/// induced by a solution `Z`: the `i`-th element of `Z` in `β` order selects
/// offset `j_i`, the classes at levels `4i+1` and `4i+3` take offsets `j_i`
/// and `n-1-j_i`, and every vertex tree's root goes to `R_0` exactly when it
/// represents a selected pair.
pub fn witness_coloring(instance: &ReductionInstance, z: &SolutionSet) -> Result<Coloring> {
    validate_solution(instance, z)?;
    let params = &instance.params;
    let (n, k) = (params.n(), params.k());
    let r0 = 4 * k as u32;
    let mut selected: Vec<usize> = z.iter().map(|&v| instance.beta[v]).collect();
    selected.sort_unstable();

    let mut offsets = alloc::vec![0usize; params.level_count()];
    for (i, &j) in selected.iter().enumerate() {
        offsets[4 * i + 1] = j;
        offsets[4 * i + 3] = n - 1 - j;
    }
    let mut lists = level_lists(instance, &offsets);
    let mut pin = |v: VertexId, class: u32| lists[v] = Allowed::pinned(class, u32::MAX);
    for t in &instance.vtrees {
        let ji = selected[t.i];
        pin(t.root, if t.j == ji { r0 } else { r0 + 1 });
        for &(level, offset, root, sub) in &t.aux {
            let cap = if level == 4 * t.i + 1 { ji } else { n - 1 - ji };
            if offset <= cap {
                pin(sub, level as u32);
                pin(root, level as u32 - 1);
            } else {
                pin(sub, level as u32 - 1);
                pin(root, r0);
            }
        }
    }
    if let Some(hub) = instance.hub {
        // the connector takes a class of its own
        pin(hub, params.level_count() as u32);
    }
    let coloring = list_coloring(&instance.forest, &lists, params.level_count() + instance.hub.is_some() as usize)
        .ok_or_else(|| Error::MalformedColoring("solution pins admit no proper coloring".into()))?;
    let weight = coloring_weight(&instance.forest, &coloring)?;
    if weight != instance.threshold {
        return Err(Error::MalformedColoring(format!(
            "witness weight {weight} differs from threshold {}",
            instance.threshold
        )));
    }
    Ok(coloring)
}

/// Per-vertex prefix lists for the one-class-per-level tuple with the given
/// offsets; the hub may use any class, including its own extra one.
pub(crate) fn level_lists(instance: &ReductionInstance, offsets: &[usize]) -> Vec<Allowed> {
    let params = &instance.params;
    instance
        .forest
        .weights()
        .iter()
        .enumerate()
        .map(|(v, w)| {
            if Some(v) == instance.hub {
                return Allowed::prefix(params.level_count() as u32 + 1);
            }
            let lw = params.classify(&descale(w, instance.scale)).expect("reduction weights lie in the scheme");
            let limit = lw.level + (lw.offset <= offsets[lw.level]) as usize;
            Allowed::prefix(limit as u32)
        })
        .collect()
}

pub(crate) fn descale(w: &ScaledWeight, scale: u32) -> ScaledWeight {
    if scale == 1 {
        w.clone()
    } else {
        ScaledWeight::new(w.numerator() / scale)
    }
}

/// Proper coloring of the whole forest from global-order lists.
pub(crate) fn list_coloring(forest: &WeightedForest, lists: &[Allowed], color_count: usize) -> Option<Coloring> {
    let rooted = Rooted::forest(forest);
    let local: Vec<Allowed> = rooted.order.iter().map(|&v| lists[v]).collect();
    let states = listcolor::solve(&rooted, &local)?;
    let colors = listcolor::witness(&rooted, &local, &states);
    let mut assignment = alloc::vec![0usize; forest.vertex_count()];
    for (i, &c) in colors.iter().enumerate() {
        assignment[rooted.order[i]] = c as usize;
    }
    Coloring::new(assignment, color_count).ok()
}

/// Reads the selected vertices off a coloring within the threshold: for each
/// `i`, the standalone `T_i^j` whose root shares the class of weight `W_0`.
pub fn extract_solution(instance: &ReductionInstance, coloring: &Coloring) -> Result<SolutionSet> {
    let forest = &instance.forest;
    if !is_proper(forest, coloring)? {
        return Err(Error::invalid("coloring is not proper"));
    }
    if coloring_weight(forest, coloring)? > instance.threshold {
        return Err(Error::invalid("coloring exceeds the threshold"));
    }
    if let Some(r) = instance.color_bound {
        if coloring.nonempty_class_count() > r {
            return Err(Error::invalid(format!("coloring uses more than {r} classes")));
        }
    }
    let w0 = instance.level_weight(4 * instance.params.k());
    let weights = class_weights(forest, coloring)?;
    let mut zero_classes = weights.iter().enumerate().filter(|(_, w)| **w == w0).map(|(c, _)| c);
    let c0 = zero_classes.next().ok_or_else(|| Error::MalformedColoring("no class has weight W_0".into()))?;
    if zero_classes.next().is_some() {
        return Err(Error::MalformedColoring("several classes have weight W_0".into()));
    }
    let roots = instance.standalone_roots();
    let mut z = SolutionSet::new();
    for i in 0..instance.params.k() {
        let hits: Vec<usize> = (0..instance.params.n()).filter(|&j| coloring.color(roots[&(i, j)]) == c0).collect();
        match hits[..] {
            [j] => {
                z.insert(instance.source_vertex(j));
            }
            _ => {
                return Err(Error::MalformedColoring(format!(
                    "{} standalone roots of level {i} lie in the W_0 class",
                    hits.len()
                )))
            }
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> SourceGraph {
        SourceGraph::from_edges(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn component_counts() {
        let g = SourceGraph::from_edges(2, &[(0, 1)]).unwrap();
        let inst = reduce_is(&g, 2).unwrap();
        assert_eq!(inst.forest.components().len(), 13);
        let inst = reduce_is(&g, 1).unwrap();
        assert_eq!(inst.forest.components().len(), 1 + 1 + 2);
        assert!(!inst.vtrees.iter().any(|t| matches!(t.tag, GadgetTag::Vertex { .. })));
        assert!(reduce_is(&g, 0).is_err());
        assert!(reduce_is(&g, 3).is_err());
    }

    #[test]
    fn ds_shape() {
        let p3 = SourceGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = reduce_ds(&p3, 1).unwrap();
        assert_eq!(inst.color_bound, Some(8));
        let count = |v| inst.vtrees.iter().filter(|t| t.tag == GadgetTag::Dominating { v }).count();
        assert_eq!((count(0), count(1), count(2)), (2, 3, 2));
        assert_eq!(reduce_ds(&SourceGraph::new(2), 2).unwrap().color_bound, Some(12));
    }

    #[test]
    fn witness_round_trip() {
        let g = SourceGraph::new(2);
        let inst = reduce_is(&g, 2).unwrap();
        let z: SolutionSet = [0, 1].into_iter().collect();
        let c = witness_coloring(&inst, &z).unwrap();
        assert!(is_proper(&inst.forest, &c).unwrap());
        assert_eq!(coloring_weight(&inst.forest, &c).unwrap(), inst.threshold);
        assert_eq!(c.nonempty_class_count(), 12);
        assert_eq!(extract_solution(&inst, &c).unwrap(), z);
    }

    #[test]
    fn witness_rejects_bad_sets() {
        let inst = reduce_is(&k2(), 2).unwrap();
        assert!(witness_coloring(&inst, &[0, 1].into_iter().collect()).is_err());
        let inst = reduce_is(&k2(), 1).unwrap();
        assert!(witness_coloring(&inst, &[0, 1].into_iter().collect()).is_err());
        assert!(witness_coloring(&inst, &[5].into_iter().collect()).is_err());
        let c = witness_coloring(&inst, &[1].into_iter().collect()).unwrap();
        assert_eq!(extract_solution(&inst, &c).unwrap(), [1].into_iter().collect());
    }

    #[test]
    fn transform_makes_a_tree() {
        let p3 = SourceGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = reduce_ds(&p3, 1).unwrap();
        let tree = forest_to_tree(&inst).unwrap();
        assert_eq!(tree.forest.components().len(), 1);
        assert_eq!(tree.color_bound, Some(9));
        assert_eq!(tree.threshold, inst.threshold.rescaled(2) + ScaledWeight::from(1));
        let z: SolutionSet = [1].into_iter().collect();
        let c = witness_coloring(&tree, &z).unwrap();
        assert!(is_proper(&tree.forest, &c).unwrap());
        assert_eq!(extract_solution(&tree, &c).unwrap(), z);
        assert!(forest_to_tree(&tree).is_err());
    }
}
