//! The weight scheme and the four gadget families: binomial trees `B_i`,
//! auxiliary trees `A_i^j`, `R_i`-AND gadgets and vertex trees `T_i^j`.
//!
//! With `n` source vertices and parameter `k`, weights are
//! `w_i^j = 1/2^i + j·ε` for levels `i ∈ 0..=4k+3` and offsets `j ∈ 0..=n`.
//! Fixing `ε = 1/D` with `D = n·k·2^(4k+4)` makes every weight an integer
//! numerator over `D`: `w_i^j = (n·k·2^(4k+4-i) + j) / D`. The four lightest
//! levels `4k..4k+3` at offset 0 are the special weights `W_0..W_3`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::forest::{VertexId, WeightedForest};
use crate::weight::ScaledWeight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetParams {
    n: usize,
    k: usize,
    denominator: BigUint,
    threshold: BigUint,
}

impl GadgetParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::invalid("the weight scheme needs n >= 1 and k >= 1"));
        }
        let nk = BigUint::from(n) * BigUint::from(k);
        let denominator = &nk << (4 * k + 4);
        // k(n-1)ε + Σ_{i ≤ 4k+3} 2^-i, scaled by D
        let levels = (BigUint::one() << (4 * k + 5)) - 2u32;
        let threshold = BigUint::from(k * (n - 1)) + &nk * levels;
        Ok(GadgetParams { n, k, denominator, threshold })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `D`; `ε = 1/D`.
    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    /// Numerator of the budget `M` over `D`.
    pub fn threshold(&self) -> ScaledWeight {
        ScaledWeight::new(self.threshold.clone())
    }

    /// Number of levels, `4k + 4`.
    pub fn level_count(&self) -> usize {
        4 * self.k + 4
    }

    /// The slack `k(n-1)` in units of `ε`.
    pub fn offset_budget(&self) -> usize {
        self.k * (self.n - 1)
    }

    pub fn weight_of(&self, level: usize, offset: usize) -> Result<ScaledWeight> {
        if level >= self.level_count() {
            return Err(Error::invalid(alloc::format!("level {level} outside 0..={}", self.level_count() - 1)));
        }
        if offset > self.n {
            return Err(Error::invalid(alloc::format!("offset {offset} outside 0..={}", self.n)));
        }
        Ok(self.scheme_weight(level, offset))
    }

    pub(crate) fn scheme_weight(&self, level: usize, offset: usize) -> ScaledWeight {
        let nk = BigUint::from(self.n) * BigUint::from(self.k);
        ScaledWeight::new((nk << (4 * self.k + 4 - level)) + BigUint::from(offset))
    }

    /// `W_ell = w_{4k+ell}^0`, for `ell ∈ 0..=3`.
    pub fn special(&self, ell: usize) -> ScaledWeight {
        assert!(ell < 4);
        self.scheme_weight(4 * self.k + ell, 0)
    }

    /// Sum of the offset-0 weights of all levels, i.e. `M - k(n-1)ε`.
    pub fn base_sum(&self) -> ScaledWeight {
        (0..self.level_count()).map(|i| self.scheme_weight(i, 0)).sum()
    }

    /// Decomposes a scaled weight into level and offset, if it belongs to the scheme.
    pub fn classify(&self, w: &ScaledWeight) -> Option<LevelWeight> {
        let nk = BigUint::from(self.n) * BigUint::from(self.k);
        // level i has base nk·2^(4k+4-i) and offsets below nk·2^(4k+3-i)
        (0..self.level_count()).find_map(|level| {
            let base = &nk << (4 * self.k + 4 - level);
            if w.numerator() < &base {
                return None;
            }
            let offset = w.numerator() - &base;
            (offset <= BigUint::from(self.n))
                .then(|| LevelWeight { level, offset: usize::try_from(offset).expect("offset <= n") })
        })
    }

    fn check_host(&self, forest: &WeightedForest) -> Result<()> {
        if forest.denominator() != &self.denominator {
            return Err(Error::invalid("host forest denominator differs from the scheme's D"));
        }
        Ok(())
    }
}

/// A weight of the scheme, `w_level^offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelWeight {
    pub level: usize,
    pub offset: usize,
}

/// Named vertices of a built gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Anchor {
    /// Subroot `v` of an auxiliary tree.
    Subroot,
    /// Final output of an AND gadget (or chain).
    Output,
    /// Vertex `v1`, `v2` or `v3` (`which` in 1..=3) of AND stage `stage`.
    AndVertex {
        stage: usize,
        which: u8,
    },
    /// Output of AND stage `stage` of a chain.
    StageOutput {
        stage: usize,
    },
    /// Root of an auxiliary tree inside a vertex tree.
    AuxRoot {
        level: usize,
        offset: usize,
        copy: u8,
    },
    AuxSubroot {
        level: usize,
        offset: usize,
        copy: u8,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetHandle {
    pub root: VertexId,
    pub anchors: Vec<(Anchor, VertexId)>,
}

impl GadgetHandle {
    pub fn get(&self, anchor: Anchor) -> Option<VertexId> {
        self.anchors.iter().find(|(a, _)| *a == anchor).map(|&(_, v)| v)
    }

    /// `(level, offset, root, subroot)` of every auxiliary tree in the gadget.
    pub fn aux_trees(&self) -> Vec<(usize, usize, VertexId, VertexId)> {
        self.anchors
            .iter()
            .filter_map(|&(a, r)| match a {
                Anchor::AuxRoot { level, offset, copy } => {
                    let sub = self.get(Anchor::AuxSubroot { level, offset, copy })?;
                    Some((level, offset, r, sub))
                }
                _ => None,
            })
            .collect()
    }
}

pub(crate) fn binomial(params: &GadgetParams, forest: &mut WeightedForest, i: usize) -> VertexId {
    let root = forest.add_vertex(params.scheme_weight(i, 0));
    for j in 0..i {
        let child = binomial(params, forest, j);
        forest.add_edge(root, child).expect("fresh subtree");
    }
    root
}

/// Hangs fresh copies of `B_l` for each `l` in `levels` below `parent`.
pub(crate) fn hang(
    params: &GadgetParams,
    forest: &mut WeightedForest,
    parent: VertexId,
    levels: impl IntoIterator<Item = usize>,
) {
    for l in levels {
        let child = binomial(params, forest, l);
        forest.add_edge(parent, child).expect("fresh subtree");
    }
}

/// Adds a copy of `B_i` (`2^i` vertices, root weight `w_i^0`).
pub fn build_binomial(params: &GadgetParams, forest: &mut WeightedForest, i: usize) -> Result<GadgetHandle> {
    params.check_host(forest)?;
    if i >= params.level_count() {
        return Err(Error::invalid(alloc::format!("binomial tree index {i} out of range")));
    }
    Ok(GadgetHandle { root: binomial(params, forest, i), anchors: Vec::new() })
}

/// Adds a copy of `A_i^j`: root `u` of weight `W_0`, subroot `v` of weight
/// `w_i^j`, `B_0..B_{i-2}` under `v` and `B_l` for `l ∈ 0..4k, l ≠ i-1` under `u`.
pub fn build_auxiliary(params: &GadgetParams, forest: &mut WeightedForest, i: usize, j: usize) -> Result<GadgetHandle> {
    params.check_host(forest)?;
    if i >= 4 * params.k || j > params.n {
        return Err(Error::invalid(alloc::format!("auxiliary tree A_{i}^{j} out of range")));
    }
    Ok(auxiliary(params, forest, i, j))
}

fn auxiliary(params: &GadgetParams, forest: &mut WeightedForest, i: usize, j: usize) -> GadgetHandle {
    auxiliary_without(params, forest, i, j, None)
}

/// `A_i^j`, optionally leaving out the `B_skip` under the root.
pub(crate) fn auxiliary_without(
    params: &GadgetParams,
    forest: &mut WeightedForest,
    i: usize,
    j: usize,
    skip: Option<usize>,
) -> GadgetHandle {
    let u = forest.add_vertex(params.special(0));
    let v = forest.add_vertex(params.scheme_weight(i, j));
    forest.add_edge(u, v).expect("fresh vertices");
    hang(params, forest, v, 0..i.saturating_sub(1));
    hang(params, forest, u, (0..4 * params.k).filter(|&l| l + 1 != i && Some(l) != skip));
    GadgetHandle { root: u, anchors: alloc::vec![(Anchor::Subroot, v)] }
}

/// Adds an `R_flavor`-AND gadget over `inputs`, chaining `inputs.len() - 1`
/// two-input gadgets left to right: the output of each stage is the first
/// input of the next.
pub fn build_and(
    params: &GadgetParams,
    forest: &mut WeightedForest,
    inputs: &[VertexId],
    flavor: usize,
) -> Result<GadgetHandle> {
    params.check_host(forest)?;
    if inputs.len() < 2 {
        return Err(Error::invalid("an AND gadget needs at least two inputs"));
    }
    if flavor > 1 {
        return Err(Error::invalid("AND flavor must be 0 or 1"));
    }
    if let Some(&bad) = inputs.iter().find(|&&v| v >= forest.vertex_count()) {
        return Err(Error::invalid(alloc::format!("input {bad} is not a vertex")));
    }
    let mut anchors = Vec::new();
    let mut current = inputs[0];
    for (stage, &next) in inputs[1..].iter().enumerate() {
        let [v1, v2, v3, out] = and_stage(params, forest, current, next, flavor, true)?;
        anchors.push((Anchor::AndVertex { stage, which: 1 }, v1));
        anchors.push((Anchor::AndVertex { stage, which: 2 }, v2));
        anchors.push((Anchor::AndVertex { stage, which: 3 }, v3));
        anchors.push((Anchor::StageOutput { stage }, out));
        current = out;
    }
    anchors.push((Anchor::Output, current));
    Ok(GadgetHandle { root: current, anchors })
}

/// One two-input stage; `guarded = false` leaves out the `B_{4k+2}` under `v3`.
pub(crate) fn and_stage(
    params: &GadgetParams,
    forest: &mut WeightedForest,
    in1: VertexId,
    in2: VertexId,
    flavor: usize,
    guarded: bool,
) -> Result<[VertexId; 4]> {
    let k4 = 4 * params.k;
    let v1 = forest.add_vertex(params.special(2));
    let v2 = forest.add_vertex(params.special(3));
    let v3 = forest.add_vertex(params.special(3));
    let out = forest.add_vertex(params.special(1));
    for v in [v1, v2, v3, out] {
        hang(params, forest, v, 0..k4);
    }
    hang(params, forest, v1, [k4 + 1 - flavor]);
    hang(params, forest, v2, [k4 + 1 - flavor]);
    hang(params, forest, v3, [k4 + flavor]);
    if guarded {
        hang(params, forest, v3, [k4 + 2]);
    }
    forest.add_edge(v1, v2)?;
    forest.add_edge(v2, v3)?;
    forest.add_edge(v3, out)?;
    forest.add_edge(v1, in1)?;
    forest.add_edge(v2, in2)?;
    Ok([v1, v2, v3, out])
}

/// Adds the vertex tree `T_i^j`; its root is the output of the internal
/// `R_0`-AND gadget.
pub fn build_vertex_tree(
    params: &GadgetParams,
    forest: &mut WeightedForest,
    i: usize,
    j: usize,
) -> Result<GadgetHandle> {
    params.check_host(forest)?;
    if i >= params.k || j >= params.n {
        return Err(Error::invalid(alloc::format!("vertex tree T_{i}^{j} out of range")));
    }
    let n = params.n;
    let (low, high) = (4 * i + 1, 4 * i + 3);
    let mut anchors = Vec::new();
    let mut aux = |forest: &mut WeightedForest, level: usize, offset: usize, copy: u8| {
        let h = auxiliary(params, forest, level, offset);
        let sub = h.get(Anchor::Subroot).expect("auxiliary subroot");
        anchors.push((Anchor::AuxRoot { level, offset, copy }, h.root));
        anchors.push((Anchor::AuxSubroot { level, offset, copy }, sub));
        h.root
    };
    // AND inputs
    let in1 = aux(forest, low, j + 1, 0);
    let in2 = aux(forest, high, n - j, 0);
    // the four trees hanging off the root
    let a_low = aux(forest, low, j, 1);
    let a_low_next = aux(forest, low, j + 1, 1);
    let a_high = aux(forest, high, n - j, 1);
    let a_high_prev = aux(forest, high, n - j - 1, 1);
    let and = build_and(params, forest, &[in1, in2], 0)?;
    let u = and.root;
    forest.add_edge(a_low, a_high)?;
    forest.add_edge(a_low_next, a_high_prev)?;
    forest.add_edge(u, a_low)?;
    forest.add_edge(u, a_high_prev)?;
    anchors.extend(and.anchors);
    Ok(GadgetHandle { root: u, anchors })
}
