//! Exact solvers for `σ(G,w)` and `σ(G,w;r)` on forests, a canonical coloring
//! enumerator and brute-force Independent Set / Dominating Set oracles.
//!
//! The solvers search over non-increasing tuples of class weights. A tuple
//! fixes for every vertex the colors it may take (those whose weight is at
//! least its own), so checking a tuple is a list-coloring problem, decided on
//! forests by a linear tree dynamic program. Candidate class weights are the
//! distinct vertex weights: lowering a class weight to the heaviest vertex it
//! actually holds never increases the sum.

mod enumerate;
mod oracle;
mod tuple;

use alloc::vec::Vec;

pub use enumerate::enumerate_colorings;
pub use oracle::{max_is, min_ds};
pub use tuple::{decide_budget, list_color_feasible, sigma_min, sigma_r_tuple};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::forest::WeightedForest;
use crate::listcolor::{Allowed, Rooted};
use crate::weight::ScaledWeight;

/// Non-increasing sequence of class weights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeightTuple(Vec<ScaledWeight>);

impl WeightTuple {
    pub fn new(values: Vec<ScaledWeight>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("weight tuple must be non-increasing"));
        }
        Ok(WeightTuple(values))
    }

    pub fn values(&self) -> &[ScaledWeight] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> ScaledWeight {
        self.0.iter().sum()
    }
}

/// A feasible answer: the witness is proper and weighs exactly `weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub weight: ScaledWeight,
    /// Class weights the search settled on; `weight <= tuple.sum()`, with
    /// equality for optimizing calls.
    pub tuple: WeightTuple,
    pub witness: Coloring,
}

/// `Infeasible` stands for `+∞`: no coloring within the requested bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    Feasible(Solution),
    Infeasible,
}

impl SolveResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SolveResult::Feasible(_))
    }

    pub fn solution(&self) -> Option<&Solution> {
        match self {
            SolveResult::Feasible(s) => Some(s),
            SolveResult::Infeasible => None,
        }
    }

    pub fn weight(&self) -> Option<&ScaledWeight> {
        self.solution().map(|s| &s.weight)
    }

    pub fn into_solution(self) -> Option<Solution> {
        match self {
            SolveResult::Feasible(s) => Some(s),
            SolveResult::Infeasible => None,
        }
    }
}

/// Forest preprocessed for tuple searches: BFS layout and weight ranks
/// (rank 0 is the heaviest distinct weight).
pub(crate) struct Prepared<'a> {
    pub forest: &'a WeightedForest,
    pub rooted: Rooted,
    /// Distinct weights, decreasing.
    pub values: Vec<ScaledWeight>,
    /// Rank of the vertex at each local position.
    pub rank: Vec<u32>,
    /// Number of vertices of each rank.
    pub multiplicity: Vec<usize>,
}

impl<'a> Prepared<'a> {
    pub fn new(forest: &'a WeightedForest) -> Self {
        let rooted = Rooted::forest(forest);
        let mut values: Vec<ScaledWeight> = forest.weights().to_vec();
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();
        let rank: Vec<u32> = rooted
            .order
            .iter()
            .map(|&v| values.binary_search_by(|x| forest.weight(v).cmp(x)).expect("weight is listed") as u32)
            .collect();
        let mut multiplicity = alloc::vec![0; values.len()];
        for &r in &rank {
            multiplicity[r as usize] += 1;
        }
        Prepared { forest, rooted, values, rank, multiplicity }
    }

    pub fn rank_count(&self) -> usize {
        self.values.len()
    }

    /// Lists induced by a tuple of ranks (non-decreasing). Vertices of rank
    /// `>= cutoff` are left unconstrained.
    pub fn lists(&self, tuple: &[u32], cutoff: u32) -> Vec<Allowed> {
        // colors available to rank x = number of tuple entries with rank <= x
        let mut avail = alloc::vec![0u32; self.values.len()];
        let mut k = 0usize;
        for (x, slot) in avail.iter_mut().enumerate() {
            while k < tuple.len() && tuple[k] as usize <= x {
                k += 1;
            }
            *slot = k as u32;
        }
        self.rank.iter().map(|&r| if r < cutoff { Allowed::prefix(avail[r as usize]) } else { Allowed::ANY }).collect()
    }

    /// Maps a local-order color vector back to vertex ids.
    pub fn to_coloring(&self, local: &[u32], color_count: usize) -> Coloring {
        let mut assignment = alloc::vec![0usize; local.len()];
        for (i, &c) in local.iter().enumerate() {
            assignment[self.rooted.order[i]] = c as usize;
        }
        Coloring::new(assignment, color_count).expect("colors come from the tuple")
    }
}
