use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{Prepared, Solution, SolveResult, WeightTuple};
use crate::coloring::coloring_weight;
use crate::forest::WeightedForest;
use crate::listcolor::{self, Allowed, Rooted};
use crate::weight::ScaledWeight;

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Smallest sum; ties go to the lexicographically smallest tuple.
    Minimize,
    /// Any complete tuple within budget.
    First,
    /// Every complete tuple within budget, extensions included.
    All,
}

/// Depth-first search over non-increasing tuples of distinct vertex weights,
/// visited in lexicographic order of their values.
///
/// At each node the prefix must already host every vertex that is heavier
/// than the next class weight; that bounds the next candidates from below and
/// prunes prefixes that cannot be completed at all.
pub(crate) struct TupleSearch<'p, 'a> {
    prep: &'p Prepared<'a>,
    max_len: usize,
    budget: Option<ScaledWeight>,
    mode: Mode,
    tuple: Vec<u32>,
    used: Vec<usize>,
    best: Option<(ScaledWeight, Vec<u32>)>,
    pub nodes: u64,
}

impl<'p, 'a> TupleSearch<'p, 'a> {
    pub fn new(prep: &'p Prepared<'a>, max_len: usize, budget: Option<ScaledWeight>, mode: Mode) -> Self {
        TupleSearch {
            prep,
            max_len,
            budget,
            mode,
            tuple: Vec::new(),
            used: alloc::vec![0; prep.rank_count()],
            best: None,
            nodes: 0,
        }
    }

    fn heavy_colorable(&self, cutoff: u32) -> bool {
        listcolor::is_feasible(&self.prep.rooted, &self.prep.lists(&self.tuple, cutoff))
    }

    /// Largest `x` such that all vertices of rank `< x` fit the current prefix.
    fn frontier(&self) -> u32 {
        let ranks = self.prep.rank_count() as u32;
        if self.heavy_colorable(ranks) {
            return ranks;
        }
        let mut lo = self.tuple.last().copied().unwrap_or(0);
        let mut hi = ranks;
        // invariant: heavy_colorable(lo) && !heavy_colorable(hi)
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.heavy_colorable(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    pub fn run<F>(&mut self, mut on_complete: F) -> Option<(ScaledWeight, Vec<u32>)>
    where
        F: FnMut(&[u32], &ScaledWeight) -> ControlFlow<()>,
    {
        let _ = self.dfs(&ScaledWeight::zero(), &mut on_complete);
        self.best.take()
    }

    fn dfs<F>(&mut self, sum: &ScaledWeight, on_complete: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32], &ScaledWeight) -> ControlFlow<()>,
    {
        self.nodes += 1;
        let ranks = self.prep.rank_count() as u32;
        let frontier = self.frontier();
        if frontier == ranks {
            match self.mode {
                Mode::Minimize => {
                    if self.best.as_ref().is_none_or(|(b, _)| sum < b) {
                        self.best = Some((sum.clone(), self.tuple.clone()));
                    }
                    return ControlFlow::Continue(());
                }
                Mode::First => {
                    self.best = Some((sum.clone(), self.tuple.clone()));
                    return ControlFlow::Break(());
                }
                Mode::All => on_complete(&self.tuple, sum)?,
            }
        }
        if self.tuple.len() >= self.max_len || ranks == 0 {
            return ControlFlow::Continue(());
        }
        let last = self.tuple.last().copied().unwrap_or(0);
        let hi = frontier.min(ranks - 1);
        for c in (last..=hi).rev() {
            let cu = c as usize;
            if self.used[cu] >= self.prep.multiplicity[cu] {
                continue;
            }
            let next = sum + &self.prep.values[cu];
            if self.budget.as_ref().is_some_and(|b| &next > b) {
                break;
            }
            if self.mode == Mode::Minimize && self.best.as_ref().is_some_and(|(b, _)| &next >= b) {
                break;
            }
            self.tuple.push(c);
            self.used[cu] += 1;
            let flow = self.dfs(&next, on_complete);
            self.used[cu] -= 1;
            self.tuple.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

pub(crate) fn solution_for(prep: &Prepared<'_>, tuple: &[u32]) -> Solution {
    let lists = prep.lists(tuple, prep.rank_count() as u32);
    let states = listcolor::solve(&prep.rooted, &lists).expect("tuple was checked complete");
    let local = listcolor::witness(&prep.rooted, &lists, &states);
    let witness = prep.to_coloring(&local, tuple.len());
    let weight = coloring_weight(prep.forest, &witness).expect("witness is total");
    let values = tuple.iter().map(|&r| prep.values[r as usize].clone()).collect();
    Solution { weight, tuple: WeightTuple(values), witness }
}

fn search(forest: &WeightedForest, max_len: usize, budget: Option<&ScaledWeight>, mode: Mode) -> SolveResult {
    let prep = Prepared::new(forest);
    let mut s = TupleSearch::new(&prep, max_len, budget.cloned(), mode);
    match s.run(|_, _| ControlFlow::Continue(())) {
        Some((sum, tuple)) => {
            let sol = solution_for(&prep, &tuple);
            debug_assert!(mode != Mode::Minimize || sol.weight == sum);
            SolveResult::Feasible(sol)
        }
        None => SolveResult::Infeasible,
    }
}

/// Can every vertex take a color whose tuple weight is at least its own?
pub fn list_color_feasible(forest: &WeightedForest, tuple: &WeightTuple) -> SolveResult {
    let rooted = Rooted::forest(forest);
    let values = tuple.values();
    let lists: Vec<Allowed> = rooted
        .order
        .iter()
        .map(|&v| {
            let w = forest.weight(v);
            // values are non-increasing: count the prefix that is >= w
            let limit = values.partition_point(|t| t >= w);
            Allowed::prefix(limit as u32)
        })
        .collect();
    let Some(states) = listcolor::solve(&rooted, &lists) else {
        return SolveResult::Infeasible;
    };
    let local = listcolor::witness(&rooted, &lists, &states);
    let mut assignment = alloc::vec![0usize; local.len()];
    for (i, &c) in local.iter().enumerate() {
        assignment[rooted.order[i]] = c as usize;
    }
    let witness = crate::coloring::Coloring::new(assignment, values.len()).expect("colors in range");
    let weight = coloring_weight(forest, &witness).expect("witness is total");
    SolveResult::Feasible(Solution { weight, tuple: tuple.clone(), witness })
}

/// `σ(G,w;r)`: minimum weight over colorings with at most `r` classes,
/// optionally only looking at weights `<= budget`.
pub fn sigma_r_tuple(forest: &WeightedForest, r: usize, budget: Option<&ScaledWeight>) -> SolveResult {
    search(forest, r, budget, Mode::Minimize)
}

/// `σ(G,w)`, the minimum over all proper colorings.
pub fn sigma_min(forest: &WeightedForest, budget: Option<&ScaledWeight>) -> SolveResult {
    search(forest, forest.vertex_count(), budget, Mode::Minimize)
}

/// Is there a proper coloring (with at most `r` classes, if given) of weight
/// `<= budget`? Returns the first witness found, not necessarily optimal.
pub fn decide_budget(forest: &WeightedForest, budget: &ScaledWeight, r: Option<usize>) -> SolveResult {
    search(forest, r.unwrap_or(forest.vertex_count()), Some(budget), Mode::First)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;

    fn forest(weights: &[u64], edges: &[(usize, usize)]) -> WeightedForest {
        let mut f = WeightedForest::new(1u32).unwrap();
        for &w in weights {
            f.add_vertex(ScaledWeight::from(w));
        }
        for &(u, v) in edges {
            f.add_edge(u, v).unwrap();
        }
        f
    }

    fn tuple(v: &[u64]) -> WeightTuple {
        WeightTuple::new(v.iter().map(|&x| ScaledWeight::from(x)).collect()).unwrap()
    }

    fn w(x: u64) -> ScaledWeight {
        ScaledWeight::from(x)
    }

    #[test]
    fn list_feasibility_examples() {
        let p2 = forest(&[3, 5], &[(0, 1)]);
        let ok = list_color_feasible(&p2, &tuple(&[5, 3]));
        let sol = ok.solution().unwrap();
        assert_eq!(sol.witness.color(1), 0);
        assert!(!list_color_feasible(&p2, &tuple(&[5])).is_feasible());
        assert!(!list_color_feasible(&p2, &tuple(&[3, 3])).is_feasible());
        assert!(!list_color_feasible(&p2, &tuple(&[])).is_feasible());
        assert!(WeightTuple::new(alloc::vec![w(1), w(2)]).is_err());
    }

    #[test]
    fn sigma_r_examples() {
        let p2 = forest(&[3, 5], &[(0, 1)]);
        assert_eq!(sigma_r_tuple(&p2, 2, None).weight(), Some(&w(8)));
        assert_eq!(sigma_r_tuple(&p2, 1, None), SolveResult::Infeasible);
        assert_eq!(sigma_r_tuple(&p2, 0, None), SolveResult::Infeasible);
        let star = forest(&[5, 3, 7], &[(0, 1), (0, 2)]);
        assert_eq!(sigma_r_tuple(&star, 2, None).weight(), Some(&w(12)));
    }

    #[test]
    fn sigma_min_examples() {
        let p3 = forest(&[1, 1, 1], &[(0, 1), (1, 2)]);
        assert_eq!(sigma_min(&p3, None).weight(), Some(&w(2)));
        let e3 = forest(&[1, 1, 1], &[]);
        assert_eq!(sigma_min(&e3, None).weight(), Some(&w(1)));
        // ends heavy: {ends} ∪ {middle} costs 5 + 1
        let heavy_ends = forest(&[5, 1, 5], &[(0, 1), (1, 2)]);
        let sol = sigma_min(&heavy_ends, None).into_solution().unwrap();
        assert_eq!(sol.weight, w(6));
        assert!(is_proper(&heavy_ends, &sol.witness).unwrap());
        let empty = WeightedForest::new(1u32).unwrap();
        let sol = sigma_min(&empty, None).into_solution().unwrap();
        assert_eq!(sol.weight, w(0));
        assert_eq!(sol.witness.color_count(), 0);
        assert_eq!(sigma_r_tuple(&empty, 0, None).weight(), Some(&w(0)));
    }

    #[test]
    fn budgets_are_inclusive() {
        let p2 = forest(&[3, 5], &[(0, 1)]);
        assert!(decide_budget(&p2, &w(8), None).is_feasible());
        assert!(!decide_budget(&p2, &w(7), None).is_feasible());
        assert!(!sigma_min(&p2, Some(&w(7))).is_feasible());
        assert!(!decide_budget(&p2, &w(100), Some(1)).is_feasible());
    }

    #[test]
    fn ties_pick_lexicographically_smallest_tuple() {
        // isolated weights 4 and 2,2: both {4},{2,2} and {4,2},{2} cost 6;
        // smallest tuple is (4, 2)
        let f = forest(&[4, 2, 2], &[(1, 2)]);
        let sol = sigma_min(&f, None).into_solution().unwrap();
        assert_eq!(sol.weight, w(6));
        assert_eq!(sol.tuple, tuple(&[4, 2]));
    }
}
