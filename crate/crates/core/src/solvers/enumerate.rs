use alloc::vec;
use core::ops::ControlFlow;

use super::tuple::{Mode, TupleSearch};
use super::Prepared;
use crate::coloring::Coloring;
use crate::forest::WeightedForest;
use crate::listcolor;
use crate::weight::ScaledWeight;

/// Calls `visitor` once per proper coloring of weight `<= budget`, up to
/// renaming of colors. Each coloring is passed in restricted-growth form
/// (colors numbered by first occurrence in vertex order) with its weight.
///
/// Returns the number of visits. The search is exhaustive; callers keep
/// instances small.
pub fn enumerate_colorings<F>(forest: &WeightedForest, budget: &ScaledWeight, mut visitor: F) -> usize
where
    F: FnMut(&Coloring, &ScaledWeight) -> ControlFlow<()>,
{
    let prep = Prepared::new(forest);
    let n = forest.vertex_count();
    let mut visits = 0usize;
    let mut search = TupleSearch::new(&prep, n, Some(budget.clone()), Mode::All);
    search.run(|tuple, sum| {
        let lists = prep.lists(tuple, prep.rank_count() as u32);
        let Some(states) = listcolor::solve(&prep.rooted, &lists) else {
            return ControlFlow::Continue(());
        };
        let cands = listcolor::candidate_sets(&prep.rooted, &lists, &states);
        let classes = tuple.len();
        let mut attained = vec![false; classes];
        let mut min_vertex = vec![usize::MAX; classes];
        let mut assignment = vec![0usize; n];
        listcolor::for_each_coloring(&prep.rooted, &cands, |local| {
            attained.fill(false);
            min_vertex.fill(usize::MAX);
            for (i, &c) in local.iter().enumerate() {
                let c = c as usize;
                let v = prep.rooted.order[i];
                assignment[v] = c;
                if prep.rank[i] == tuple[c] {
                    attained[c] = true;
                }
                min_vertex[c] = min_vertex[c].min(v);
            }
            // every class must reach its tuple weight, and classes of equal
            // weight are only counted in one order
            if attained.iter().any(|a| !a) {
                return ControlFlow::Continue(());
            }
            for c in 1..classes {
                if tuple[c] == tuple[c - 1] && min_vertex[c] < min_vertex[c - 1] {
                    return ControlFlow::Continue(());
                }
            }
            visits += 1;
            let coloring = Coloring::new(assignment.clone(), classes).expect("colors come from the tuple").canonical();
            visitor(&coloring, sum)
        })
    });
    visits
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

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

    fn collect(f: &WeightedForest, budget: u64) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        enumerate_colorings(f, &ScaledWeight::from(budget), |c, _| {
            out.push(c.assignment().to_vec());
            ControlFlow::Continue(())
        });
        out.sort();
        out
    }

    #[test]
    fn single_edge() {
        assert_eq!(collect(&forest(&[1, 1], &[(0, 1)]), 2), vec![vec![0, 1]]);
    }

    #[test]
    fn over_budget_vertex() {
        assert!(collect(&forest(&[5], &[]), 4).is_empty());
    }

    #[test]
    fn path_of_three_unit_weights() {
        // partitions of P3 into stable sets: {0,2}{1} costs 2, all singletons 3
        assert_eq!(collect(&forest(&[1, 1, 1], &[(0, 1), (1, 2)]), 2), vec![vec![0, 1, 0]]);
        assert_eq!(collect(&forest(&[1, 1, 1], &[(0, 1), (1, 2)]), 3), vec![vec![0, 1, 0], vec![0, 1, 2]]);
    }

    #[test]
    fn edgeless_counts_bell_numbers() {
        // every partition of 4 isolated unit vertices, with cost = #blocks
        let f = forest(&[1, 1, 1, 1], &[]);
        assert_eq!(collect(&f, 4).len(), 15);
        assert_eq!(collect(&f, 2).len(), 1 + 7);
    }

    #[test]
    fn early_stop() {
        let f = forest(&[1, 1, 1, 1], &[]);
        let mut seen = 0;
        enumerate_colorings(&f, &ScaledWeight::from(4), |_, _| {
            seen += 1;
            if seen == 3 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(seen, 3);
    }
}
