mod common;

use std::ops::ControlFlow;

use common::{brute_sigma, num};
use maxcol_core::solvers::{decide_budget, enumerate_colorings, list_color_feasible, sigma_min, sigma_r_tuple};
use maxcol_core::{coloring_weight, is_proper, ScaledWeight, SolveResult, WeightTuple, WeightedForest};
use proptest::prelude::*;

fn checked(f: &WeightedForest, r: &SolveResult) -> Option<u64> {
    let sol = r.solution()?;
    assert!(is_proper(f, &sol.witness).unwrap());
    assert_eq!(coloring_weight(f, &sol.witness).unwrap(), sol.weight);
    Some(num(&sol.weight))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sigma_matches_partition_oracle(f in common::forest_strategy(9)) {
        prop_assert_eq!(checked(&f, &sigma_min(&f, None)), brute_sigma(&f, None));
        for r in 1..=4 {
            prop_assert_eq!(checked(&f, &sigma_r_tuple(&f, r, None)), brute_sigma(&f, Some(r)), "r = {}", r);
        }
    }

    #[test]
    fn more_colors_never_cost_more(f in common::forest_strategy(9)) {
        let mut prev: Option<ScaledWeight> = None;
        for r in 1..=f.vertex_count() {
            let cur = sigma_r_tuple(&f, r, None).weight().cloned();
            if let (Some(p), Some(c)) = (&prev, &cur) {
                prop_assert!(c <= p);
            }
            if prev.is_some() {
                prop_assert!(cur.is_some());
            }
            prev = cur;
        }
        prop_assert_eq!(prev, sigma_min(&f, None).weight().cloned());
    }

    #[test]
    fn enumerator_minimum_is_sigma(f in common::forest_strategy(8)) {
        let budget = f.total_weight();
        let mut best: Option<ScaledWeight> = None;
        let mut seen = std::collections::BTreeSet::new();
        enumerate_colorings(&f, &budget, |c, w| {
            assert!(is_proper(&f, c).unwrap());
            assert_eq!(&coloring_weight(&f, c).unwrap(), w);
            assert_eq!(c, &c.canonical());
            assert!(seen.insert(c.assignment().to_vec()), "duplicate coloring");
            if best.as_ref().is_none_or(|b| w < b) {
                best = Some(w.clone());
            }
            ControlFlow::Continue(())
        });
        prop_assert_eq!(best, sigma_min(&f, None).weight().cloned());
    }

    #[test]
    fn enumerator_covers_every_cheap_partition(f in common::forest_strategy(7), slack in 0u64..30) {
        let budget = ScaledWeight::from(brute_sigma(&f, None).unwrap() + slack);
        let mut expected = 0usize;
        let w: Vec<u64> = f.weights().iter().map(num).collect();
        let edges: Vec<(usize, usize)> = f.edges().collect();
        common::partitions(f.vertex_count(), |a| {
            if edges.iter().any(|&(u, v)| a[u] == a[v]) {
                return;
            }
            let classes = a.iter().max().map_or(0, |m| m + 1);
            let mut maxima = vec![0u64; classes];
            for (v, &c) in a.iter().enumerate() {
                maxima[c] = maxima[c].max(w[v]);
            }
            if maxima.iter().sum::<u64>() <= num(&budget) {
                expected += 1;
            }
        });
        prop_assert_eq!(enumerate_colorings(&f, &budget, |_, _| ControlFlow::Continue(())), expected);
    }

    #[test]
    fn budget_decision_is_exact_at_the_optimum(f in common::forest_strategy(9)) {
        let sigma = sigma_min(&f, None).weight().cloned().unwrap();
        prop_assert!(decide_budget(&f, &sigma, None).is_feasible());
        if !sigma.is_zero() {
            let below = ScaledWeight::new(sigma.numerator() - 1u32);
            prop_assert!(!decide_budget(&f, &below, None).is_feasible());
        }
    }

    #[test]
    fn raising_a_tuple_keeps_it_feasible(f in common::forest_strategy(9), picks in prop::collection::vec((0usize..9, 0usize..9), 1..5)) {
        let mut distinct: Vec<ScaledWeight> = f.weights().to_vec();
        distinct.sort_unstable_by(|a, b| b.cmp(a));
        distinct.dedup();
        let mut low: Vec<ScaledWeight> = picks.iter().map(|&(a, _)| distinct[a % distinct.len()].clone()).collect();
        let mut high: Vec<ScaledWeight> = picks
            .iter()
            .map(|&(a, b)| distinct[(a % distinct.len()).min(b % distinct.len())].clone())
            .collect();
        // pair entries up after sorting so high dominates low pointwise
        low.sort_unstable_by(|a, b| b.cmp(a));
        high.sort_unstable_by(|a, b| b.cmp(a));
        prop_assume!(low.iter().zip(&high).all(|(l, h)| l <= h));
        let lo = list_color_feasible(&f, &WeightTuple::new(low).unwrap());
        let hi = list_color_feasible(&f, &WeightTuple::new(high).unwrap());
        prop_assert!(!lo.is_feasible() || hi.is_feasible());
        checked(&f, &lo);
        checked(&f, &hi);
    }
}

#[test]
fn unit_weights_give_the_chromatic_number() {
    let edgeless = common::build(&[1, 1, 1], &[None, None, None]);
    assert_eq!(sigma_min(&edgeless, None).weight().map(num), Some(1));
    let path = common::build(&[1, 1, 1], &[None, Some(0), Some(1)]);
    assert_eq!(sigma_min(&path, None).weight().map(num), Some(2));
    let empty = WeightedForest::new(1u32).unwrap();
    assert_eq!(sigma_min(&empty, None).weight().map(num), Some(0));
}

#[test]
fn tie_break_is_lexicographically_smallest() {
    // path 4 - 2 - 2: optima (4, 2) only, but the lone weight-2 leaf could go
    // either way; the tuple reported must be the smallest non-increasing one
    let f = common::build(&[4, 2, 2], &[None, Some(0), Some(1)]);
    let sol = sigma_min(&f, None).into_solution().unwrap();
    let values: Vec<u64> = sol.tuple.values().iter().map(num).collect();
    assert_eq!(values, vec![4, 2]);
}
