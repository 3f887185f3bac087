#![allow(dead_code)]

use maxcol_core::{ScaledWeight, WeightedForest};
use proptest::prelude::*;

/// A forest given by optional parent links (`parents[v] < v`) and weights.
pub fn build(weights: &[u64], parents: &[Option<usize>]) -> WeightedForest {
    let mut f = WeightedForest::new(1u32).unwrap();
    for &w in weights {
        f.add_vertex(ScaledWeight::from(w));
    }
    for (v, p) in parents.iter().enumerate() {
        if let Some(p) = p {
            f.add_edge(*p, v).unwrap();
        }
    }
    f
}

/// Random forests on `1..=max_n` vertices with weights from at most five values.
pub fn forest_strategy(max_n: usize) -> impl Strategy<Value = WeightedForest> {
    (1..=max_n, prop::collection::vec(1u64..40, 1..=5)).prop_flat_map(|(n, pool)| {
        let weights = prop::collection::vec(prop::sample::select(pool), n);
        let parents = (0..n)
            .map(|v| if v == 0 { Just(None).boxed() } else { prop::option::weighted(0.8, 0..v).boxed() })
            .collect::<Vec<_>>();
        (weights, parents).prop_map(|(w, p)| build(&w, &p))
    })
}

/// Every set partition of `0..n` as a restricted-growth string.
pub fn partitions(n: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(a: &mut Vec<usize>, n: usize, max: usize, visit: &mut dyn FnMut(&[usize])) {
        if a.len() == n {
            visit(a);
            return;
        }
        for c in 0..=max + 1 {
            if a.is_empty() && c > 0 {
                break;
            }
            a.push(c);
            rec(a, n, if c > max || a.len() == 1 { c.max(max) } else { max }, visit);
            a.pop();
        }
    }
    if n == 0 {
        visit(&[]);
        return;
    }
    rec(&mut Vec::new(), n, 0, &mut visit);
}

/// Brute-force minimum weight over proper partitions with at most `r` classes.
pub fn brute_sigma(f: &WeightedForest, r: Option<usize>) -> Option<u64> {
    let n = f.vertex_count();
    let w: Vec<u64> = f.weights().iter().map(|x| u64::try_from(x.numerator().clone()).unwrap()).collect();
    let edges: Vec<(usize, usize)> = f.edges().collect();
    let mut best: Option<u64> = None;
    partitions(n, |a| {
        let classes = a.iter().max().map_or(0, |m| m + 1);
        if r.is_some_and(|r| classes > r) || edges.iter().any(|&(u, v)| a[u] == a[v]) {
            return;
        }
        let mut maxima = vec![0u64; classes];
        for (v, &c) in a.iter().enumerate() {
            maxima[c] = maxima[c].max(w[v]);
        }
        let total = maxima.iter().sum();
        best = Some(best.map_or(total, |b: u64| b.min(total)));
    });
    best
}

pub fn num(w: &ScaledWeight) -> u64 {
    u64::try_from(w.numerator().clone()).unwrap()
}
