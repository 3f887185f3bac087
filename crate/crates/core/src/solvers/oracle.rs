use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::SourceGraph;

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for pos in (0..k).rev() {
        if idx[pos] < n - k + pos {
            idx[pos] += 1;
            for q in pos + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn first_subset<P>(n: usize, k: usize, mut accept: P) -> Option<BTreeSet<usize>>
where
    P: FnMut(&[usize]) -> bool,
{
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if accept(&idx) {
            return Some(idx.iter().copied().collect());
        }
        if !next_combination(&mut idx, n) {
            return None;
        }
    }
}

/// Some independent set of exactly `k` vertices (hence of size `>= k`), if any.
pub fn max_is(graph: &SourceGraph, k: usize) -> Option<BTreeSet<usize>> {
    first_subset(graph.vertex_count(), k, |set| {
        set.iter().enumerate().all(|(a, &u)| set[a + 1..].iter().all(|&v| !graph.has_edge(u, v)))
    })
}

/// Some dominating set of at most `k` vertices, smallest sizes tried first.
pub fn min_ds(graph: &SourceGraph, k: usize) -> Option<BTreeSet<usize>> {
    let n = graph.vertex_count();
    let mut dominated = alloc::vec![false; n];
    (0..=k.min(n)).find_map(|size| {
        first_subset(n, size, |set| {
            dominated.fill(false);
            for &u in set {
                dominated[u] = true;
                for &v in graph.neighbors(u) {
                    dominated[v] = true;
                }
            }
            dominated.iter().all(|&d| d)
        })
    })
}
