//! Canonical forms of vertex-weighted trees (AHU encoding rooted at the
//! center), used to share work between isomorphic components.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::forest::{VertexId, WeightedForest};
use crate::weight::ScaledWeight;

/// Interns rooted subtree shapes; keys from one `Canon` are comparable.
#[derive(Default)]
pub(crate) struct Canon {
    labels: BTreeMap<ScaledWeight, u32>,
    shapes: BTreeMap<(u32, Vec<u32>), u32>,
}

/// Isomorphism class of a weighted tree: codes of its center rootings.
pub(crate) type TreeKey = Vec<u32>;

impl Canon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Key of the tree spanned by `vertices`, skipping edges to `blocked`.
    pub fn key(&mut self, forest: &WeightedForest, vertices: &[VertexId], blocked: Option<VertexId>) -> TreeKey {
        if vertices.is_empty() {
            return Vec::new();
        }
        let local: BTreeMap<VertexId, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj: Vec<Vec<usize>> = vertices
            .iter()
            .map(|&v| {
                forest
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| Some(w) != blocked)
                    .filter_map(|w| local.get(w).copied())
                    .collect()
            })
            .collect();
        let mut key: Vec<u32> =
            centers(&adj).into_iter().map(|c| self.rooted_code(forest, vertices, &adj, c)).collect();
        key.sort_unstable();
        key
    }

    fn rooted_code(&mut self, forest: &WeightedForest, vertices: &[VertexId], adj: &[Vec<usize>], root: usize) -> u32 {
        let n = adj.len();
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![usize::MAX; n];
        parent[root] = root;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        let mut code = vec![0u32; n];
        let mut kids: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &v in order.iter().rev() {
            let mut children = core::mem::take(&mut kids[v]);
            children.sort_unstable();
            let label = self.label(forest.weight(vertices[v]));
            let next = self.shapes.len() as u32;
            code[v] = *self.shapes.entry((label, children)).or_insert(next);
            if v != root {
                kids[parent[v]].push(code[v]);
            }
        }
        code[root]
    }

    fn label(&mut self, w: &ScaledWeight) -> u32 {
        let next = self.labels.len() as u32;
        *self.labels.entry(w.clone()).or_insert(next)
    }
}

/// One or two centers, found by peeling leaves.
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}
