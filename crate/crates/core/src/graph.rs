use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Simple undirected graph used as input to the reductions. Vertex ids are
/// `0..n`; the input order is the bijection onto `0..n` used by the gadgets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl SourceGraph {
    pub fn new(n: usize) -> Self {
        SourceGraph { n, edges: BTreeSet::new(), adjacency: alloc::vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SourceGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid("edge endpoint out of range"));
        }
        if u == v {
            return Err(Error::invalid("self-loops are not allowed"));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return Err(Error::invalid("parallel edges are not allowed"));
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.adjacency[u].sort_unstable();
        self.adjacency[v].sort_unstable();
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Closed neighborhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adjacency[v].clone();
        out.push(v);
        out.sort_unstable();
        out
    }

    pub fn is_independent(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&u| u < self.n && self.adjacency[u].iter().all(|v| !set.contains(v)))
    }

    pub fn is_dominating(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&u| u < self.n)
            && (0..self.n).all(|v| set.contains(&v) || self.adjacency[v].iter().any(|u| set.contains(u)))
    }
}
