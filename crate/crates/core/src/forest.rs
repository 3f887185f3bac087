use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::weight::ScaledWeight;

/// Dense vertex index, assigned in insertion order.
pub type VertexId = usize;

/// A vertex-weighted forest. All weights share one positive denominator.
#[derive(Clone, Debug)]
pub struct WeightedForest {
    denominator: BigUint,
    weights: Vec<ScaledWeight>,
    adjacency: Vec<Vec<VertexId>>,
    edges: BTreeSet<(VertexId, VertexId)>,
    // union-find over vertices, used to reject cycles on insertion
    uf_parent: Vec<VertexId>,
}

impl PartialEq for WeightedForest {
    fn eq(&self, other: &Self) -> bool {
        self.denominator == other.denominator && self.weights == other.weights && self.edges == other.edges
    }
}

impl Eq for WeightedForest {}

impl WeightedForest {
    pub fn new(denominator: impl Into<BigUint>) -> Result<Self> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(Error::invalid("denominator must be positive"));
        }
        Ok(WeightedForest {
            denominator,
            weights: Vec::new(),
            adjacency: Vec::new(),
            edges: BTreeSet::new(),
            uf_parent: Vec::new(),
        })
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn add_vertex(&mut self, weight: ScaledWeight) -> VertexId {
        let id = self.weights.len();
        self.weights.push(weight);
        self.adjacency.push(Vec::new());
        self.uf_parent.push(id);
        id
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::invalid("edge endpoint is not a vertex"));
        }
        if u == v {
            return Err(Error::invalid("self-loops are not allowed"));
        }
        let key = (u.min(v), u.max(v));
        if self.edges.contains(&key) {
            return Err(Error::invalid("parallel edges are not allowed"));
        }
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return Err(Error::Cycle { u, v });
        }
        self.uf_parent[ru] = rv;
        self.edges.insert(key);
        insert_sorted(&mut self.adjacency[u], v);
        insert_sorted(&mut self.adjacency[v], u);
        Ok(())
    }

    fn find(&mut self, mut x: VertexId) -> VertexId {
        while self.uf_parent[x] != x {
            let up = self.uf_parent[self.uf_parent[x]];
            self.uf_parent[x] = up;
            x = up;
        }
        x
    }

    pub fn weight(&self, v: VertexId) -> &ScaledWeight {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[ScaledWeight] {
        &self.weights
    }

    pub(crate) fn set_weight(&mut self, v: VertexId, w: ScaledWeight) {
        self.weights[v] = w;
    }

    /// Neighbors of `v` in increasing id order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Disjoint union; returns the combined forest and the new id of every
    /// vertex of `other` (indexed by its old id).
    pub fn disjoint_union(&self, other: &WeightedForest) -> Result<(WeightedForest, Vec<VertexId>)> {
        if self.denominator != other.denominator {
            return Err(Error::invalid("denominators differ"));
        }
        let mut out = self.clone();
        let remap = out.absorb(other);
        Ok((out, remap))
    }

    /// Appends a copy of `other` (same denominator assumed) and returns the id remap.
    pub(crate) fn absorb(&mut self, other: &WeightedForest) -> Vec<VertexId> {
        let remap: Vec<VertexId> = other.weights.iter().map(|w| self.add_vertex(w.clone())).collect();
        for (u, v) in other.edges() {
            self.add_edge(remap[u], remap[v]).expect("copy of a forest stays acyclic");
        }
        remap
    }

    /// Same forest with every numerator multiplied by `factor` and the
    /// denominator scaled accordingly.
    pub fn rescaled(&self, factor: u32) -> WeightedForest {
        let mut out = self.clone();
        out.denominator *= factor;
        for w in &mut out.weights {
            *w = w.rescaled(factor);
        }
        out
    }

    /// Largest vertex weight, `None` on the empty forest.
    pub fn max_weight(&self) -> Option<&ScaledWeight> {
        self.weights.iter().max()
    }

    pub fn total_weight(&self) -> ScaledWeight {
        self.weights.iter().sum()
    }
}

fn insert_sorted(list: &mut Vec<VertexId>, x: VertexId) {
    let pos = list.binary_search(&x).unwrap_or_else(|p| p);
    list.insert(pos, x);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(f: &mut WeightedForest, w: u64) -> VertexId {
        f.add_vertex(ScaledWeight::from(w))
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(WeightedForest::new(0u32).is_err());
        assert_eq!(WeightedForest::new(512u32).unwrap().vertex_count(), 0);
        assert!(WeightedForest::new(1u32).is_ok());
    }

    #[test]
    fn ids_are_dense() {
        let mut f = WeightedForest::new(512u32).unwrap();
        assert_eq!(unit(&mut f, 64), 0);
        assert_eq!(unit(&mut f, 0), 1);
        assert_eq!(f.vertex_count(), 2);
    }

    #[test]
    fn edge_errors() {
        let mut f = WeightedForest::new(1u32).unwrap();
        let (a, b, c) = (unit(&mut f, 1), unit(&mut f, 1), unit(&mut f, 1));
        f.add_edge(a, b).unwrap();
        f.add_edge(b, c).unwrap();
        assert!(matches!(f.add_edge(a, b), Err(Error::InvalidArgument(_))));
        assert!(matches!(f.add_edge(b, a), Err(Error::InvalidArgument(_))));
        assert_eq!(f.add_edge(c, a), Err(Error::Cycle { u: c, v: a }));
        assert!(matches!(f.add_edge(a, a), Err(Error::InvalidArgument(_))));
        assert!(matches!(f.add_edge(a, 7), Err(Error::InvalidArgument(_))));
        assert_eq!(f.edge_count(), 2);
    }

    #[test]
    fn components_in_order() {
        let mut f = WeightedForest::new(1u32).unwrap();
        for _ in 0..3 {
            unit(&mut f, 1);
        }
        assert_eq!(f.components(), alloc::vec![alloc::vec![0], alloc::vec![1], alloc::vec![2]]);
        f.add_edge(2, 0).unwrap();
        f.add_edge(1, 2).unwrap();
        assert_eq!(f.components(), alloc::vec![alloc::vec![0, 1, 2]]);
    }

    #[test]
    fn union_of_paths() {
        let mut p2 = WeightedForest::new(4u32).unwrap();
        unit(&mut p2, 1);
        unit(&mut p2, 2);
        p2.add_edge(0, 1).unwrap();
        let mut p3 = WeightedForest::new(4u32).unwrap();
        for w in [3, 4, 5] {
            unit(&mut p3, w);
        }
        p3.add_edge(0, 1).unwrap();
        p3.add_edge(1, 2).unwrap();
        let (u, remap) = p2.disjoint_union(&p3).unwrap();
        assert_eq!(u.vertex_count(), 5);
        assert_eq!(u.edge_count(), 3);
        assert_eq!(u.components().len(), 2);
        assert_eq!(remap, alloc::vec![2, 3, 4]);

        let empty = WeightedForest::new(4u32).unwrap();
        let (same, remap) = p3.disjoint_union(&empty).unwrap();
        assert_eq!(same, p3);
        assert!(remap.is_empty());

        let other = WeightedForest::new(8u32).unwrap();
        assert!(p2.disjoint_union(&other).is_err());
    }
}
