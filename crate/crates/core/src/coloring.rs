use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forest::{VertexId, WeightedForest};
use crate::weight::ScaledWeight;

/// Total assignment of vertices to colors `0..color_count`. Classes may be
/// empty; proper-ness is checked by [`is_proper`], not by the type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    assignment: Vec<usize>,
    color_count: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, color_count: usize) -> Result<Self> {
        if let Some(&c) = assignment.iter().find(|&&c| c >= color_count) {
            return Err(Error::invalid(alloc::format!("color {c} out of range for {color_count} colors")));
        }
        Ok(Coloring { assignment, color_count })
    }

    /// Builds a coloring with `color_count` = 1 + largest color used.
    pub fn from_assignment(assignment: Vec<usize>) -> Self {
        let color_count = assignment.iter().max().map_or(0, |&c| c + 1);
        Coloring { assignment, color_count }
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    /// Vertices of each color class, by color index.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.color_count];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn nonempty_class_count(&self) -> usize {
        let mut used = vec![false; self.color_count];
        for &c in &self.assignment {
            used[c] = true;
        }
        used.into_iter().filter(|&u| u).count()
    }

    /// Relabels colors by first occurrence in vertex order (restricted growth)
    /// and drops empty classes.
    pub fn canonical(&self) -> Coloring {
        let mut relabel = vec![usize::MAX; self.color_count];
        let mut next = 0;
        let assignment = self
            .assignment
            .iter()
            .map(|&c| {
                if relabel[c] == usize::MAX {
                    relabel[c] = next;
                    next += 1;
                }
                relabel[c]
            })
            .collect();
        Coloring { assignment, color_count: next }
    }

    /// Restriction to the first `n` vertices (ids are dense, so this is the
    /// coloring of the forest before later insertions).
    pub fn truncated(&self, n: usize) -> Coloring {
        Coloring { assignment: self.assignment[..n].to_vec(), color_count: self.color_count }
    }
}

fn check_total(forest: &WeightedForest, coloring: &Coloring) -> Result<()> {
    if coloring.len() != forest.vertex_count() {
        return Err(Error::invalid(alloc::format!(
            "coloring covers {} vertices, forest has {}",
            coloring.len(),
            forest.vertex_count()
        )));
    }
    Ok(())
}

/// True iff no edge is monochromatic.
pub fn is_proper(forest: &WeightedForest, coloring: &Coloring) -> Result<bool> {
    check_total(forest, coloring)?;
    Ok(forest.edges().all(|(u, v)| coloring.color(u) != coloring.color(v)))
}

/// Maximum weight of each color class; empty classes weigh zero.
pub fn class_weights(forest: &WeightedForest, coloring: &Coloring) -> Result<Vec<ScaledWeight>> {
    check_total(forest, coloring)?;
    let mut out = vec![ScaledWeight::zero(); coloring.color_count()];
    for (v, &c) in coloring.assignment().iter().enumerate() {
        if forest.weight(v) > &out[c] {
            out[c] = forest.weight(v).clone();
        }
    }
    Ok(out)
}

/// Sum over color classes of the heaviest member.
pub fn coloring_weight(forest: &WeightedForest, coloring: &Coloring) -> Result<ScaledWeight> {
    Ok(class_weights(forest, coloring)?.iter().sum())
}
