//! Exact weighted coloring (max-coloring) on forests.
//!
//! The crate provides an exact data model for vertex-weighted forests, exact
//! solvers for the weighted chromatic number `σ(G,w)` and its color-bounded
//! variant `σ(G,w;r)`, the binomial / auxiliary / AND / vertex-tree gadgets,
//! the Independent Set and Dominating Set reductions built from them, and a
//! set of checkers that exercise the gadget properties exhaustively on small
//! parameter points.
//!
//! Everything is `no_std` with `alloc`; weights are exact integers over a
//! per-forest denominator.

#![no_std]

extern crate alloc;

mod canon;
pub mod coloring;
pub mod error;
pub mod forest;
pub mod gadgets;
pub mod graph;
mod listcolor;
pub mod reductions;
pub mod solvers;
pub mod verify;
pub mod weight;

pub use coloring::{coloring_weight, is_proper, Coloring};
pub use error::{Error, Result};
pub use forest::{VertexId, WeightedForest};
pub use gadgets::{Anchor, GadgetHandle, GadgetParams, LevelWeight};
pub use graph::SourceGraph;
pub use reductions::{GadgetTag, Problem, ReductionInstance, Role, RoleKind, SolutionSet};
pub use solvers::{Solution, SolveResult, WeightTuple};
pub use weight::ScaledWeight;
