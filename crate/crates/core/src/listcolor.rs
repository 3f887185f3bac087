//! Tree dynamic program for list coloring where every list is either a prefix
//! `0..limit` of the colors or a single pinned color.
//!
//! Bottom-up, each vertex gets the set of its colors that extend to a proper
//! coloring of its subtree. Only whether that set is empty, a single color or
//! larger matters to the parent, so a vertex costs `O(deg log deg)` no matter
//! how many colors there are.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::forest::{VertexId, WeightedForest};

pub(crate) const NONE: u32 = u32::MAX;

/// A forest (or one component) laid out in BFS order: parents precede children
/// and the children of a vertex are contiguous.
#[derive(Clone, Debug)]
pub(crate) struct Rooted {
    /// Global vertex id of each local position.
    pub order: Vec<VertexId>,
    pub parent: Vec<u32>,
    pub child_start: Vec<u32>,
    pub child_end: Vec<u32>,
}

impl Rooted {
    /// Every component, each rooted at its smallest vertex.
    pub fn forest(forest: &WeightedForest) -> Rooted {
        let n = forest.vertex_count();
        let mut seen = vec![false; n];
        let mut b = Builder::with_capacity(n);
        for s in 0..n {
            if !seen[s] {
                b.bfs(forest, s, &mut seen);
            }
        }
        b.finish()
    }

    /// The component of `root`, rooted there.
    pub fn component(forest: &WeightedForest, root: VertexId) -> Rooted {
        let mut seen = vec![false; forest.vertex_count()];
        let mut b = Builder::with_capacity(0);
        b.bfs(forest, root, &mut seen);
        b.finish()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn children(&self, i: usize) -> core::ops::Range<usize> {
        self.child_start[i] as usize..self.child_end[i] as usize
    }
}

struct Builder {
    order: Vec<VertexId>,
    parent: Vec<u32>,
    child_start: Vec<u32>,
    child_end: Vec<u32>,
}

impl Builder {
    fn with_capacity(n: usize) -> Self {
        Builder {
            order: Vec::with_capacity(n),
            parent: Vec::with_capacity(n),
            child_start: Vec::with_capacity(n),
            child_end: Vec::with_capacity(n),
        }
    }

    fn bfs(&mut self, forest: &WeightedForest, root: VertexId, seen: &mut [bool]) {
        let mut queue = VecDeque::new();
        seen[root] = true;
        self.order.push(root);
        self.parent.push(NONE);
        queue.push_back(self.order.len() - 1);
        while let Some(i) = queue.pop_front() {
            let v = self.order[i];
            let start = self.order.len() as u32;
            for &w in forest.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    self.order.push(w);
                    self.parent.push(i as u32);
                    queue.push_back(self.order.len() - 1);
                }
            }
            self.child_start.push(start);
            self.child_end.push(self.order.len() as u32);
        }
    }

    fn finish(self) -> Rooted {
        Rooted { order: self.order, parent: self.parent, child_start: self.child_start, child_end: self.child_end }
    }
}

/// Allowed colors of one vertex: `{pin}` if pinned, else `0..limit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Allowed {
    pub limit: u32,
    pub pin: u32,
}

impl Allowed {
    /// No constraint at all; used for vertices outside the checked subforest.
    pub const ANY: Allowed = Allowed { limit: u32::MAX, pin: NONE };

    pub fn prefix(limit: u32) -> Self {
        Allowed { limit, pin: NONE }
    }

    pub fn pinned(color: u32, limit: u32) -> Self {
        Allowed { limit, pin: color }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Feasible {
    Empty,
    Single(u32),
    Multi,
}

/// Colors forced on children, sorted and deduplicated.
fn forced_by_children(rooted: &Rooted, states: &[Feasible], i: usize, buf: &mut Vec<u32>) {
    buf.clear();
    for ch in rooted.children(i) {
        if let Feasible::Single(c) = states[ch] {
            buf.push(c);
        }
    }
    buf.sort_unstable();
    buf.dedup();
}

fn state_of(allowed: Allowed, excluded: &[u32]) -> Feasible {
    if allowed.pin != NONE {
        if allowed.pin < allowed.limit && excluded.binary_search(&allowed.pin).is_err() {
            return Feasible::Single(allowed.pin);
        }
        return Feasible::Empty;
    }
    let blocked = excluded.iter().take_while(|&&c| c < allowed.limit).count() as u64;
    match allowed.limit as u64 - blocked {
        0 => Feasible::Empty,
        1 => Feasible::Single(first_free(allowed, excluded, NONE).expect("one color left")),
        _ => Feasible::Multi,
    }
}

fn first_free(allowed: Allowed, excluded: &[u32], avoid: u32) -> Option<u32> {
    if allowed.pin != NONE {
        let ok = allowed.pin < allowed.limit && allowed.pin != avoid && excluded.binary_search(&allowed.pin).is_err();
        return ok.then_some(allowed.pin);
    }
    let mut c = 0u32;
    let mut ex = excluded.iter().peekable();
    while c < allowed.limit {
        while ex.peek().is_some_and(|&&e| e < c) {
            ex.next();
        }
        if ex.peek() == Some(&&c) || c == avoid {
            c += 1;
            continue;
        }
        return Some(c);
    }
    None
}

/// Bottom-up pass. Returns `None` as soon as some vertex has no color left.
pub(crate) fn solve(rooted: &Rooted, lists: &[Allowed]) -> Option<Vec<Feasible>> {
    let n = rooted.len();
    let mut states = vec![Feasible::Multi; n];
    let mut buf = Vec::new();
    for i in (0..n).rev() {
        forced_by_children(rooted, &states, i, &mut buf);
        let st = state_of(lists[i], &buf);
        if st == Feasible::Empty {
            return None;
        }
        states[i] = st;
    }
    Some(states)
}

pub(crate) fn is_feasible(rooted: &Rooted, lists: &[Allowed]) -> bool {
    solve(rooted, lists).is_some()
}

/// Top-down pass: smallest admissible color everywhere. Local order.
pub(crate) fn witness(rooted: &Rooted, lists: &[Allowed], states: &[Feasible]) -> Vec<u32> {
    let n = rooted.len();
    let mut colors = vec![NONE; n];
    let mut buf = Vec::new();
    for i in 0..n {
        forced_by_children(rooted, states, i, &mut buf);
        let avoid = match rooted.parent[i] {
            NONE => NONE,
            p => colors[p as usize],
        };
        colors[i] = first_free(lists[i], &buf, avoid).expect("feasible state extends");
    }
    colors
}

/// Colors each vertex may take in some proper list coloring, ignoring its
/// parent. Lists must be finite.
pub(crate) fn candidate_sets(rooted: &Rooted, lists: &[Allowed], states: &[Feasible]) -> Vec<Vec<u32>> {
    let mut buf = Vec::new();
    (0..rooted.len())
        .map(|i| {
            forced_by_children(rooted, states, i, &mut buf);
            let a = lists[i];
            if a.pin != NONE {
                return first_free(a, &buf, NONE).into_iter().collect();
            }
            debug_assert!(a.limit != u32::MAX);
            (0..a.limit).filter(|c| buf.binary_search(c).is_err()).collect()
        })
        .collect()
}

/// Calls `visit` once for every proper list coloring (local order). Never
/// backtracks out of a dead end: every candidate extends.
pub(crate) fn for_each_coloring<F>(rooted: &Rooted, cands: &[Vec<u32>], mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    let n = rooted.len();
    let mut colors = vec![NONE; n];
    if n == 0 {
        return visit(&colors);
    }
    let mut next = vec![0usize; n];
    let mut pos = 0usize;
    loop {
        let avoid = match rooted.parent[pos] {
            NONE => NONE,
            p => colors[p as usize],
        };
        let list = &cands[pos];
        let mut k = next[pos];
        while k < list.len() && list[k] == avoid {
            k += 1;
        }
        if k < list.len() {
            colors[pos] = list[k];
            next[pos] = k + 1;
            if pos + 1 == n {
                visit(&colors)?;
            } else {
                pos += 1;
                next[pos] = 0;
            }
        } else {
            if pos == 0 {
                return ControlFlow::Continue(());
            }
            pos -= 1;
        }
    }
}
