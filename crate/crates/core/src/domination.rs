//! Exact minimum dominating sets.
//!
//! [`gamma`] is a branch-and-bound search; [`gamma_bruteforce`] enumerates
//! subsets by increasing size and serves as an independent oracle;
//! [`gamma_tree`] is a linear-time dynamic program for trees.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A vertex set certified to dominate the graph with the recorded fingerprint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominatingSet {
    vertices: Vec<VertexId>,
    graph_fingerprint: u64,
}

impl DominatingSet {
    /// Returns `None` unless `vertices` dominates `g`.
    pub fn certify(g: &Graph, mut vertices: Vec<VertexId>) -> Option<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        is_dominating(g, &vertices).then(|| DominatingSet {
            vertices,
            graph_fingerprint: g.fingerprint(),
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn graph_fingerprint(&self) -> u64 {
        self.graph_fingerprint
    }

    pub fn certifies(&self, g: &Graph) -> bool {
        self.graph_fingerprint == g.fingerprint() && is_dominating(g, &self.vertices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    pub gamma: usize,
    pub witness: DominatingSet,
}

impl GammaResult {
    fn new(g: &Graph, set: Vec<VertexId>) -> Self {
        let witness = DominatingSet::certify(g, set).expect("solver produced a non-dominating set");
        GammaResult {
            gamma: witness.len(),
            witness,
        }
    }
}

/// True iff every vertex is in `d` or adjacent to a member of `d`.
/// Out-of-range ids make the answer `false`.
pub fn is_dominating(g: &Graph, d: &[VertexId]) -> bool {
    let mut covered = vec![false; g.n()];
    for &v in d {
        if v >= g.n() {
            return false;
        }
        covered[v] = true;
        for &u in g.adj(v) {
            covered[u] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Exact domination number by branch and bound.
pub fn gamma(g: &Graph) -> GammaResult {
    Solver::new(g).solve(&[])
}

/// Minimum dominating set among those containing every vertex of `forced`.
pub fn gamma_forced(g: &Graph, forced: &[VertexId]) -> Result<GammaResult> {
    if let Some(&v) = forced.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(Solver::new(g).solve(forced))
}

/// Domination number only, dispatching to the tree dynamic program when `g`
/// is a tree.
pub fn domination_number(g: &Graph) -> usize {
    if g.is_tree() {
        tree_dp(g).0
    } else {
        gamma(g).gamma
    }
}

/// `𝒩(G)`: vertices contained in no minimum dominating set.
pub fn no_gamma_set_vertices(g: &Graph) -> Vec<VertexId> {
    let solver = Solver::new(g);
    let base = solver.minimum_set(&[]).len();
    g.vertices()
        .into_par_iter()
        .filter(|&v| solver.minimum_set(&[v]).len() > base)
        .collect()
}

pub const DEFAULT_BRUTEFORCE_CAP: usize = 20;

/// Exact domination number by exhaustive subset enumeration (increasing
/// size, lexicographic within a size), refusing graphs above `cap` vertices.
pub fn gamma_bruteforce_capped(g: &Graph, cap: usize) -> Result<GammaResult> {
    let n = g.n();
    if n > cap.min(63) {
        return Err(Error::CapExceeded { size: n, cap: cap.min(63) });
    }
    let closed: Vec<u64> = g
        .vertices()
        .map(|v| g.adj(v).iter().fold(1u64 << v, |m, &u| m | 1 << u))
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let cover = combo.iter().fold(0u64, |m, &v| m | closed[v]);
            if cover == full {
                return Ok(GammaResult::new(g, combo));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

pub fn gamma_bruteforce(g: &Graph) -> Result<GammaResult> {
    gamma_bruteforce_capped(g, DEFAULT_BRUTEFORCE_CAP)
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact domination number of a tree by rooted dynamic programming.
pub fn gamma_tree(t: &Graph) -> Result<GammaResult> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let (_, set) = tree_dp(t);
    Ok(GammaResult::new(t, set))
}

const INF: usize = usize::MAX / 4;

// Per-vertex DP states for the subtree rooted at v:
//   IN  - v in the set
//   DOM - v not in the set, dominated by a child
//   UND - v not in the set, not yet dominated (its parent must be in the set)
#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    In,
    Dom,
    Und,
}

fn tree_dp(t: &Graph) -> (usize, Vec<VertexId>) {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in t.adj(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let parent = &parent;
    let children = |v: VertexId| {
        t.adj(v)
            .iter()
            .copied()
            .filter(move |&u| parent[u] == v && u != v)
    };

    let mut cost_in = vec![0; n];
    let mut cost_dom = vec![0; n];
    let mut cost_und = vec![0; n];
    for &v in order.iter().rev() {
        let mut sum_in = 1;
        let mut sum_dom = 0;
        let mut penalty = INF;
        let mut sum_und = 0;
        for c in children(v) {
            sum_in += cost_in[c].min(cost_dom[c]).min(cost_und[c]);
            let best = cost_in[c].min(cost_dom[c]);
            sum_dom += best;
            penalty = penalty.min(cost_in[c] - best);
            sum_und = (sum_und + cost_dom[c]).min(INF);
        }
        cost_in[v] = sum_in;
        cost_dom[v] = (sum_dom + penalty).min(INF);
        cost_und[v] = sum_und;
    }

    // reconstruct top-down
    let root_state = if cost_in[0] <= cost_dom[0] {
        State::In
    } else {
        State::Dom
    };
    let gamma = cost_in[0].min(cost_dom[0]);
    let mut state = vec![State::In; n];
    state[0] = root_state;
    let mut set = Vec::with_capacity(gamma);
    for &v in &order {
        match state[v] {
            State::In => {
                set.push(v);
                for c in children(v) {
                    state[c] = if cost_in[c] <= cost_dom[c].min(cost_und[c]) {
                        State::In
                    } else if cost_dom[c] <= cost_und[c] {
                        State::Dom
                    } else {
                        State::Und
                    };
                }
            }
            State::Dom => {
                let mut forced = None;
                let mut best_penalty = INF;
                for c in children(v) {
                    let p = cost_in[c] - cost_in[c].min(cost_dom[c]);
                    if p < best_penalty {
                        best_penalty = p;
                        forced = Some(c);
                    }
                }
                for c in children(v) {
                    state[c] = if Some(c) == forced || cost_in[c] <= cost_dom[c] {
                        State::In
                    } else {
                        State::Dom
                    };
                }
            }
            State::Und => {
                for c in children(v) {
                    state[c] = State::Dom;
                }
            }
        }
    }
    debug_assert_eq!(set.len(), gamma);
    (gamma, set)
}

/// Branch-and-bound state shared across one graph.
struct Solver<'g> {
    g: &'g Graph,
    n: usize,
    closed: Vec<Bits>,
}

struct Search<'a> {
    solver: &'a Solver<'a>,
    best: Vec<VertexId>,
    chosen: Vec<VertexId>,
}

impl<'g> Solver<'g> {
    fn new(g: &'g Graph) -> Self {
        Solver {
            g,
            n: g.n(),
            closed: g.closed_masks(),
        }
    }

    fn solve(&self, forced: &[VertexId]) -> GammaResult {
        GammaResult::new(self.g, self.minimum_set(forced))
    }

    fn minimum_set(&self, forced: &[VertexId]) -> Vec<VertexId> {
        let mut dominated = Bits::empty(self.n);
        let mut chosen = Vec::new();
        for &f in forced {
            if !chosen.contains(&f) {
                chosen.push(f);
                dominated.union_with(&self.closed[f]);
            }
        }
        let best = self.greedy(&dominated, &chosen);
        let mut search = Search {
            solver: self,
            best,
            chosen,
        };
        search.branch(&dominated, &Bits::empty(self.n));
        search.best
    }

    fn greedy(&self, dominated: &Bits, chosen: &[VertexId]) -> Vec<VertexId> {
        let mut dominated = dominated.clone();
        let mut set = chosen.to_vec();
        let mut remaining = self.n - dominated.len();
        while remaining > 0 {
            let v = (0..self.n)
                .max_by_key(|&v| (self.closed[v].count_minus(&dominated), std::cmp::Reverse(v)))
                .unwrap();
            set.push(v);
            dominated.union_with(&self.closed[v]);
            remaining = self.n - dominated.len();
        }
        set
    }
}

impl Search<'_> {
    fn branch(&mut self, dominated: &Bits, excluded: &Bits) {
        let s = self.solver;
        let undominated = s.n - dominated.len();
        if undominated == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + 1 >= self.best.len() {
            return;
        }

        // Lower bound 1: undominated vertices whose candidate dominators are
        // pairwise disjoint each need their own set member.
        // Lower bound 2: ceil(undominated / best single-vertex gain).
        let full = Bits::full(s.n);
        let mut used = Bits::empty(s.n);
        let mut packing = 0;
        let mut pick: Option<(usize, VertexId)> = None;
        for v in full.iter_minus(dominated) {
            let options = s.closed[v].count_minus(excluded);
            if options == 0 {
                return;
            }
            if pick.is_none_or(|(o, _)| options < o) {
                pick = Some((options, v));
            }
            let cand = s.closed[v].difference(excluded);
            if !cand.intersects(&used) {
                packing += 1;
                used.union_with(&cand);
            }
        }
        let max_gain = full
            .iter_minus(excluded)
            .map(|w| s.closed[w].count_minus(dominated))
            .max()
            .unwrap_or(0);
        let ratio = undominated.div_ceil(max_gain.max(1));
        if self.chosen.len() + packing.max(ratio) >= self.best.len() {
            return;
        }

        let (_, target) = pick.unwrap();
        let mut candidates: Vec<(usize, VertexId)> = s.closed[target]
            .iter_minus(excluded)
            .map(|w| (s.closed[w].count_minus(dominated), w))
            .collect();
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut excluded = excluded.clone();
        for (_, w) in candidates {
            let mut next = dominated.clone();
            next.union_with(&s.closed[w]);
            self.chosen.push(w);
            self.branch(&next, &excluded);
            self.chosen.pop();
            // later branches never pick w again
            excluded.insert(w);
        }
    }
}
