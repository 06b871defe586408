//! Named graph families, seeded random generators and exhaustive corpora.
//!
//! Every randomized constructor takes a [`Seed`]; identical seeds reproduce
//! identical graphs. `random_connected_graph` grows a uniform random spanning
//! tree and then adds uniformly chosen extra edges, so it is *not* uniform over
//! connected graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::tree_class::{FamilyOp, FamilyStep, Status};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

fn at_least(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::TooSmall { n, min })
    } else {
        Ok(())
    }
}

/// `P_n`, vertices numbered along the path.
pub fn path(n: usize) -> Result<Graph> {
    at_least(n, 1)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n`, vertices numbered around the cycle.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least(n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least(n, 1)?;
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{p,q}`: sides `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    at_least(p, 1)?;
    at_least(q, 1)?;
    Graph::from_edges(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))))
}

/// `K_{1,q}` with center 0.
pub fn star(q: usize) -> Result<Graph> {
    complete_bipartite(1, q)
}

/// `W_n`: rim cycle `0..n` plus hub `n`.
pub fn wheel(n: usize) -> Result<Graph> {
    at_least(n, 3)?;
    Graph::from_edges(
        n + 1,
        (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n)]),
    )
}

/// A spider: a center (vertex 0) with one leg per entry of `legs`.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Decodes a Prüfer sequence of length `n - 2` into a labeled tree on `n`
/// vertices.
pub fn prufer_decode(seq: &[VertexId], n: usize) -> Result<Graph> {
    at_least(n, 2)?;
    if seq.len() != n - 2 {
        return Err(Error::InvalidArgument(format!(
            "Prüfer sequence for {n} vertices must have length {}",
            n - 2
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(u) = leaves.pop().unwrap();
    let std::cmp::Reverse(w) = leaves.pop().unwrap();
    edges.push((u, w));
    Graph::from_edges(n, edges)
}

/// Uniform random labeled tree on `n` vertices.
pub fn random_tree(n: usize, seed: Seed) -> Result<Graph> {
    at_least(n, 2)?;
    let mut rng = seed.rng();
    random_tree_with(n, &mut rng)
}

fn random_tree_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    let seq: Vec<VertexId> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&seq, n)
}

pub const MAX_ENUMERATED_TREE_ORDER: usize = 9;

/// Number of labeled trees on `n` vertices, `n^(n-2)`.
pub fn labeled_tree_count(n: usize) -> u64 {
    (n as u64).pow(n.saturating_sub(2) as u32)
}

/// The `index`-th labeled tree in lexicographic Prüfer order.
pub fn tree_by_index(n: usize, index: u64) -> Result<Graph> {
    if !(2..=MAX_ENUMERATED_TREE_ORDER).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "tree enumeration supports 2 <= n <= {MAX_ENUMERATED_TREE_ORDER}, got {n}"
        )));
    }
    if index >= labeled_tree_count(n) {
        return Err(Error::InvalidArgument(format!("tree index {index} out of range")));
    }
    let mut seq = vec![0; n - 2];
    let mut rest = index;
    for slot in seq.iter_mut().rev() {
        *slot = (rest % n as u64) as usize;
        rest /= n as u64;
    }
    prufer_decode(&seq, n)
}

/// All `n^(n-2)` labeled trees on `n` vertices (isomorphic copies included).
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    tree_by_index(n, 0)?;
    Ok((0..labeled_tree_count(n)).map(move |i| tree_by_index(n, i).unwrap()))
}

/// Upper limit on exhaustive graph enumeration (`2^21` graphs at `n = 7`).
pub const MAX_ENUMERATED_GRAPH_ORDER: usize = 7;

/// Number of labeled graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph whose edge set is encoded by the bits of `mask`, with
/// vertex pairs ordered lexicographically.
pub fn graph_by_mask(n: usize, mask: u64) -> Result<Graph> {
    if n > MAX_ENUMERATED_GRAPH_ORDER {
        return Err(Error::InvalidArgument(format!(
            "graph enumeration supports n <= {MAX_ENUMERATED_GRAPH_ORDER}"
        )));
    }
    if mask >= labeled_graph_count(n) {
        return Err(Error::InvalidArgument(format!("edge mask {mask} out of range")));
    }
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::from_edges(
        n,
        pairs
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, p)| p),
    )
}

/// Every labeled graph on `n` vertices, connected or not.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    graph_by_mask(n, 0)?;
    Ok((0..labeled_graph_count(n)).map(move |mask| graph_by_mask(n, mask).unwrap()))
}

/// Connected simple graph with exactly `m` edges: a uniform random spanning
/// tree plus `m - n + 1` uniformly chosen extra edges.
pub fn random_connected_graph(n: usize, m: usize, seed: Seed) -> Result<Graph> {
    at_least(n, 1)?;
    let max = n * (n - 1) / 2;
    if m + 1 < n || m > max {
        return Err(Error::InvalidArgument(format!(
            "no connected simple graph with {n} vertices and {m} edges"
        )));
    }
    if n == 1 {
        return Ok(Graph::empty(1));
    }
    let mut rng = seed.rng();
    let tree = random_tree_with(n, &mut rng)?;
    let mut rest: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !tree.has_edge(crate::graph::Edge::new(i, j)))
        .collect();
    rest.shuffle(&mut rng);
    let extra = m - (n - 1);
    Graph::from_edges(
        n,
        tree.edges()
            .iter()
            .map(|e| (e.a, e.b))
            .chain(rest.into_iter().take(extra)),
    )
}

/// A random construction script for the family of trees built from the
/// labeled `P_4` by the two path-attaching operations. Each step flips a coin
/// for the operation and then picks a uniformly random anchor of the status
/// that operation requires.
pub fn random_family_f_script(length: usize, seed: Seed) -> Vec<FamilyStep> {
    let mut rng = seed.rng();
    let mut statuses = vec![Status::A, Status::B, Status::B, Status::A];
    let mut script = Vec::with_capacity(length);
    for _ in 0..length {
        let op = if rng.gen_bool(0.5) {
            FamilyOp::AttachP3
        } else {
            FamilyOp::AttachP2
        };
        let required = op.anchor_status();
        let candidates: Vec<VertexId> = statuses
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == required)
            .map(|(v, _)| v)
            .collect();
        let anchor = *candidates.choose(&mut rng).expect("both statuses always present");
        statuses.extend_from_slice(op.added_statuses());
        script.push(FamilyStep { op, anchor });
    }
    script
}
