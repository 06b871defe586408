//! Simple undirected graphs with dense vertex ids.

use std::collections::hash_map::DefaultHasher;
use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::bitset::Bits;
use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

/// Unordered vertex pair, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
}

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(u: VertexId, v: VertexId) -> Self {
        Self::try_new(u, v).expect("edge endpoints must differ")
    }

    pub fn try_new(u: VertexId, v: VertexId) -> Result<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge { a: u, b: v }),
            std::cmp::Ordering::Greater => Ok(Edge { a: v, b: u }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(u)),
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Leaf/support classification of a single vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VertexFlags {
    pub leaf: bool,
    pub support: bool,
    pub strong_support: bool,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge iterator, rejecting loops, repeated pairs
    /// and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            let e = Edge::try_new(u, v)?;
            list.push(e);
            adj[u].push(v);
            adj[v].push(u);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { adj, edges: list })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.b < self.n() && self.adj[e.a].binary_search(&e.b).is_ok()
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Open neighborhood `N(v)`, sorted.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.check(v)?;
        Ok(&self.adj[v])
    }

    /// Unchecked variant of [`Graph::neighbors`]; panics when `v` is out of range.
    #[inline]
    pub fn adj(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// Closed neighborhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>> {
        let mut out = self.neighbors(v)?.to_vec();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        Ok(out)
    }

    pub(crate) fn closed_masks(&self) -> Vec<Bits> {
        let n = self.n();
        (0..n)
            .map(|v| {
                let mut b = Bits::empty(n);
                b.insert(v);
                for &u in &self.adj[v] {
                    b.insert(u);
                }
                b
            })
            .collect()
    }

    pub fn classify_vertices(&self) -> Vec<VertexFlags> {
        let leaf: Vec<bool> = self.adj.iter().map(|nb| nb.len() == 1).collect();
        self.adj
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                let leaves = nb.iter().filter(|&&u| leaf[u]).count();
                VertexFlags {
                    leaf: leaf[v],
                    support: leaves >= 1,
                    strong_support: leaves >= 2,
                }
            })
            .collect()
    }

    pub fn has_strong_support(&self) -> bool {
        self.classify_vertices().iter().any(|f| f.strong_support)
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: VertexId) -> Result<Vec<Option<usize>>> {
        self.check(src)?;
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path length, or `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Option<usize>> {
        self.check(v)?;
        Ok(self.bfs_distances(u)?[v])
    }

    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let mut best = 0;
        for v in self.vertices() {
            let far = self.bfs_distances(v)?.into_iter().flatten().max().unwrap_or(0);
            best = best.max(far);
        }
        Ok(best)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0)
            .map(|d| d.iter().all(Option::is_some))
            .unwrap_or(false)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() == self.n() - 1 && self.is_connected()
    }

    /// A proper 2-coloring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for s in self.vertices() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// `PN[u, D] = N[u] - N[D - {u}]`.
    pub fn private_neighborhood(&self, u: VertexId, d: &[VertexId]) -> Result<Vec<VertexId>> {
        self.check(u)?;
        for &x in d {
            self.check(x)?;
        }
        if !d.contains(&u) {
            return Err(Error::InvalidArgument(format!(
                "vertex {u} is not a member of the set"
            )));
        }
        let mut covered = vec![false; self.n()];
        for &x in d.iter().filter(|&&x| x != u) {
            covered[x] = true;
            for &w in &self.adj[x] {
                covered[w] = true;
            }
        }
        Ok(self
            .closed_neighborhood(u)?
            .into_iter()
            .filter(|&w| !covered[w])
            .collect())
    }

    /// `G_{e,t}`: replaces `e = uv` with the path `u, x_1, ..., x_t, v`. The new
    /// vertices get ids `n, n+1, ..., n+t-1`, numbered from the `a` side.
    pub fn subdivide(&self, e: Edge, t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::InvalidArgument(
                "subdivision count must be positive".into(),
            ));
        }
        if !self.has_edge(e) {
            return Err(Error::EdgeNotPresent(e));
        }
        let n = self.n();
        let mut path = Vec::with_capacity(t + 2);
        path.push(e.a);
        path.extend(n..n + t);
        path.push(e.b);
        let edges = self
            .edges
            .iter()
            .filter(|&&f| f != e)
            .map(|f| (f.a, f.b))
            .chain(path.windows(2).map(|w| (w[0], w[1])));
        Graph::from_edges(n + t, edges)
    }

    /// Subdivides every edge of `set` exactly once, simultaneously. The vertex
    /// placed on `set[i]` gets id `n + i`.
    pub fn subdivide_edges(&self, set: &[Edge]) -> Result<Graph> {
        let n = self.n();
        for &e in set {
            if !self.has_edge(e) {
                return Err(Error::EdgeNotPresent(e));
            }
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        let edges = self
            .edges
            .iter()
            .filter(|f| sorted.binary_search(f).is_err())
            .map(|f| (f.a, f.b))
            .chain(
                set.iter()
                    .enumerate()
                    .flat_map(|(i, e)| [(e.a, n + i), (n + i, e.b)]),
            );
        Graph::from_edges(n + set.len(), edges)
    }

    /// Stable hash of the vertex count and edge set.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.n().hash(&mut h);
        self.edges.hash(&mut h);
        h.finish()
    }

    /// Parses the edge-list format: a header line `n m`, then `m` lines `a b`
    /// with 0-based ids. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| Error::parse(0, "missing header"))?;
        let [n, m] = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            if edges.len() == m {
                return Err(Error::parse(line, format!("more than {m} edge lines")));
            }
            let [a, b] = parse_pair(line, l)?;
            edges.push((line, a, b));
        }
        if edges.len() != m {
            return Err(Error::parse(
                0,
                format!("header announces {m} edges, found {}", edges.len()),
            ));
        }
        for &(line, a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::parse(line, format!("vertex id out of range (n={n})")));
            }
            if a == b {
                return Err(Error::parse(line, "self-loop"));
            }
        }
        Graph::from_edges(n, edges.iter().map(|&(_, a, b)| (a, b)))
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for e in &self.edges {
            s.push_str(&format!("{} {}\n", e.a, e.b));
        }
        s
    }

    /// Graphviz rendering. Vertices are labeled by id, or by `id:label` when
    /// `labels` is given.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut s = String::from("graph G {\n");
        for v in self.vertices() {
            match labels.and_then(|l| l.get(v)) {
                Some(l) => s.push_str(&format!("  {v} [label=\"{v}:{l}\"];\n")),
                None => s.push_str(&format!("  {v} [label=\"{v}\"];\n")),
            }
        }
        for e in &self.edges {
            s.push_str(&format!("  {} -- {};\n", e.a, e.b));
        }
        s.push_str("}\n");
        s
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::parse(line, format!("expected 2 integers, got {:?}", text)));
    }
    let mut out = [0; 2];
    for (slot, tok) in out.iter_mut().zip(toks) {
        *slot = tok
            .parse()
            .map_err(|_| Error::parse(line, format!("not a nonnegative integer: {tok:?}")))?;
    }
    Ok(out)
}
