//! Trees: the labeled family with `sd(T) = msd(T) = 3`, its recognizer, the
//! `msd(T) = 1` characterization via vertices lying in no minimum dominating
//! set, and a classifier that combines both.
//!
//! The family is generated from `P_4` (leaves `A`, supports `B`) by two
//! operations:
//!
//! * [`FamilyOp::AttachP3`]: at an `A`-vertex `v`, add a path `x, y, z` and the
//!   edge `vx`, with `x, y` labeled `B` and `z` labeled `A`;
//! * [`FamilyOp::AttachP2`]: at a `B`-vertex `v`, add a path `x, y` and the
//!   edge `vx`, with `x` labeled `B` and `y` labeled `A`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::domination::{domination_number, is_dominating, no_gamma_set_vertices};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    A,
    B,
}

impl Status {
    fn as_char(self) -> char {
        match self {
            Status::A => 'A',
            Status::B => 'B',
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyOp {
    /// Attach a 3-vertex path to an `A`-vertex.
    AttachP3,
    /// Attach a 2-vertex path to a `B`-vertex.
    AttachP2,
}

impl FamilyOp {
    pub fn anchor_status(self) -> Status {
        match self {
            FamilyOp::AttachP3 => Status::A,
            FamilyOp::AttachP2 => Status::B,
        }
    }

    /// Statuses of the new vertices, starting with the one joined to the anchor.
    pub fn added_statuses(self) -> &'static [Status] {
        match self {
            FamilyOp::AttachP3 => &[Status::B, Status::B, Status::A],
            FamilyOp::AttachP2 => &[Status::B, Status::A],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyStep {
    pub op: FamilyOp,
    pub anchor: VertexId,
}

/// One status per vertex. Serializes as a JSON object `{"id": "A" | "B"}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStatusLabeling {
    statuses: Vec<Status>,
}

impl Serialize for TreeStatusLabeling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.statuses.iter().enumerate().map(|(v, st)| (v.to_string(), st)))
    }
}

impl TreeStatusLabeling {
    pub fn new(statuses: Vec<Status>) -> Self {
        TreeStatusLabeling { statuses }
    }

    /// Parses a string such as `"ABBA"`.
    pub fn from_letters(letters: &str) -> Result<Self> {
        letters
            .chars()
            .map(|c| match c {
                'A' => Ok(Status::A),
                'B' => Ok(Status::B),
                other => Err(Error::InvalidArgument(format!("unknown status {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn statuses(&self) -> &[Status] {
        &self.statuses
    }

    pub fn status(&self, v: VertexId) -> Status {
        self.statuses[v]
    }

    pub fn len(&self) -> usize {
        self.statuses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statuses.is_empty()
    }

    pub fn with_status(&self, s: Status) -> Vec<VertexId> {
        (0..self.len()).filter(|&v| self.statuses[v] == s).collect()
    }

    pub fn a_set(&self) -> Vec<VertexId> {
        self.with_status(Status::A)
    }

    pub fn b_set(&self) -> Vec<VertexId> {
        self.with_status(Status::B)
    }

    pub fn to_dot(&self, t: &Graph) -> String {
        let labels: Vec<String> = self.statuses.iter().map(ToString::to_string).collect();
        t.to_dot(Some(&labels))
    }
}

/// Builds a member of the family from a construction script applied to the
/// labeled `P_4` on vertices `0-1-2-3`. New vertices are appended in order.
pub fn build_family_f(script: &[FamilyStep]) -> Result<(Graph, TreeStatusLabeling)> {
    let mut statuses = vec![Status::A, Status::B, Status::B, Status::A];
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    for step in script {
        let n = statuses.len();
        let found = *statuses
            .get(step.anchor)
            .ok_or(Error::VertexOutOfRange { vertex: step.anchor, n })?;
        let required = step.op.anchor_status();
        if found != required {
            return Err(Error::AnchorStatus {
                vertex: step.anchor,
                found: found.as_char(),
                required: required.as_char(),
            });
        }
        let mut prev = step.anchor;
        for (i, &s) in step.op.added_statuses().iter().enumerate() {
            edges.push((prev, n + i));
            statuses.push(s);
            prev = n + i;
        }
    }
    let g = Graph::from_edges(statuses.len(), edges)?;
    Ok((g, TreeStatusLabeling::new(statuses)))
}

/// How the recognizer picks among longest paths `(v0, v1, v2, ...)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathChoice {
    /// Maximize `deg(v2)`; ties go to the smallest `v2`, then smallest `v0`.
    MaxDegree,
    /// Smallest endpoint `v0`, ignoring degrees.
    FirstEndpoint,
}

/// Membership test for the family: returns a valid labeling if `t` belongs to
/// it, `None` otherwise.
pub fn recognize_family_f(t: &Graph) -> Result<Option<TreeStatusLabeling>> {
    recognize_family_f_with(t, PathChoice::MaxDegree)
}

struct PendantPath {
    v0: VertexId,
    v1: VertexId,
    v2: VertexId,
    v3: Option<VertexId>,
}

/// Reverse reduction: peel pendant paths off a longest path until `P_4`
/// remains, then replay the peeled operations forward, checking anchor
/// statuses.
pub fn recognize_family_f_with(t: &Graph, choice: PathChoice) -> Result<Option<TreeStatusLabeling>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 3 {
        return Err(Error::TooSmall { n: t.n(), min: 3 });
    }
    let n = t.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = t.vertices().map(|v| t.adj(v).len()).collect();
    let mut peeled: Vec<(FamilyOp, VertexId, Vec<VertexId>)> = Vec::new();
    let mut remaining = n;

    while remaining > 4 {
        let Some(p) = longest_pendant_path(t, &alive, &degree, choice) else {
            return Ok(None);
        };
        if degree[p.v1] != 2 {
            // v1 is a strong support vertex
            return Ok(None);
        }
        let (op, anchor, added) = if degree[p.v2] == 2 {
            let v3 = p.v3.expect("diameter at least 3");
            (FamilyOp::AttachP3, v3, vec![p.v2, p.v1, p.v0])
        } else {
            (FamilyOp::AttachP2, p.v2, vec![p.v1, p.v0])
        };
        for &v in &added {
            alive[v] = false;
        }
        degree[anchor] -= 1;
        remaining -= added.len();
        peeled.push((op, anchor, added));
    }

    let base: Vec<VertexId> = (0..n).filter(|&v| alive[v]).collect();
    if base.len() != 4 || base.iter().any(|&v| degree[v] > 2) {
        return Ok(None);
    }
    let mut statuses: Vec<Option<Status>> = vec![None; n];
    for &v in &base {
        statuses[v] = Some(if degree[v] == 1 { Status::A } else { Status::B });
    }
    for (op, anchor, added) in peeled.iter().rev() {
        if statuses[*anchor] != Some(op.anchor_status()) {
            return Ok(None);
        }
        for (&v, &s) in added.iter().zip(op.added_statuses()) {
            statuses[v] = Some(s);
        }
    }
    Ok(Some(TreeStatusLabeling::new(
        statuses.into_iter().map(|s| s.expect("every vertex relabeled")).collect(),
    )))
}

fn longest_pendant_path(
    t: &Graph,
    alive: &[bool],
    degree: &[usize],
    choice: PathChoice,
) -> Option<PendantPath> {
    let n = t.n();
    let mut best: Option<(usize, PendantPath)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for v0 in (0..n).filter(|&v| alive[v] && degree[v] == 1) {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[v0] = 0;
        parent[v0] = v0;
        queue.push_back(v0);
        let mut far = v0;
        while let Some(u) = queue.pop_front() {
            if dist[u] > dist[far] {
                far = u;
            }
            for &w in t.adj(u) {
                if alive[w] && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let len = dist[far];
        if len < 3 {
            continue;
        }
        let mut walk = vec![far];
        while *walk.last().unwrap() != v0 {
            walk.push(parent[*walk.last().unwrap()]);
        }
        walk.reverse();
        let cand = PendantPath {
            v0,
            v1: walk[1],
            v2: walk[2],
            v3: walk.get(3).copied(),
        };
        let better = match &best {
            None => true,
            Some((best_len, b)) => {
                len > *best_len
                    || (len == *best_len
                        && choice == PathChoice::MaxDegree
                        && (degree[cand.v2], std::cmp::Reverse(cand.v2))
                            > (degree[b.v2], std::cmp::Reverse(b.v2)))
            }
        };
        if better {
            best = Some((len, cand));
        }
    }
    best.map(|(_, p)| p)
}

/// Certificate that `msd(T) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum MsdOneWitness {
    StrongSupport { vertex: VertexId },
    LeafInN { vertex: VertexId },
    EdgeInN { edge: Edge },
}

/// `msd(T) = 1` iff some leaf lies in no minimum dominating set, or some edge
/// has both endpoints outside every minimum dominating set.
pub fn msd_one_tree(t: &Graph) -> Result<Option<MsdOneWitness>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 3 {
        return Err(Error::TooSmall { n: t.n(), min: 3 });
    }
    let never = no_gamma_set_vertices(t);
    let mut outside = vec![false; t.n()];
    for &v in &never {
        outside[v] = true;
    }
    if let Some(&v) = never.iter().find(|&&v| t.adj(v).len() == 1) {
        return Ok(Some(MsdOneWitness::LeafInN { vertex: v }));
    }
    Ok(t
        .edges()
        .iter()
        .find(|e| outside[e.a] && outside[e.b])
        .map(|&edge| MsdOneWitness::EdgeInN { edge }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeReason {
    StrongSupport,
    LeafInN,
    EdgeInN,
    FamilyF,
    Residual2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeClassification {
    pub msd: usize,
    pub sd: usize,
    pub reason: TreeReason,
    pub witness: Option<MsdOneWitness>,
    pub labeling: Option<TreeStatusLabeling>,
}

/// Characterization-based `msd(T)` (equal to `sd(T)` on trees).
pub fn classify_tree(t: &Graph) -> Result<TreeClassification> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 3 {
        return Err(Error::TooSmall { n: t.n(), min: 3 });
    }
    let one = |reason, witness| TreeClassification {
        msd: 1,
        sd: 1,
        reason,
        witness: Some(witness),
        labeling: None,
    };
    if let Some(v) = t.classify_vertices().iter().position(|f| f.strong_support) {
        return Ok(one(TreeReason::StrongSupport, MsdOneWitness::StrongSupport { vertex: v }));
    }
    if let Some(w) = msd_one_tree(t)? {
        let reason = match w {
            MsdOneWitness::LeafInN { .. } => TreeReason::LeafInN,
            _ => TreeReason::EdgeInN,
        };
        return Ok(one(reason, w));
    }
    // diameter <= 2 means a star, already caught as a strong support
    if let Some(labeling) = recognize_family_f(t)? {
        return Ok(TreeClassification {
            msd: 3,
            sd: 3,
            reason: TreeReason::FamilyF,
            witness: None,
            labeling: Some(labeling),
        });
    }
    Ok(TreeClassification {
        msd: 2,
        sd: 2,
        reason: TreeReason::Residual2,
        witness: None,
        labeling: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum LabelingViolation {
    /// The labeling does not cover exactly the vertices of the tree.
    Size { labels: usize, vertices: usize },
    /// (1) a leaf is not `A`.
    LeafNotA { vertex: VertexId },
    /// (2) a support vertex is not `B`.
    SupportNotB { vertex: VertexId },
    /// (3) an `A`-vertex has an `A`-neighbor.
    AdjacentA { edge: Edge },
    /// (4) a `B`-vertex has a number of `A`-neighbors other than one.
    BWrongACount { vertex: VertexId, a_neighbors: usize },
    /// (4) a `B`-vertex has no `B`-neighbor.
    BWithoutB { vertex: VertexId },
    /// (5) two `A`-vertices at distance below 3.
    ATooClose { u: VertexId, v: VertexId, distance: usize },
    /// `A(T)` does not dominate.
    ANotDominating,
    /// `|A(T)|` differs from the domination number.
    ANotMinimum { size: usize, gamma: usize },
}

impl LabelingViolation {
    /// Which of the five structural properties is violated; `None` for the
    /// size and minimum-dominating-set checks.
    pub fn property(&self) -> Option<u8> {
        match self {
            LabelingViolation::LeafNotA { .. } => Some(1),
            LabelingViolation::SupportNotB { .. } => Some(2),
            LabelingViolation::AdjacentA { .. } => Some(3),
            LabelingViolation::BWrongACount { .. } | LabelingViolation::BWithoutB { .. } => Some(4),
            LabelingViolation::ATooClose { .. } => Some(5),
            _ => None,
        }
    }
}

/// Checks the five structural properties of family labelings plus the claim
/// that `A(T)` is a minimum dominating set. Empty output means valid.
pub fn verify_labeling(t: &Graph, l: &TreeStatusLabeling) -> Vec<LabelingViolation> {
    if l.len() != t.n() {
        return vec![LabelingViolation::Size {
            labels: l.len(),
            vertices: t.n(),
        }];
    }
    let mut out = Vec::new();
    let flags = t.classify_vertices();
    for v in t.vertices() {
        if flags[v].leaf && l.status(v) != Status::A {
            out.push(LabelingViolation::LeafNotA { vertex: v });
        }
        if flags[v].support && l.status(v) != Status::B {
            out.push(LabelingViolation::SupportNotB { vertex: v });
        }
    }
    for e in t.edges() {
        if l.status(e.a) == Status::A && l.status(e.b) == Status::A {
            out.push(LabelingViolation::AdjacentA { edge: *e });
        }
    }
    for v in l.b_set() {
        let a_neighbors = t.adj(v).iter().filter(|&&u| l.status(u) == Status::A).count();
        if a_neighbors != 1 {
            out.push(LabelingViolation::BWrongACount { vertex: v, a_neighbors });
        }
        if !t.adj(v).iter().any(|&u| l.status(u) == Status::B) {
            out.push(LabelingViolation::BWithoutB { vertex: v });
        }
    }
    let a_set = l.a_set();
    for &u in &a_set {
        // A-vertices within distance 2 of u
        let mut near: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &x in t.adj(u) {
            near.entry(x).or_insert(1);
            for &y in t.adj(x) {
                if y != u {
                    near.entry(y).or_insert(2);
                }
            }
        }
        for (v, d) in near {
            if v > u && l.status(v) == Status::A {
                out.push(LabelingViolation::ATooClose { u, v, distance: d });
            }
        }
    }
    if !is_dominating(t, &a_set) {
        out.push(LabelingViolation::ANotDominating);
    } else {
        let gamma = domination_number(t);
        if a_set.len() != gamma {
            out.push(LabelingViolation::ANotMinimum {
                size: a_set.len(),
                gamma,
            });
        }
    }
    out
}
