//! JSON report types. Each has a schema under `schemas/`.

use serde::{Deserialize, Serialize};

use domsub::Edge;

/// An edge as a two-element array `[a, b]` with `a < b`.
pub type EdgePair = [usize; 2];

pub fn pair(e: Edge) -> EdgePair {
    [e.a, e.b]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    TreeDp,
    BranchAndBound,
    Search,
    TreeCharacterization,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaTimings {
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaReport {
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub witness: Vec<usize>,
    pub method: Method,
    pub timings: GammaTimings,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BudgetMarker {
    #[serde(rename = "exceeds-budget")]
    ExceedsBudget,
}

/// `sd` as a number, or the string `"exceeds-budget"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SdField {
    Exact(usize),
    Marker(BudgetMarker),
}

impl From<domsub::SdValue> for SdField {
    fn from(v: domsub::SdValue) -> Self {
        match v {
            domsub::SdValue::Exact(k) => SdField::Exact(k),
            domsub::SdValue::ExceedsBudget => SdField::Marker(BudgetMarker::ExceedsBudget),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMsd {
    pub a: usize,
    pub b: usize,
    pub msd: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witnesses {
    /// A minimum dominating set of the input.
    pub dominating_set: Vec<usize>,
    /// Edge attaining `msd`, with the smallest multiplicity.
    pub msd_edge: EdgePair,
    /// Lexicographically first smallest edge set raising `γ`; absent when no
    /// subset search ran or the budget was exceeded.
    pub sd_edges: Option<Vec<EdgePair>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TreeDetails {
    /// Which case of the tree characterization applied.
    pub reason: String,
    /// Certificate for `msd = 1`, when that case applied.
    pub msd_one_witness: Option<serde_json::Value>,
    /// One letter per vertex (`A` or `B`) when the tree was recognized as an
    /// extremal tree.
    pub labeling: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyTimings {
    pub gamma_ms: f64,
    pub msd_ms: f64,
    pub sd_ms: f64,
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub sd: SdField,
    pub sd_budget: usize,
    pub msd: usize,
    pub per_edge_msd: Vec<EdgeMsd>,
    pub witnesses: Witnesses,
    pub method: Method,
    pub tree: Option<TreeDetails>,
    /// Outcome of `--verify`; absent when not requested.
    pub verified: Option<bool>,
    /// Human-readable cross-check failures.
    pub mismatches: Vec<String>,
    pub timings: ClassifyTimings,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReduceTimings {
    pub total_ms: f64,
}

/// The reduction graph without verification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReduceReport {
    /// Variables after pure-literal elimination.
    pub n: usize,
    /// Clauses after pure-literal elimination.
    pub m: usize,
    /// 0-based input indices of deleted clauses.
    pub removed_clauses: Vec<usize>,
    pub vertices: usize,
    pub edges: usize,
    pub edge_list: Vec<EdgePair>,
    pub labels: Vec<String>,
    pub timings: ReduceTimings,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReduceVerifyReport {
    pub n: usize,
    pub m: usize,
    pub removed_clauses: Vec<usize>,
    pub vertices: usize,
    pub edges: usize,
    pub gamma: usize,
    pub satisfiable: bool,
    pub sd_gt_1: bool,
    pub gamma_pendant_subdivided: usize,
    pub pass: bool,
    pub timings: ReduceTimings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub suite: String,
    pub detail: String,
    /// The offending graph in edge-list format.
    pub edge_list: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteTimings {
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifySuiteReport {
    pub seed: u64,
    pub max_n: usize,
    pub samples: usize,
    pub suites: Vec<SuiteResult>,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
    pub timings: SuiteTimings,
}
