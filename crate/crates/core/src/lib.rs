//! Exact domination machinery for small graphs: the domination number, the
//! domination subdivision number `sd(G)` and the domination multisubdivision
//! number `msd(G)`, a characterization-based classifier for trees, and a
//! 3-SAT to bipartite-graph reduction whose satisfiability biconditional can
//! be checked instance by instance.
//!
//! All graphs are immutable values. Operations that "modify" a graph return a
//! new one, so a single base graph can be shared across worker threads while
//! its subdivisions are explored.

pub mod domination;
pub mod error;
pub mod generators;
pub mod graph;
pub mod sat_reduction;
pub mod subdivision;
pub mod tree_class;

mod bitset;

pub use domination::{
    domination_number, gamma, gamma_bruteforce, gamma_forced, gamma_tree, is_dominating,
    no_gamma_set_vertices, DominatingSet, GammaResult,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexFlags, VertexId};
pub use subdivision::{msd, msd_edge, sd, sd_is_greater_than_one, MsdReport, SdReport, SdValue};
pub use tree_class::{
    build_family_f, classify_tree, recognize_family_f, verify_labeling, FamilyOp, FamilyStep,
    Status, TreeClassification, TreeReason, TreeStatusLabeling,
};
