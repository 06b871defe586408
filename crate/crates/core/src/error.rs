use thiserror::Error;

use crate::graph::{Edge, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("edge {0} is not present in the graph")]
    EdgeNotPresent(Edge),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },

    #[error("graph has no edges")]
    Edgeless,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("brute-force cap exceeded: {size} > {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("anchor {vertex} has status {found}, operation requires {required}")]
    AnchorStatus {
        vertex: VertexId,
        found: char,
        required: char,
    },

    #[error("formula preprocessing failed: {0}")]
    Preprocess(String),

    #[error("time budget of {0} ms exhausted")]
    Timeout(u128),

    /// Raised when a checked theorem fails on a concrete instance.
    #[error("theorem violation: {0}")]
    Violation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
