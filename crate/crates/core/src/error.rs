use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices, above the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed decomposition tree: {0}")]
    MalformedTree(String),

    #[error("tree decomposition is not valid for the graph: {0}")]
    InvalidDecomposition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input of size {size} exceeds the oracle cap of {cap}")]
    OracleCap { size: usize, cap: usize },

    #[error("linear program is unbounded")]
    UnboundedLp,
}

pub type Result<T> = std::result::Result<T, Error>;
