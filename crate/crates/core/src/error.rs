use thiserror::Error;

/// Errors raised by graph construction, the algebraic operations and the
/// membership machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("unknown standard graph kind `{0}`")]
    InvalidKind(String),

    #[error("{kind} graph needs at least {min} vertices, got {n}")]
    TooFewVertices { kind: &'static str, min: usize, n: usize },

    #[error("vertex count mismatch: expected {expected}, found {found}")]
    VertexCountMismatch { expected: usize, found: usize },

    #[error("invalid grid shape ({p}, {q}): both sides must be at least 2")]
    InvalidShape { p: usize, q: usize },

    #[error("block count {p} does not divide dimension {n}")]
    BlockSize { n: usize, p: usize },

    #[error("elementary indices out of range or degenerate: E({i},{i2};{j},{j2}) at shape ({p}, {q})")]
    InvalidElementary {
        p: usize,
        q: usize,
        i: usize,
        i2: usize,
        j: usize,
        j2: usize,
    },

    #[error("a tensor 2-sum needs at least one summand")]
    EmptySum,

    #[error("summand {index} has factor sizes ({p}, {q}), expected ({expected_p}, {expected_q})")]
    ShapeMismatch {
        index: usize,
        p: usize,
        q: usize,
        expected_p: usize,
        expected_q: usize,
    },

    #[error("summand {index} has a factor without edges")]
    TrivialFactor { index: usize },

    #[error("graph is not a spanning cross-like subgraph of the grid product")]
    NotMember,

    #[error("search cancelled")]
    Cancelled,

    #[error("scale limit exceeded: {0}")]
    ScaleExceeded(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid certificate: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
