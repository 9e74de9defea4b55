use thiserror::Error;

/// Errors raised by the group, graph and search layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("group order {order} exceeds enumeration cap {cap}")]
    OrderExceedsCap { order: String, cap: u64 },

    #[error("invalid group size: {0}")]
    InvalidSize(String),

    #[error("group action is not well defined: {0}")]
    ActionNotWellDefined(String),

    #[error("unknown group name `{0}`")]
    UnknownName(String),

    #[error("scale exceeded: {0}")]
    ScaleExceeded(String),

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("connection set is empty")]
    EmptyConnectionSet,

    #[error("vertices {0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("search node budget of {0} exceeded")]
    NodeBudgetExceeded(u64),

    #[error("cannot parse word `{word}`: {reason}")]
    WordParse { word: String, reason: String },

    #[error("graph6 parse error: {0}")]
    Graph6(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
