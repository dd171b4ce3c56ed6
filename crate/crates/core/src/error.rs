use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("loop edge at vertex {v} (graphs are simple)")]
    LoopEdge { v: usize },

    #[error("graph would need {needed} vertices, capacity is {capacity}")]
    CapacityExceeded { needed: usize, capacity: usize },

    #[error("{op} supports at most {limit} vertices, got {n}")]
    SizeLimit {
        op: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("budget exceeded in {op}: {detail}")]
    BudgetExceeded { op: &'static str, detail: String },

    #[error("search cap {cap} exceeded: {detail}")]
    CapExceeded { cap: usize, detail: String },

    #[error("unknown named graph `{0}`")]
    UnknownName(String),

    #[error("invalid Cayley connection element {elem} for modulus {modulus}")]
    BadConnection { elem: usize, modulus: usize },

    #[error("hypergraph: {0}")]
    Hypergraph(String),

    #[error("linear program is infeasible")]
    LpInfeasible,

    #[error("linear program is unbounded")]
    LpUnbounded,

    #[error("Ramsey list level {level} missing from dataset")]
    MissingLevel { level: usize },

    #[error("invalid list entry at {path}:{line}: {detail}")]
    InvalidListEntry {
        path: String,
        line: usize,
        detail: String,
    },

    #[error("dataset: {0}")]
    Dataset(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
