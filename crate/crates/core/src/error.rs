use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {index} out of range for n = {n}")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6 input with n = {0} exceeds the short-form limit of 62")]
    Graph6TooLarge(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("vertices {0} and {1} lie in different components")]
    DifferentComponents(usize, usize),
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("shortest-path count overflow between {0} and {1}")]
    CountOverflow(usize, usize),
    #[error("pair ({a}, {b}) has {count} shortest paths, above the cap of {cap}")]
    PathCapExceeded {
        a: usize,
        b: usize,
        count: u128,
        cap: usize,
    },
    #[error("path assignment has no path for pair ({0}, {1})")]
    MissingPair(usize, usize),
    #[error("assigned path for pair ({0}, {1}) is not a shortest path")]
    NotShortest(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("theorem contract breach: {0}")]
    ContractBreach(String),
    #[error("graph with n = {n} exceeds the solver guard of {guard}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("invalid family arguments: {0}")]
    InvalidFamily(String),
    #[error("no connected sample after {0} attempts")]
    RetriesExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
