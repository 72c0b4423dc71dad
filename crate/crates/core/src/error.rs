use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph on {0} vertices exceeds the 64-vertex limit")]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("{what} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("invalid part-count bounds [{min}, {max}]")]
    InvalidBounds { min: usize, max: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partitions are over different vertex sets ({0} vs {1} vertices)")]
    MismatchedPartitions(usize, usize),

    #[error("graph is not a line graph")]
    NotLineGraph,

    #[error("neighbour does not match any of the five move types: {0}")]
    UnclassifiedNeighbour(String),

    #[error("input Bell graph has no vertices")]
    EmptyInput,

    #[error("no P*-candidate found; the input is not a Bell graph in the supported regime")]
    NoCandidate,

    #[error("every candidate graph is complete; the input violates the lower-Bell hypotheses")]
    AllComplete,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("fat-partition search stuck at min part size {min_size} ({min_count} minimal parts)")]
    Stuck { min_size: usize, min_count: usize },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
