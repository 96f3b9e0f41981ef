use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs are limited to {max} vertices, got {n}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices { n: usize },
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not a DT-graph")]
    NotDt,
    #[error("graph is not edge-critical")]
    NotEdgeCritical,
    #[error("vertices must be distinct: {0}")]
    RoleConflict(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("malformed incidence spec: {0}")]
    MalformedSpec(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search exhausted where a witness must exist: {0}")]
    GuaranteeViolated(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
