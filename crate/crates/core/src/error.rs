use thiserror::Error;

/// Errors produced anywhere in the decomposition and solving pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed network document: {0}")]
    Parse(String),
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("node id {node} out of range for a network with {nodes} nodes")]
    NodeOutOfRange { node: usize, nodes: usize },
    #[error("network is disconnected")]
    Disconnected,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("mixing matrix is singular or ill-conditioned")]
    SingularMixing,
    #[error("point configuration is not full-dimensional")]
    NotFullDimensional,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("coordinate {0} is zero; Laurent monomials are undefined")]
    ZeroCoordinate(usize),
    #[error("exponent matrix is singular")]
    SingularExponents,
    #[error("genericity failure: {0}")]
    Genericity(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
