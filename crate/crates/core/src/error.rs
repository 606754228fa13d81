use thiserror::Error;

/// Errors produced by the hypergraph toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} is outside the vertex range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("edge has {found} vertices, expected {expected}")]
    WrongArity { expected: usize, found: usize },

    #[error("duplicate edge {0}")]
    DuplicateEdge(String),

    #[error("duplicate vertex {0} in edge")]
    DuplicateVertex(u32),

    #[error("{what} has {n} vertices; at most {max} are supported")]
    TooManyVertices { what: &'static str, n: usize, max: usize },

    #[error("uniformity mismatch: host is {host}-uniform, pattern is {pattern}-uniform")]
    UniformityMismatch { host: usize, pattern: usize },

    #[error("unsupported instance size: {0}")]
    Unsupported(String),

    #[error("integrity failure: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
