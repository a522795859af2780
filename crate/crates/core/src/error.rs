use thiserror::Error;

/// Errors produced by the library and surfaced by the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed text: {0}")]
    MalformedText(String),
    #[error("not a set partition: {0}")]
    NotAPartition(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("element {element} is outside 1..={n}")]
    OutOfRange { element: usize, n: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("arity mismatch: host has {host} coordinates, pattern has {pattern}")]
    ArityMismatch { host: usize, pattern: usize },
    #[error("coordinate index {index} is outside 1..={d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("bad index set: {0}")]
    BadIndexSet(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("sequence term {index} is not positive")]
    NonPositiveTerm { index: usize },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
