use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation was called before the certification it depends on.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Two routes that must agree did not, or an exact division left a remainder.
    #[error("internal consistency violated: {0}")]
    Consistency(String),

    #[error("cells of dimension {0} are not supported here")]
    UnsupportedDimension(usize),

    #[error("face {face} has {len} sides; only quadrilaterals are accepted")]
    UnsupportedFace { face: usize, len: usize },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn consistency(msg: impl Into<String>) -> Error {
    Error::Consistency(msg.into())
}
