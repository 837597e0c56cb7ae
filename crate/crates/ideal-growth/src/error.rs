use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid coloring literal: {0}")]
    InvalidLiteral(String),
    #[error("invalid native object: {0}")]
    InvalidObject(String),
    #[error("unknown adapter `{0}`")]
    UnknownAdapter(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("invalid ideal specification: {0}")]
    InvalidSpec(String),
    #[error("generation bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("downward closure violated: {0}")]
    ClosureViolated(String),
    #[error("matrix error: {0}")]
    Matrix(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
