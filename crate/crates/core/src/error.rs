use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Domain(String),
    #[error("non-invertible series")]
    NonInvertible,
    #[error("level {0} is not square-free")]
    NotSquareFree(u64),
    #[error("level {0}: genus unknown; supply --genus")]
    GenusUnknown(u64),
    #[error("span insufficient after {0} iterations")]
    SpanInsufficient(usize),
    #[error("insufficient precision: kernel has dimension {0}")]
    InsufficientPrecision(usize),
    #[error("no relation found at bound {0}")]
    NoRelation(u64),
    #[error("pole of {0} at s = {1}")]
    Pole(&'static str, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exactness check failed: {0}")]
    Exactness(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
