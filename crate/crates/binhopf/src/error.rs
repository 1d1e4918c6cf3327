use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("bad label: {0:?}")]
    BadLabel(String),
    #[error("non-binary input: vertex with {0} children")]
    NonBinaryInput(usize),
    #[error("bad index: {0}")]
    BadIndex(usize),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
