use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range 1..={len}")]
    OutOfRange { index: usize, len: usize },
    #[error("no {what} with rank {rank} (only {available} available)")]
    NotFound {
        what: &'static str,
        rank: usize,
        available: usize,
    },
    #[error("invalid range [{i}, {j}] for length {len}")]
    InvalidRange { i: usize, j: usize, len: usize },
    #[error("invalid node name {0}")]
    InvalidName(String),
    #[error("decode error: {0}")]
    Decode(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("build error: {0}")]
    Build(String),
    #[error("invalid parameter: {0}")]
    Param(String),
}

pub type Result<T> = std::result::Result<T, Error>;

#[inline]
pub(crate) fn check_index(index: usize, len: usize) -> Result<()> {
    if index == 0 || index > len {
        Err(Error::OutOfRange { index, len })
    } else {
        Ok(())
    }
}
