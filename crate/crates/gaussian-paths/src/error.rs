use thiserror::Error;

#[derive(Debug, Error)]
pub enum PathError {
    #[error("invalid time grid: {0}")]
    InvalidGrid(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}
