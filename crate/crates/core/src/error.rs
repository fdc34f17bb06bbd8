use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("outside the supported domain: {0}")]
    Domain(String),
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
    #[error("size budget exceeded: {0}")]
    Resource(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
