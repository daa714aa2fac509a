use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("divisibility error: {0}")]
    Divisibility(String),
    #[error("degree error: {0}")]
    Degree(String),
    #[error("lookup error: {0}")]
    Lookup(String),
    #[error("rule error: {0}")]
    Rule(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("singular point: {0}")]
    SingularPoint(String),
    #[error("point not on surface: {0}")]
    Domain(String),
    #[error("scan bound exceeded: {needed} points requested, bound is {bound}")]
    Resource { needed: u128, bound: u128 },
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Shape(msg.into()))
}

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
