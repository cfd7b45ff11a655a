use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop requested at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {{{0}, {1}}} is not present")]
    EdgeAbsent(usize, usize),

    #[error("edge {{{0}, {1}}} is already present")]
    EdgePresent(usize, usize),

    #[error("invalid clique cover: {0}")]
    InvalidCover(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph of order {order} exceeds the limit of {limit} for {what}")]
    LimitExceeded {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
