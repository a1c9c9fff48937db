use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph must be connected")]
    Disconnected,

    #[error("instance too large: n = {n}, limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("no seed: {0}")]
    NoSeed(String),

    #[error("node budget of {limit} exceeded")]
    BudgetExceeded { limit: u64 },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// True for errors caused by the caller's input rather than by a search
    /// running out of budget.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::BudgetExceeded { .. })
    }
}
