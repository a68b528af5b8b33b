use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{what}: size {actual} exceeds budget {limit}")]
    ScaleExceeded {
        what: &'static str,
        limit: u64,
        actual: u64,
    },
    #[error("negative weight {value} at vertex {vertex}")]
    NegativeWeight { vertex: usize, value: String },
    #[error("value {value} at vertex {vertex} is not an integer")]
    NotInteger { vertex: usize, value: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph6 can only encode simple graphs")]
    NotSimple,
    #[error("graph is not {0}-tree-connected")]
    NotTreeConnected(usize),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

impl Error {
    pub fn is_scale(&self) -> bool {
        matches!(self, Error::ScaleExceeded { .. })
    }

    pub(crate) fn scale(what: &'static str, limit: u64, actual: u64) -> Self {
        Error::ScaleExceeded {
            what,
            limit,
            actual,
        }
    }
}
