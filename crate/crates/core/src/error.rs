use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph would have no vertices")]
    EmptyGraph,

    #[error("vertex count {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("no sign change found in [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("search budget exhausted")]
    Timeout,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
