use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("degenerate segment: both endpoints are {0}")]
    DegenerateSegment(String),

    #[error("box list is empty")]
    EmptyBoxList,

    #[error("link endpoints coincide at {0}")]
    SameNode(String),

    #[error("lattice needs {nodes} nodes, exceeding the node cap of {cap}")]
    NodeCap { nodes: usize, cap: usize },

    #[error("invalid lattice dimensions {0}x{1}x{2}")]
    InvalidDimensions(i64, i64, i64),

    #[error("invalid network selector {0:?}")]
    InvalidSelector(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("validation failed on {field}: {message}")]
    Validation { field: String, message: String },

    #[error("malformed document: {0}")]
    Document(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by workload size rather than bad input.
    pub fn is_size_error(&self) -> bool {
        matches!(self, Error::NodeCap { .. })
    }
}
