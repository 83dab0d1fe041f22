use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    /// A structural problem with an otherwise well-formed document. `locus`
    /// names the offending node or edge.
    #[error("{locus}: {message}")]
    Invalid { locus: String, message: String },

    #[error("DOT parse error at line {line}, column {column}: {message}")]
    Dot {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("node {0:?} has no position")]
    MissingPosition(String),

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("embedding has {found} positions but the graph has {expected} nodes")]
    EmbeddingSize { expected: usize, found: usize },

    #[error("convex hull has zero area")]
    DegenerateHull,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(locus: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Invalid {
            locus: locus.into(),
            message: message.into(),
        }
    }
}
