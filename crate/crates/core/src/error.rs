use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {edge:?}: {reason}")]
    InvalidEdge { edge: Vec<u32>, reason: String },

    #[error("uniformity must be at least 1")]
    ZeroUniformity,

    #[error("uniformity mismatch: expected {expected}, found {found}")]
    UniformityMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("{n} vertices exceeds the supported maximum of {max} for this operation")]
    TooManyVertices { n: usize, max: usize },

    #[error("search space too large: {0}")]
    SpaceTooLarge(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("input contains a copy of {pattern} (witness {witness:?})")]
    NotFree { pattern: String, witness: Vec<u32> },

    #[error("lagrangian {lambda:.12} is below the required floor {floor:.12}")]
    BelowFloor { lambda: f64, floor: f64 },

    #[error(
        "compression of {moved} to {target} produced a copy of {pattern} (witness {witness:?})"
    )]
    CompressionBrokeFreeness {
        target: u32,
        moved: u32,
        pattern: String,
        witness: Vec<u32>,
    },

    #[error("no progress after {0} iterations")]
    NoProgress(usize),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
