use std::fmt;

use thiserror::Error;

/// Position of a malformed byte in one of the text forms. Both fields are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix size must be at least 1")]
    EmptyMatrix,

    #[error("expected {expected} cells, got {actual}")]
    ShapeMismatch { expected: usize, actual: usize },

    #[error("undirected matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },

    #[error("cell ({row}, {col}) is outside a {n}x{n} matrix")]
    CellOutOfRange { row: usize, col: usize, n: usize },

    #[error("cell ({row}, {col}) is already set")]
    CellAlreadySet { row: usize, col: usize },

    #[error("cell ({row}, {col}) is not set")]
    CellNotSet { row: usize, col: usize },

    #[error("instruction string does not reproduce the matrix")]
    StringMismatch,

    #[error("more than one edge instruction targets cell ({row}, {col})")]
    DuplicateEdgeInstruction { row: usize, col: usize },

    #[error("density {0} is outside the allowed range")]
    DensityOutOfRange(f64),

    #[error("radius {0} must be non-negative")]
    NegativeRadius(f64),

    #[error("percentile {0} must lie strictly between 0 and 100")]
    PercentileOutOfRange(f64),

    #[error("invalid generator parameter: {0}")]
    InvalidParams(&'static str),

    #[error("point cloud needs at least 2 points, got {0}")]
    CloudTooSmall(usize),

    #[error("{position}: {message}")]
    Parse { position: Position, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position: Position { line, column },
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
