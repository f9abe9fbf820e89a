use thiserror::Error;

use crate::tableau::Cell;

/// Errors raised by constructors and algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("filling error at cell ({}, {}): {reason}", .cell.row, .cell.col)]
    Filling { cell: Cell, reason: String },

    #[error("cell ({}, {}) is not a removable corner", .0.row, .0.col)]
    Corner(Cell),

    #[error("{0} is not a hook word")]
    Split(String),

    #[error("row {row} is not a hook word")]
    Hook { row: usize },

    #[error("row {row} is not a hook subword of maximum length in the rows below it")]
    Maximality { row: usize },

    #[error("budget exceeded: {what} (limit {limit})")]
    Budget { what: String, limit: usize },

    #[error("operation needs a nonempty tableau")]
    Empty,

    #[error("parse error: {0}")]
    Parse(String),

    /// A broken internal invariant. Seeing this means there is a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn filling(cell: Cell, reason: impl Into<String>) -> Self {
        Error::Filling {
            cell,
            reason: reason.into(),
        }
    }
}
