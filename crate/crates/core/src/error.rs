//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Tensor/vector widths do not line up; `context` names the offending layer or field.
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    Dimension {
        context: String,
        expected: usize,
        actual: usize,
    },

    /// Non-finite value where finite arithmetic is required.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A signaling solution is unusable (e.g. non-positive aligned amplitude).
    #[error("invalid signaling solution: {0}")]
    InvalidSolution(String),

    /// An internal contract was violated (indicates a bug or an out-of-contract call).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Training aborted because the loss became non-finite.
    #[error("non-finite loss at epoch {epoch}, batch {batch}")]
    NanLoss { epoch: usize, batch: usize },

    /// Malformed persisted file; line/column refer to the JSON text when available.
    #[error("parse error{}: {msg}", fmt_loc(.line, .column))]
    Parse {
        line: Option<usize>,
        column: Option<usize>,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn fmt_loc(line: &Option<usize>, column: &Option<usize>) -> String {
    match (line, column) {
        (Some(l), Some(c)) => format!(" at line {l}, column {c}"),
        (Some(l), None) => format!(" at line {l}"),
        _ => String::new(),
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        let (line, column) = (e.line(), e.column());
        Error::Parse {
            line: if line == 0 { None } else { Some(line) },
            column: if column == 0 { None } else { Some(column) },
            msg: e.to_string(),
        }
    }
}
