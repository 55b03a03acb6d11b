use thiserror::Error;

/// Errors produced by the toolkit.
///
/// Mathematical verdicts (a relation failing, a chain with a chord, a pattern
/// exceeding its genus budget) are reported as data, not as errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate form: {0}")]
    DegenerateForm(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("inconclusive: node cap of {cap} reached after {explored} nodes without exhausting the search")]
    Inconclusive { cap: u64, explored: u64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
