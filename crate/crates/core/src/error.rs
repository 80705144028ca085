use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field orders differ ({0} vs {1}); embed into a common order first")]
    OrderMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("order {target} is not a multiple of {source_order}")]
    NotMultiple { source_order: u32, target: u32 },
    #[error("exponent {k} is not coprime to order {m}")]
    NotCoprime { k: i64, m: u32 },
    #[error("element is not real")]
    NotReal,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
