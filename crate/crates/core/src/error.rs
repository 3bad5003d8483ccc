use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime below 65536")]
    InvalidPrime(u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("Gröbner completion did not confirm a basis: {0}")]
    Completion(String),
    #[error("algebra is not finite dimensional (normal words of length {0} exist)")]
    NotFinite(usize),
    #[error("invalid augmentation: {0}")]
    Augmentation(String),
    #[error("invalid group action: {0}")]
    Action(String),
    #[error("computation needs about {needed_mb} MB, budget is {budget_mb} MB")]
    BudgetExceeded { needed_mb: u64, budget_mb: u64 },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
