use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field context mismatch: Q(zeta_{0}) vs Q(zeta_{1})")]
    ContextMismatch(u32, u32),
    #[error("no square root of {value} found in Q(zeta_{n}); supply the root explicitly")]
    NeedsSquareRoot { value: String, n: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("rewriting completion failed: {0}")]
    CompletionFailure(String),
    #[error("parameter violation: {0}")]
    ParamViolation(String),
    #[error("composition factor of dimension {dim} matches no catalog simple")]
    UnmatchedFactor { dim: usize },
    #[error("projective cover check failed for {label}: {reason}")]
    CoverVerificationFailure { label: String, reason: String },
    #[error("dimension identity violated at j = {j}: {got} != {expected}")]
    IdentityViolation { j: usize, got: usize, expected: usize },
    #[error("tensor formula mismatch for {left} (x) {right}: {reason}")]
    FormulaMismatch { left: String, right: String, reason: String },
    #[error("module fails relations: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
