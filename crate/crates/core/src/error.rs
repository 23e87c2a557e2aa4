use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector length {found} does not match algebra dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("algebra is not nilpotent (lower central series stalls at dimension {stalled_at})")]
    NotNilpotent { stalled_at: usize },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("s(L) is only defined for non-abelian algebras")]
    AbelianInput,

    #[error("operation requires nilpotency class 2, got class {class}")]
    WrongClass { class: usize },

    #[error("Hall basis of dimension {needed} exceeds the cap of {cap}")]
    ResourceLimit { needed: usize, cap: usize },

    #[error("unknown catalogue entry `{0}`")]
    UnknownName(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("parameter `{0}` is used but never bound")]
    MissingParameter(String),

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: bracket [{i},{j}] given twice")]
    DuplicateBracket { line: usize, i: usize, j: usize },

    #[error("Jacobi identity fails for basis triple ({i},{j},{k})")]
    JacobiFailure { i: usize, j: usize, k: usize },
}
