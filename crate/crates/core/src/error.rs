use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid Cbit label {0}; expected 0 or 1")]
    InvalidCbit(u8),

    #[error("({alpha}, {beta}) is not on the unit circle (alpha^2 + beta^2 = {radius_sq})")]
    NotOnCircle { alpha: f64, beta: f64, radius_sq: f64 },

    #[error("action is not invertible: |alpha^2 - beta^2| = {gap:e} is below the singular tolerance")]
    SingularInverse { gap: f64 },

    #[error("plane-wave branch is singular: |mc^2 + lambda E_p| = {denominator:e}")]
    SingularBranch { denominator: f64 },

    #[error("energy branch must be +1 or -1, got {0}")]
    InvalidBranch(i8),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid physical parameters: {0}")]
    InvalidParams(String),

    #[error("invalid time step: {0}")]
    InvalidStep(String),
}

pub type Result<T> = std::result::Result<T, Error>;
