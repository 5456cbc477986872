use thiserror::Error;

/// Errors raised by the exact linear-algebra and preserver routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: String, found: String },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("x and Ax are linearly dependent")]
    DependentPair,
    #[error("rank-one factor is zero")]
    ZeroFactor,
    #[error("matrix has rank {rank}, expected rank one")]
    NotRankOne { rank: usize },
    #[error("matrix is not a rank-one idempotent")]
    NotRankOneIdempotent,
    #[error("entries length {len} does not match {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, len: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn size(expected: impl Into<String>, found: impl Into<String>) -> Self {
        Error::SizeMismatch {
            expected: expected.into(),
            found: found.into(),
        }
    }
}
