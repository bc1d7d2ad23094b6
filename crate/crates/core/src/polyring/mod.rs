//! Sparse multivariate polynomials over Q(ζ_N) and square matrices over rings.

mod matrix;
mod multipoly;
mod parse;

pub use matrix::{Matrix, PolyMatrix, MAX_DET_DIM};
pub use multipoly::MultiPoly;
pub use parse::parse_poly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("variable index {index} out of range for {nvars} variables")]
    VarOutOfRange { index: usize, nvars: usize },
    #[error("matrix dimension {0} exceeds the cofactor limit {MAX_DET_DIM}")]
    DimTooLarge(usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
