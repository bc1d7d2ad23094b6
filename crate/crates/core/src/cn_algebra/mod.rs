//! The algebras C_N^ε = R[q]/(q^N − ε).
//!
//! Elements are coefficient vectors in the basis 1, q, …, q^{N−1}. The conjugates
//! z^{(s)} send q to ζ_N^s q, and the norm is the product of all N conjugates.

mod norm;
mod number;
pub mod printed;

pub use norm::{
    expand_norm_form, factorization_check, printed_form, printed_form_diffs,
    sextic_b_display_matrix, FactorizationReport, NormForm, PolyDiff, TermDiff,
    MAX_NORM_FORM_ORDER,
};
pub use number::{CnNumber, Eps, NormScalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnError {
    #[error("operands live in different algebras")]
    StructureMismatch,
    #[error("order N = {0} outside the supported range")]
    OrderOutOfRange(usize),
    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("conjugate index {s} must be below N = {n}")]
    ConjugateIndex { s: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
