use thiserror::Error;

use crate::exactlin::Field;

/// Errors shared by every layer of the toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("dimension mismatch in {context}: {left} vs {right}")]
    DimMismatch {
        context: &'static str,
        left: String,
        right: String,
    },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix shape {rows}x{cols} does not hold {len} entries")]
    BadShape { rows: usize, cols: usize, len: usize },

    #[error("cannot compose: codomain of inner is [{inner_cod}], domain of outer is [{outer_dom}]")]
    WordMismatch { inner_cod: String, outer_dom: String },

    #[error("morphism matrix must be {expect_rows}x{expect_cols} for cod/dom dims, got {rows}x{cols}")]
    MorShape {
        expect_rows: usize,
        expect_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("objects do not match in {context}: [{left}] vs [{right}]")]
    ObjectMismatch {
        context: &'static str,
        left: String,
        right: String,
    },

    #[error("structures live over different base algebras ({context})")]
    AlgebraMismatch { context: &'static str },

    #[error("division by zero (or non-invertible scalar)")]
    DivisionByZero,

    #[error("invalid scalar literal `{text}`: {reason}")]
    BadScalar { text: String, reason: String },

    #[error("{0} is not a valid prime modulus (need an odd prime or 2, below 2^31)")]
    BadModulus(u64),

    #[error("map does not descend to the quotient: it does not kill the relation subspace")]
    DescentFailure,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("workspace error at {path}: {reason}")]
    Workspace { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
