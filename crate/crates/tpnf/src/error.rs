use thiserror::Error;

/// Errors surfaced by constructors, solvers and the document layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {dim} out of range {min}..={max}")]
    DimOutOfRange { dim: usize, min: usize, max: usize },

    #[error("entry index ({i},{j},{k}) out of range for dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },

    #[error("vector length {len} does not match dimension {dim}")]
    LengthMismatch { len: usize, dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is {rows}x{cols}, expected square of size {expected}")]
    NotSquare {
        rows: usize,
        cols: usize,
        expected: usize,
    },

    #[error("automorphism parameter A1 must be nonzero")]
    ZeroLeadingParam,

    #[error("parameter vector has length {len}, expected {expected}")]
    ParamLength { len: usize, expected: usize },

    #[error("bracket is not in the parameterized family: first mismatch at entry ({i},{j},{k})")]
    NotInFamily { i: usize, j: usize, k: usize },

    #[error("alpha vector is identically zero")]
    AllZeroAlpha,

    #[error("invalid rational literal {text:?} (expected -?[0-9]+(/[1-9][0-9]*)?)")]
    BadRational { text: String },

    #[error("transcript replay diverged at step {step}")]
    ReplayMismatch { step: usize },

    #[error("{location}: {message}")]
    Document { location: String, message: String },

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable machine-readable tag used by the CLI error object and the C API.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimOutOfRange { .. } => "dim-out-of-range",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::SingularMatrix => "singular-matrix",
            Error::NotSquare { .. } => "not-square",
            Error::ZeroLeadingParam => "zero-leading-param",
            Error::ParamLength { .. } => "param-length",
            Error::NotInFamily { .. } => "not-in-family",
            Error::AllZeroAlpha => "all-zero-alpha",
            Error::BadRational { .. } => "bad-rational",
            Error::ReplayMismatch { .. } => "replay-mismatch",
            Error::Document { .. } => "document",
            Error::Json(_) => "json",
        }
    }
}
