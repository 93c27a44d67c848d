use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("shape mismatch in {op}: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("invalid tolerance: abs_tol={abs_tol}, rel_tol={rel_tol} (both must be finite and non-negative)")]
    InvalidTolerance { abs_tol: f64, rel_tol: f64 },

    #[error("unknown family `{0}` (expected one of C36, C48, C412, C510, C515, C612)")]
    UnknownFamily(String),

    #[error(
        "not a coherent family: resolution-of-identity residual {residual:.3e} exceeds {tol:.3e}"
    )]
    NotCoherentFamily { residual: f64, tol: f64 },

    #[error("coherent states {first} and {second} coincide")]
    DuplicateStates { first: usize, second: usize },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
