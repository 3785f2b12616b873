//! Error types shared across the crate.

use thiserror::Error;

/// Errors from matrix construction, parsing, and decompositions.
#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("{rows}x{cols} matrix needs {} entries, got {got}", rows * cols)]
    EntryCountMismatch { rows: usize, cols: usize, got: usize },

    #[error("declared {declared} rows but entries has {got}")]
    RowCountMismatch { declared: usize, got: usize },

    #[error("row {row} has {got} entries, declared {declared} columns")]
    RaggedRow { row: usize, declared: usize, got: usize },

    #[error("invalid matrix JSON: {0}")]
    Json(String),

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max |A_ij - conj(A_ji)| = {defect:.3e}")]
    NotHermitian { defect: f64 },

    #[error("dimension {n} exceeds the eigensolver cap of {cap}")]
    DimensionTooLarge { n: usize, cap: usize },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("matrix is singular to working precision")]
    Singular,
}

/// Errors from bound checks: bad inputs rather than violated inequalities.
#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eig:.3e}")]
    NotPsd { min_eig: f64 },

    #[error("matrix is not a contraction: largest singular value {sigma_max}")]
    NotContraction { sigma_max: f64 },

    #[error("matrix is not a strict contraction: largest singular value {sigma_max}")]
    NotStrictContraction { sigma_max: f64 },

    #[error("dimension mismatch: first operand is {n1}x{n1}, second is {n2}x{n2}")]
    DimensionMismatch { n1: usize, n2: usize },

    #[error("index sequence {indices:?} is not strictly increasing in 1..={n}")]
    BadIndexSequence { indices: Vec<usize>, n: usize },

    #[error("{what} must satisfy {constraint}, got {got}")]
    BadParameter {
        what: &'static str,
        constraint: &'static str,
        got: usize,
    },

    #[error("indices must satisfy 1 <= i < j <= n, got i={i}, j={j}, n={n}")]
    BadIndices { i: usize, j: usize, n: usize },

    #[error("sequence entries must be nonnegative, found {value}")]
    NegativeInput { value: f64 },

    #[error("sequences must have equal lengths, got {a} and {b}")]
    LengthMismatch { a: usize, b: usize },

    #[error("{what} must be descending, finite, and nonnegative")]
    BadSequence { what: &'static str },

    #[error("matrix is not a partial isometry: max |U*U - I| = {defect:.3e}")]
    NotPartialIsometry { defect: f64 },

    #[error("column 1 must vanish on rows {first_bad_row}..n, found entry of modulus {size:.3e}")]
    ZeroPatternViolated { first_bad_row: usize, size: f64 },

    #[error("frame is not orthonormal: max |U*U - I| = {defect:.3e}")]
    NotOrthonormal { defect: f64 },

    #[error("frame column {column} leaves its nested span: residual {residual:.3e}")]
    FrameNotNested { column: usize, residual: f64 },

    #[error("unknown check name: {0}")]
    UnknownCheck(String),

    #[error("invalid campaign configuration: {0}")]
    InvalidConfig(String),
}
