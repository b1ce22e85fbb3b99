//! Shared error type for the estimation toolkit.

use thiserror::Error;

/// Errors produced by construction, estimation, and I/O routines.
#[derive(Debug, Error)]
pub enum ScatterError {
    #[error("matrix must be square, found {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("{what} contains non-finite entries")]
    NonFinite { what: &'static str },

    #[error("dimension mismatch for {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{what} is not positive definite")]
    NotPositiveDefinite { what: &'static str },

    #[error("matrix square root requires a positive-semidefinite input")]
    NotPositiveSemidefinite,

    #[error("inverse condition number is undefined without a positive eigenvalue")]
    ZeroMatrix,

    #[error("trace normalization requires a positive finite trace, found {trace}")]
    NonPositiveTrace { trace: f64 },

    #[error("sample set is empty after zero-row cleaning")]
    EmptySampleSet,

    #[error("invalid parameter {name}: {message}")]
    InvalidParameter {
        name: &'static str,
        message: String,
    },

    #[error("subspace enumeration needs {required} subsets, over the cap of {cap}")]
    EnumerationCapExceeded { required: u128, cap: u128 },

    #[error("interval bounds for diagonal entry {index} are infeasible")]
    InfeasibleInterval { index: usize },

    #[error("no feasible grid point: every candidate was infeasible or diverged")]
    NoFeasibleGridPoint,

    #[error("validation window is degenerate: returns are constant")]
    DegenerateValidation,

    #[error("csv parse failure at data row {row}: {message}")]
    CsvParse { row: usize, message: String },

    #[error("dates must be strictly increasing: violation at data row {row}")]
    NonMonotoneDates { row: usize },

    #[error("price at data row {row}, column {column} must be positive, found {value}")]
    NonPositivePrice {
        row: usize,
        column: usize,
        value: f64,
    },

    #[error("need at least {needed} {what}, found {found}")]
    InsufficientRows {
        what: &'static str,
        needed: usize,
        found: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
