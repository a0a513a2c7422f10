use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max |m - m†| entry {deviation:.3e} exceeds {tolerance:.1e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("dimension mismatch: expected {expected}x{expected}, got {rows}x{cols}")]
    DimensionMismatch {
        expected: usize,
        rows: usize,
        cols: usize,
    },

    #[error("matrix entries must be finite")]
    NonFiniteEntries,

    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("alpha = {0} outside the admissible range [2, 5]")]
    AlphaOutOfRange(f64),

    #[error("{name} = {value} outside the admissible range [0, 1]")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("{name} = {value} is unused by topology {topology} and must be 0")]
    UnusedParameterNonzero {
        name: &'static str,
        value: f64,
        topology: &'static str,
    },

    #[error("Kraus set '{label}' violates completeness: max |Σ E†E - I| entry {deviation:.3e}")]
    IncompleteKrausSet { label: String, deviation: f64 },

    #[error("no closed-form spectrum for topology {0}")]
    UnsupportedTopology(&'static str),

    #[error("axis parameter {axis} is not swept by topology {topology}")]
    InvalidAxis {
        topology: &'static str,
        axis: &'static str,
    },

    #[error("density matrix invariant violated: {0}")]
    InvalidDensityMatrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
