use thiserror::Error;

/// Errors raised by the analysis pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),

    #[error("matrix is empty")]
    Empty,

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("matrix is not Hermitian (relative deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("matrix is not skew-Hermitian (relative deviation {0:.3e})")]
    NotSkewHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    InvalidTrace(f64),

    #[error("not positive semidefinite (min eigenvalue {0:.3e})")]
    NotPositive(f64),

    #[error("at least one generator is required")]
    NoGenerators,

    #[error("closure produced {size} elements, more than the {limit} allowed in dimension {dim}")]
    ClosureOverflow {
        size: usize,
        limit: usize,
        dim: usize,
    },

    #[error("no invariant form: the joint null space is trivial")]
    NoForm,

    #[error("ambiguous invariant form: joint null space has dimension {0}")]
    AmbiguousForm(usize),

    #[error("invariant form is not proportional to a unitary (deviation {0:.3e})")]
    FormNotUnitary(f64),

    #[error("spectrum clustering is ambiguous near gap {0:.3e}")]
    AmbiguousSpectrum(f64),

    #[error("rank decision is ambiguous: singular value {value:.3e} is within a factor 10 of cutoff {cutoff:.3e}")]
    AmbiguousRank { value: f64, cutoff: f64 },

    #[error("numerical routine failed: {0}")]
    Numerical(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation error in `{matrix}`: {invariant}")]
    Validation { matrix: String, invariant: String },

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("command requires a control system but the document has none")]
    MissingSystem,
}

pub type Result<T> = std::result::Result<T, Error>;
