use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("cannot parse rational literal {0:?}")]
    ParseRational(String),
    #[error("invalid structure constants: {0}")]
    InvalidTable(String),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("matrix is not a derivation: {0}")]
    NotADerivation(String),
    #[error("matrix is not an automorphism")]
    NotAnAutomorphism,
    #[error("Jacobi identity fails on {count} basis triple(s), first at ({first})")]
    JacobiFailure { count: usize, first: String },
    #[error("non-rational eigenvalues: characteristic polynomial does not split over Q")]
    NonRationalEigenvalues,
    #[error("not an sl2 weight multiset: {0}")]
    InconsistentWeights(String),
    #[error("invalid sl2 triple: {0}")]
    InvalidTriple(String),
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("{0}")]
    OutOfScope(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("missing parameter {param:?} for {entry}")]
    MissingParameter { entry: String, param: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
