use thiserror::Error;

/// Crate-wide error type. Precondition violations named by the operation
/// contracts surface as variants here; internal invariant breaks panic.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("size cap exceeded: {0}")]
    SizeCapExceeded(String),
    #[error("modulus must be a prime at most 97, got {0}")]
    InvalidModulus(u64),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
    #[error("subspaces are not compatible")]
    NotCompatible,
    #[error("degenerate pair: {0}")]
    DegeneratePair(String),
    #[error("family is not pairwise compatible")]
    NotCompatibleSet,
    #[error("family is not closed under orthocomplementation")]
    NotComplementClosed,
    #[error("subset contains non-members of the apartment")]
    NotMembers,
    #[error("apartment frame is not orthogonal")]
    NotOrthoApartment,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("maximal clique is neither a star nor a top")]
    UnclassifiableClique,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
