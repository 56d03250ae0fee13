use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("vectors are linearly dependent")]
    DependentFamily,
    #[error("matrix is not an element of {0}")]
    NotInAlgebra(String),
    #[error("algebra mismatch: expected {expected}, found {found}")]
    AlgebraMismatch { expected: String, found: String },
    #[error("the zero vector generates no submodule")]
    ZeroVector,
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("embedding check failed: {0}")]
    InvalidEmbedding(String),
    #[error("Killing form is degenerate on the subalgebra; witness {witness}")]
    DegenerateKilling { witness: String },
    #[error("weight computation failed: {0}")]
    NonIntegralWeight(String),
    #[error("decomposition incomplete: {0}")]
    Incomplete(String),
    #[error("module is not irreducible: commutant has dimension {0}")]
    NotIrreducible(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
