use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gram matrix is not symmetric")]
    AsymmetricGram,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("lattice is degenerate")]
    DegenerateLattice,
    #[error("zero vector")]
    ZeroVector,
    #[error("isotropic vector admits no reflection")]
    IsotropicVector,
    #[error("rescaling by zero is not a lattice operation")]
    ZeroScale,
    #[error("unknown lattice kind `{0}`")]
    UnknownKind(String),
    #[error("invalid rank {rank} for lattice kind `{kind}`")]
    InvalidRank { kind: String, rank: usize },
    #[error("glue data is not an isotropic graph of dual classes")]
    NotIsotropicGraph,
    #[error("glued overlattice has a non-integral pairing")]
    NonIntegralOverlattice,
    #[error("anti-isometry search between the discriminant forms found nothing")]
    GlueSearchFailed,
    #[error("finite form is not 2-elementary")]
    NotTwoElementary,
    #[error("finite quadratic form takes non-integer values")]
    NonIntegerValues,
    #[error("group enumeration bound exceeded")]
    EnumerationBoundExceeded,
    #[error("lattice is not positive definite")]
    NotPositiveDefinite,
    #[error("closure cap exceeded")]
    CapExceeded,
    #[error("reflection does not preserve the lattice")]
    NonIntegralReflection,
    #[error("vector is not a usable root: {0}")]
    NotARoot(String),
    #[error("span of the root and the fixed complement is not positive definite")]
    NotPositiveDefiniteSpan,
    #[error("family has no Fermat member: {0}")]
    NoFermatMember(String),
    #[error("operation requires an even-dimensional hypersurface")]
    OddDimension,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
