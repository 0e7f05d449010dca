use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("quiver has no vertices")]
    EmptyQuiver,
    #[error("presentation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("elements belong to different algebra bases")]
    BasisMismatch,
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("morphism shapes do not compose")]
    ShapeMismatch,
    #[error("complexes live over different algebras")]
    AlgebraMismatch,
    #[error("complex is not indecomposable")]
    NotIndecomposable,
    #[error("minimal approximation failed its factorization certificate: {0}")]
    ApproximationCheckFailed(String),
    #[error("invalid quotient generator: {0}")]
    InvalidGenerator(String),
    #[error("permutation does not come from an isomorphism onto the opposite algebra")]
    InvalidSigma,
    #[error("dimension {0} exceeds the isomorphism-search cap {1}")]
    DimensionCapExceeded(usize, usize),
    #[error("only two-point algebras are supported here (got {0} vertices)")]
    UnsupportedShape(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
