use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("vector length {found} does not match dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("family is linearly dependent")]
    LinearlyDependent,

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("{0} requires an isotropic subspace (t >= 1)")]
    NoIsotropicSubspace(&'static str),

    #[error("not a direct sum: {0}")]
    NotDirectSum(String),

    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("matrix is not in the algebra {0}")]
    NotInAlgebra(String),

    #[error("algebra does not preserve the subspace")]
    DoesNotPreserve,

    #[error("unexpected curvature space dimension {found} (expected {expected})")]
    UnexpectedCurvatureDim { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
