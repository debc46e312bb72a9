use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { outer: String, inner: String },

    #[error("skew shape {0} has no boxes")]
    EmptyShape(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid descent set {positions:?} for size {n}")]
    InvalidDescentSet { n: usize, positions: Vec<usize> },

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("filling is not a standard Young tableau")]
    NotStandard,

    #[error("coefficient overflow")]
    Overflow,

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("witness precondition failed: {0}")]
    WitnessPrecondition(String),

    #[error("witness construction broke an invariant: {0}")]
    WitnessInternal(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
