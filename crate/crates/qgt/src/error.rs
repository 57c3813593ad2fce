use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("grid size must be an even integer >= 2, got {0}")]
    InvalidGridSize(usize),

    #[error("non-finite sample {value} at node {index} (t = {t:.6e})")]
    NonFiniteSample { index: usize, t: f64, value: String },

    #[error("sampled functions live on different grids ({0} vs {1} nodes)")]
    GridMismatch(usize, usize),

    #[error("exponent p must lie in (1, inf), got {0}")]
    InvalidExponent(f64),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("invalid weight spec `{spec}`: {reason}")]
    WeightSpec { spec: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
