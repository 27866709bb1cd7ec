use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 65536)")]
    InvalidPrime(u32),

    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),

    #[error("group algebra context mismatch: {0}")]
    ContextMismatch(String),

    #[error("p^r = {p}^{r} does not fit in the platform count type")]
    OrderOverflow { p: u32, r: usize },

    #[error("subspace is not contained in the ambient span")]
    NotContained,

    #[error("linear system is inconsistent: {0}")]
    Inconsistent(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unsupported format version {found:?}, expected {expected:?}")]
    Version { found: String, expected: String },

    #[error("checksum mismatch: stored {stored}, computed {computed}")]
    Checksum { stored: String, computed: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn dims(op: &'static str, detail: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn invariant(detail: impl Into<String>) -> Self {
        Error::Invariant(detail.into())
    }
}
