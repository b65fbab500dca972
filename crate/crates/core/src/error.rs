use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("{0}")]
    Capability(String),

    #[error("eigensolver did not converge ({reason}); matrix fingerprint {fingerprint:016x}")]
    Numeric { reason: String, fingerprint: u64 },

    #[error("walk count overflow at r = {r}; use a smaller r")]
    WalkOverflow { r: u32 },

    #[error("unknown check id `{id}`; known ids: {known}")]
    UnknownCheck { id: String, known: String },

    #[error("invalid edge weights: {0}")]
    Weights(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn graph6(offset: usize, reason: impl Into<String>) -> Self {
        Error::Graph6 {
            offset,
            reason: reason.into(),
        }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
