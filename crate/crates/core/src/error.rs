use thiserror::Error;

/// Errors raised by model, stability and metric operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("model mismatch: {0}")]
    ModelMismatch(String),

    #[error("zero object has no phase or mass")]
    ZeroObject,

    #[error("model is not HN-complete: no valid filtration chain for {witness}")]
    NotHnComplete { witness: String },

    #[error("uniqueness violation: inequivalent HN chains for {witness} ({detail})")]
    UniquenessViolation { witness: String, detail: String },

    #[error("heart not resolvable in atlas: members {{{members}}}")]
    HeartNotInAtlas { members: String },

    #[error("invalid stability condition: {0}")]
    InvalidStability(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("model data error: {0}")]
    ModelData(String),

    #[error("model too large: heart atlas exceeded cap of {cap} hearts")]
    ModelTooLarge { cap: usize },

    #[error("exact arithmetic required: {0}")]
    ExactRequired(String),

    #[error("needs more samples: {0}")]
    NeedsMoreSamples(String),

    #[error("inconsistent sequence: {0}")]
    InconsistentSequence(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
