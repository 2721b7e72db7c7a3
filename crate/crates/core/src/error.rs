use thiserror::Error;

#[derive(Debug, Error)]
pub enum KronError {
    #[error("invalid partition `{0}`")]
    InvalidPartition(String),

    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    #[error("character table for n = {n} exceeds the configured maximum {max}")]
    TableTooLarge { n: u32, max: u32 },

    #[error("series caps {caps:?} exceed the configured maximum weight {max}")]
    SeriesTooLarge { caps: [u32; 3], max: u32 },

    #[error("series caps differ: {0:?} vs {1:?}")]
    CapMismatch([u32; 3], [u32; 3]),

    #[error("key {key} lies beyond the series caps {caps:?}")]
    BeyondCaps { key: String, caps: [u32; 3] },

    #[error("non-integral coefficient {value} at {key}")]
    NotIntegral { key: String, value: String },

    #[error("invalid growth vector {0}")]
    InvalidGrowth(String),

    #[error("expression error: {0}")]
    Expression(String),

    #[error("no stabilization up to n = {max_n}: {detail}")]
    NoStabilization { max_n: u32, detail: String },

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl KronError {
    /// True for refusals caused by configured resource limits rather than bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            KronError::TableTooLarge { .. } | KronError::SeriesTooLarge { .. } | KronError::NoStabilization { .. }
        )
    }
}

pub type Result<T, E = KronError> = std::result::Result<T, E>;
