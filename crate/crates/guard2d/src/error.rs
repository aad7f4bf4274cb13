//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),

    #[error("k must be at least 1")]
    ZeroSensors,

    #[error("radius must be non-negative, got {0}")]
    NegativeRadius(f64),

    #[error("single chain required (got {0} chains); use the multi-chain entry point")]
    SingleChainRequired(usize),

    #[error("perimeter samples required, got region samples")]
    PerimeterSamplesRequired,

    #[error("k = {k} is smaller than the number of boundary rings ({rings}); every ring needs its own disc")]
    TooFewSensorsForRings { k: usize, rings: usize },

    #[error("sample index {0} out of range (N = {1})")]
    IndexOutOfRange(usize, usize),

    #[error("solver budget exhausted; increase node_budget or epsilon")]
    BudgetExhausted,

    #[error("empty deployment")]
    EmptyDeployment,

    #[error("instance generation failed after {0} attempts: {1}")]
    GenerationFailed(u32, String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("documents are inconsistent: {0}")]
    DocumentMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
