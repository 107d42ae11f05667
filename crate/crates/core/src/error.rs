use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("falling factorial P^{k}_{r} is undefined (need k >= 1 and 0 <= r <= k)")]
    FallingFactorialDomain { k: u64, r: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("m_index requires k >= 2, got {0}")]
    MIndexDomain(u64),

    #[error("n = {n} is too small (need n >= {min})")]
    TooFewVertices { n: u64, min: u64 },

    #[error("n = {n} exceeds the oracle cap of {cap}")]
    OracleCap { n: u64, cap: u64 },

    #[error("enumeration cap exceeded: {what} is {actual}, cap is {cap}")]
    EnumerationCap {
        what: &'static str,
        actual: u128,
        cap: u128,
    },

    #[error("graph is not permutation-labeled: {0}")]
    NotPermutation(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
