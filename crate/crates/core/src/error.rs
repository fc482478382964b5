use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u64),

    #[error("table is not a group: {0}")]
    NotAGroup(String),

    #[error("braid on {0} strands is not supported here (need 3)")]
    UnsupportedStrandCount(usize),

    #[error("coset enumeration failed: {0}")]
    EnumerationFailure(String),

    #[error("invalid move site: {0}")]
    InvalidMoveSite(String),

    #[error("diagram too large: {crossings} crossings exceeds cap {cap}")]
    TooLarge { crossings: usize, cap: usize },

    #[error("corpus error: {0}")]
    Corpus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
