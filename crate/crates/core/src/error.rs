use thiserror::Error;

use crate::rings::RingId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingId, right: RingId },

    #[error("bit pattern {bits:#06b} is not an element of {ring}")]
    InvalidElement { bits: u8, ring: RingId },

    #[error("invalid symbol `{symbol}` for ring {ring}")]
    InvalidSymbol { symbol: char, ring: RingId },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("group mismatch: orders {left} and {right}")]
    GroupMismatch { left: usize, right: usize },

    #[error("invalid listing: {0}")]
    InvalidListing(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("code dimension {k} exceeds the enumeration limit of {limit}")]
    ResourceLimit { k: usize, limit: usize },

    #[error("weight enumerator classification failed: {0}")]
    Classification(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown row `{0}`")]
    UnknownRow(String),

    #[error("dependency `{0}` did not produce a usable code")]
    Dependency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
