use thiserror::Error;

use crate::mn::CharValue;
use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse partition at token {token:?}: {reason}")]
    Parse { token: String, reason: &'static str },

    #[error("weight mismatch: {left} has weight {left_weight}, {right} has weight {right_weight}")]
    WeightMismatch {
        left: Partition,
        left_weight: usize,
        right: Partition,
        right_weight: usize,
    },

    #[error("beta-set length {length} is smaller than the {parts} parts of {partition}")]
    BetaLength {
        partition: Partition,
        length: usize,
        parts: usize,
    },

    #[error("{mu} is not a sign partition: [{lambda}]({mu}) = {value}")]
    NotSign {
        mu: Partition,
        lambda: Partition,
        value: CharValue,
    },

    #[error("{mu} needs at least {needed} parts")]
    TooFewParts { mu: Partition, needed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
