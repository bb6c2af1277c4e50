use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set has {n} coordinates, at most {max} are supported")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("ground set mismatch: {left} vs {right} coordinates")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("invalid ground set labels: {0}")]
    InvalidLabels(String),

    #[error("bit pattern {bits:#x} does not fit in {n} coordinates")]
    OutOfRange { bits: u64, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0} is not a member of the family")]
    NotAMember(String),

    #[error("family is not upward closed: {0} has a missing upper neighbor")]
    NotUpwardClosed(String),

    #[error("unknown characterization `{0}`")]
    UnknownCharacterization(String),

    #[error("non-finite coordinate {value} at position {index}")]
    NonFinite { index: usize, value: String },

    #[error("{0}")]
    InvalidArgument(String),
}
