use thiserror::Error;

/// Errors raised by the analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value {value} at position {position}")]
    NonFinite { position: usize, value: f64 },

    #[error("expected {expected} values, got {actual}")]
    Shape { expected: usize, actual: usize },

    #[error("series has {actual} observations, at least {required} are required")]
    SeriesTooShort { required: usize, actual: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{0} label(s) supplied for {1} value(s)")]
    LabelMismatch(usize, usize),

    #[error("at least {required} observations are required, got {actual}")]
    TooFew { required: usize, actual: usize },

    #[error("empty input")]
    Empty,

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("pattern index {index} out of range for {dimension}! patterns")]
    IndexOutOfRange { index: usize, dimension: usize },

    #[error("alphabet sizes differ: {0} vs {1}")]
    AlphabetMismatch(usize, usize),

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("entropy {0} outside [0, 1]")]
    EntropyOutOfRange(f64),

    #[error("mean test not applicable: both groups are constant with equal means")]
    NotApplicable,
}

pub type Result<T> = std::result::Result<T, Error>;
