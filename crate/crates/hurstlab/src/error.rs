use thiserror::Error;

/// Errors raised by series construction, estimator configuration and the
/// statistical reductions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("price at index {index} is not strictly positive (got {value})")]
    NonPositivePrice { index: usize, value: f64 },

    #[error("timestamps must be strictly increasing (violation at index {index})")]
    NonIncreasingTimestamp { index: usize },

    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },

    #[error("series too short: {what} needs at least {min} samples, got {len}")]
    TooShort {
        what: &'static str,
        min: usize,
        len: usize,
    },

    #[error("invalid box size {tau}: a degree-{degree} detrend needs tau >= {min}")]
    TauTooSmall {
        tau: usize,
        degree: usize,
        min: usize,
    },

    #[error("invalid box size {tau}: exceeds limit {max} for series length {len}")]
    TauTooLarge { tau: usize, max: usize, len: usize },

    #[error("box sizes must be strictly increasing")]
    UnorderedTaus,

    #[error("no box sizes configured")]
    EmptyTaus,

    #[error("insufficient scaling range: {usable} usable scales, need at least 3")]
    InsufficientScalingRange { usable: usize },

    #[error("window exceeds series: window {window}, series length {len}")]
    WindowExceedsSeries { window: usize, len: usize },

    #[error("window too small: {window} samples, noise floor is {min}")]
    WindowTooSmall { window: usize, min: usize },

    #[error("shift must be at least 1")]
    ZeroShift,

    #[error("hurst index must lie in (0, 1), got {value}")]
    HurstOutOfRange { value: f64 },

    #[error("stability index must lie in (0, 2], got {value}")]
    AlphaOutOfRange { value: f64 },

    #[error("circulant embedding produced a negative eigenvalue ({value:.3e}); cannot sample")]
    EmbeddingFailed { value: f64 },

    #[error("no samples")]
    NoSamples,

    #[error("need at least {min} scales with usable spread, got {got}")]
    TooFewScales { min: usize, got: usize },

    #[error("scale {scale} has {len} samples, need at least {min}")]
    TooFewSamplesAtScale {
        scale: usize,
        len: usize,
        min: usize,
    },

    #[error("duplicate scale {scale} in family")]
    DuplicateScale { scale: usize },

    #[error("subperiod split into {parts} parts needs at least {required} samples, got {len}")]
    TooFewSamplesForSplit {
        parts: usize,
        required: usize,
        len: usize,
    },

    #[error("subperiod count must be at least 2, got {parts}")]
    TooFewSubperiods { parts: usize },

    #[error("histogram needs at least one bin")]
    NoBins,

    #[error("repeats must be at least 1")]
    ZeroRepeats,
}

pub type Result<T> = std::result::Result<T, Error>;
