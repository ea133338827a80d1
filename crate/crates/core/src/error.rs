//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by constructors and operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A maximum-likelihood estimate needs at least one trial.
    #[error("no observations: the maximum-likelihood estimate is undefined for zero trials")]
    NoObservations,

    /// Occurrence count larger than the trial count.
    #[error("occurrences ({occurrences}) exceed trials ({trials})")]
    OccurrencesExceedTrials { occurrences: u64, trials: u64 },

    /// A probability-like quantity fell outside `[0, 1]` (or was NaN).
    #[error("{name} = {value} is outside [0, 1]")]
    OutOfUnitRange { name: &'static str, value: f64 },

    /// Interval endpoints supplied in the wrong order.
    #[error("interval endpoints out of order: lo = {lo} > hi = {hi}")]
    IntervalOutOfOrder { lo: f64, hi: f64 },

    /// Conditioning on an event of probability zero.
    #[error("marginal probability is zero: the conditional is undefined")]
    UndefinedConditional,

    /// `likelihood * prior` exceeded the marginal, so the inputs cannot
    /// describe a single probability space.
    #[error("inconsistent probabilities: likelihood*prior = {joint} exceeds marginal = {marginal}")]
    InconsistentProbabilities { joint: f64, marginal: f64 },

    /// Rejection sampling accepted no runs within the attempt budget.
    #[error("no accepted runs after {attempts} attempts")]
    InsufficientAcceptance { attempts: u64 },

    /// Rejection conditioning is only feasible at desk scale.
    #[error("trials = {trials} exceeds the rejection-sampling limit of {limit}")]
    TrialsBeyondRejectionScale { trials: u64, limit: u64 },

    /// A sample or trial budget of zero was requested.
    #[error("{name} must be at least 1")]
    ZeroCount { name: &'static str },

    /// Demon regime parameters violate `p_low < lower < upper < p_high`.
    #[error("invalid demon config: {0}")]
    InvalidDemonConfig(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
