//! Bayes' rule as a bare arithmetic helper, the Rule of Succession, and a
//! rejection-sampling simulation of Laplace's urn experiment.
//!
//! The urn experiment draws a success probability `p` uniformly, runs the
//! trials, and conditions on the observed evidence by rejection; the
//! frequency of success on the following trial estimates the Rule of
//! Succession value `(occurrences + 1) / (trials + 2)`.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::evidence::Evidence;
use crate::rng::{rng_from_seed, RNG_ALGORITHM};

/// Rejection conditioning on exact success counts is only feasible at desk
/// scale; the acceptance rate is `1/(trials+1)` on average but concentrates
/// badly for extreme occurrence counts.
pub const MAX_MONTE_CARLO_TRIALS: u64 = 30;

/// The Rule of Succession estimate for "the event happens on the next trial".
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SuccessionEstimate {
    pub evidence: Evidence,
    pub probability_next: f64,
}

/// Result of the urn simulation, with the reproducibility record.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub evidence: Evidence,
    /// Frequency of success on trial `trials + 1` among accepted runs.
    pub probability_next: f64,
    /// Total runs attempted.
    pub attempts: u64,
    /// Runs whose success count matched the evidence.
    pub accepted: u64,
    /// Accepted runs that then succeeded on the following trial.
    pub successes_next: u64,
    /// Generator identifier, recorded for reproducibility.
    pub rng_algorithm: &'static str,
    pub seed: u64,
}

impl MonteCarloEstimate {
    /// Binomial standard error of `probability_next` over the accepted runs.
    pub fn standard_error(&self) -> f64 {
        let p = self.probability_next;
        (p * (1.0 - p) / self.accepted as f64).sqrt()
    }
}

/// Bayes' rule `P(h|e) = P(e|h) P(h) / P(e)` on bare numbers.
pub fn bayes_posterior(likelihood: f64, prior: f64, marginal: f64) -> Result<f64> {
    for (name, value) in [
        ("likelihood", likelihood),
        ("prior", prior),
        ("marginal", marginal),
    ] {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::OutOfUnitRange { name, value });
        }
    }
    if marginal == 0.0 {
        return Err(Error::UndefinedConditional);
    }
    let joint = likelihood * prior;
    if joint > marginal {
        return Err(Error::InconsistentProbabilities { joint, marginal });
    }
    Ok(joint / marginal)
}

/// Laplace's Rule of Succession: `(occurrences + 1) / (trials + 2)`.
pub fn rule_of_succession(evidence: Evidence) -> SuccessionEstimate {
    let probability_next =
        (evidence.occurrences() as f64 + 1.0) / (evidence.trials() as f64 + 2.0);
    SuccessionEstimate {
        evidence,
        probability_next,
    }
}

/// Monte-Carlo oracle for the Rule of Succession via Laplace's urn:
/// draw `p` uniformly, run the trials, keep runs reproducing the evidence
/// exactly, and record how often the next trial succeeds.
///
/// `samples` counts attempts, not acceptances; a run that never reproduces
/// the evidence within the budget is an error rather than a silent loop.
pub fn succession_monte_carlo(
    evidence: Evidence,
    samples: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if samples == 0 {
        return Err(Error::ZeroCount { name: "samples" });
    }
    if evidence.trials() > MAX_MONTE_CARLO_TRIALS {
        return Err(Error::TrialsBeyondRejectionScale {
            trials: evidence.trials(),
            limit: MAX_MONTE_CARLO_TRIALS,
        });
    }

    let mut rng = rng_from_seed(seed);
    let mut accepted = 0u64;
    let mut successes_next = 0u64;

    for _ in 0..samples {
        let p: f64 = rng.random();
        let mut occurred = 0u64;
        for _ in 0..evidence.trials() {
            if rng.random::<f64>() < p {
                occurred += 1;
            }
        }
        if occurred != evidence.occurrences() {
            continue;
        }
        accepted += 1;
        if rng.random::<f64>() < p {
            successes_next += 1;
        }
    }

    if accepted == 0 {
        return Err(Error::InsufficientAcceptance { attempts: samples });
    }
    Ok(MonteCarloEstimate {
        evidence,
        probability_next: successes_next as f64 / accepted as f64,
        attempts: samples,
        accepted,
        successes_next,
        rng_algorithm: RNG_ALGORITHM,
        seed,
    })
}
