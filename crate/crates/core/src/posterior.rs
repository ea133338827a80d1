//! The Beta-shaped posterior induced by a uniform prior on the event
//! probability, and the confidence it assigns to probability intervals.
//!
//! Observing `k` occurrences in `n` trials under a uniform prior yields the
//! posterior density `x^k (1-x)^(n-k) / B(k+1, n-k+1)`, i.e. Beta(k+1, n-k+1).
//! The confidence on an interval `D` is the posterior mass of `D`, the ratio
//! of the kernel integral over `D` to the integral over `[0, 1]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::evidence::{Evidence, ProbInterval};
use crate::special::{betainc, ln_beta};

/// Evidence, an interval, and the posterior mass the evidence puts on it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConfidenceReport {
    pub evidence: Evidence,
    pub interval: ProbInterval,
    pub confidence: f64,
}

/// Beta shape parameters of the posterior: `(occurrences + 1, failures + 1)`.
pub(crate) fn shape_params(evidence: Evidence) -> (f64, f64) {
    (
        evidence.occurrences() as f64 + 1.0,
        evidence.failures() as f64 + 1.0,
    )
}

/// Posterior mode; for at least one trial this equals the maximum-likelihood
/// estimate `occurrences / trials`.
pub(crate) fn mode(evidence: Evidence) -> f64 {
    if evidence.trials() == 0 {
        // Uniform posterior: every point is modal; the midpoint is as good
        // a representative as any.
        0.5
    } else {
        evidence.occurrences() as f64 / evidence.trials() as f64
    }
}

/// Maximum-likelihood estimate of the event probability, `occurrences/trials`.
pub fn mle_estimate(evidence: Evidence) -> Result<f64> {
    if evidence.trials() == 0 {
        return Err(Error::NoObservations);
    }
    Ok(evidence.occurrences() as f64 / evidence.trials() as f64)
}

/// Log of the normalized posterior density at `x`.
///
/// Returns negative infinity where the kernel vanishes (an endpoint with a
/// strictly positive exponent).
pub fn posterior_log_density(evidence: Evidence, x: f64) -> Result<f64> {
    check_unit("x", x)?;
    let k = evidence.occurrences();
    let f = evidence.failures();
    let (a, b) = shape_params(evidence);

    // x^0 and (1-x)^0 contribute nothing even at the endpoints.
    let mut log_kernel = 0.0;
    if k > 0 {
        log_kernel += k as f64 * x.ln();
    }
    if f > 0 {
        log_kernel += f as f64 * (1.0 - x).ln();
    }
    Ok(log_kernel - ln_beta(a, b))
}

/// Posterior CDF at `x`: the regularized incomplete beta function
/// I_x(occurrences+1, failures+1).
pub fn posterior_cdf(evidence: Evidence, x: f64) -> Result<f64> {
    check_unit("x", x)?;
    let (a, b) = shape_params(evidence);
    Ok(betainc(a, b, x))
}

/// Confidence that the true event probability lies in `interval`: the
/// posterior mass `cdf(hi) - cdf(lo)`.
pub fn confidence_on_interval(evidence: Evidence, interval: ProbInterval) -> ConfidenceReport {
    let (a, b) = shape_params(evidence);
    let confidence = betainc(a, b, interval.hi()) - betainc(a, b, interval.lo());
    ConfidenceReport {
        evidence,
        interval,
        // Subtraction of two monotone CDF values can only leave [0, 1]
        // through rounding.
        confidence: confidence.clamp(0.0, 1.0),
    }
}

/// Closed-form confidence for all-success evidence `(n, n)` on `[lo, 1]`:
/// `1 - lo^(n+1)`.
pub fn all_success_confidence(n: u64, lo: f64) -> Result<f64> {
    check_unit("lo", lo)?;
    Ok(1.0 - lo.powf((n + 1) as f64))
}

fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfUnitRange { name, value });
    }
    Ok(())
}
