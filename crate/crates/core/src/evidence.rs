//! Domain types: Bernoulli evidence and probability intervals.

use serde::Serialize;

use crate::error::{Error, Result};

/// The observation record "the event occurred `occurrences` times in
/// `trials` trials".
///
/// `trials = 0` is legal and means "no observations yet": the posterior over
/// the event probability is then the uniform prior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Evidence {
    trials: u64,
    occurrences: u64,
}

impl Evidence {
    /// Build an evidence record, rejecting `occurrences > trials`.
    pub fn new(trials: u64, occurrences: u64) -> Result<Self> {
        if occurrences > trials {
            return Err(Error::OccurrencesExceedTrials {
                occurrences,
                trials,
            });
        }
        Ok(Self {
            trials,
            occurrences,
        })
    }

    /// Evidence in which every trial succeeded.
    pub fn all_successes(trials: u64) -> Self {
        Self {
            trials,
            occurrences: trials,
        }
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn occurrences(&self) -> u64 {
        self.occurrences
    }

    /// Number of trials in which the event did not occur.
    pub fn failures(&self) -> u64 {
        self.trials - self.occurrences
    }

    /// True when every recorded trial succeeded (including the empty record).
    pub fn is_all_successes(&self) -> bool {
        self.occurrences == self.trials
    }
}

/// A closed sub-interval `[lo, hi]` of `[0, 1]` of candidate probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbInterval {
    lo: f64,
    hi: f64,
}

impl ProbInterval {
    /// Build an interval, rejecting endpoints outside `[0, 1]` (or NaN) and
    /// `lo > hi`.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lo) {
            return Err(Error::OutOfUnitRange {
                name: "lo",
                value: lo,
            });
        }
        if !(0.0..=1.0).contains(&hi) {
            return Err(Error::OutOfUnitRange {
                name: "hi",
                value: hi,
            });
        }
        if lo > hi {
            return Err(Error::IntervalOutOfOrder { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// The whole unit interval `[0, 1]`.
    pub fn full() -> Self {
        Self { lo: 0.0, hi: 1.0 }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// True when `x` lies in the closed interval.
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evidence_rejects_excess_occurrences() {
        assert_eq!(
            Evidence::new(3, 4),
            Err(Error::OccurrencesExceedTrials {
                occurrences: 4,
                trials: 3
            })
        );
    }

    #[test]
    fn evidence_accepts_zero_trials() {
        let e = Evidence::new(0, 0).unwrap();
        assert_eq!(e.trials(), 0);
        assert_eq!(e.failures(), 0);
        assert!(e.is_all_successes());
    }

    #[test]
    fn interval_validates_endpoints() {
        assert!(ProbInterval::new(0.2, 0.1).is_err());
        assert!(ProbInterval::new(-0.1, 0.5).is_err());
        assert!(ProbInterval::new(0.5, 1.1).is_err());
        assert!(ProbInterval::new(f64::NAN, 0.5).is_err());
        assert!(ProbInterval::new(0.3, f64::NAN).is_err());
    }

    #[test]
    fn interval_width_and_containment() {
        let d = ProbInterval::new(0.4, 0.6).unwrap();
        assert!((d.width() - 0.2).abs() < 1e-15);
        assert!(d.contains(0.4) && d.contains(0.6) && d.contains(0.5));
        assert!(!d.contains(0.39) && !d.contains(0.61));
        assert_eq!(ProbInterval::full().width(), 1.0);
    }
}
