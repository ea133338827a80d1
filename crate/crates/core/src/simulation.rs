//! Bernoulli process simulation: law-of-large-numbers trajectories and the
//! demon coin whose bias flips at running-frequency thresholds.
//!
//! The demon starts at `p_initial`; when the running frequency first reaches
//! `upper_threshold` the bias drops to `p_low`, when it falls back to
//! `lower_threshold` the bias rises to `p_high`, and so on. Crossings are
//! checked after every trial (`>=` rising, `<=` falling), so each completed
//! directional run is recorded as one cycle. Driving the frequency across
//! the band costs proportionally more trials each time, so cycle lengths
//! grow geometrically (about x3 per cycle at the default parameters).

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::evidence::{Evidence, ProbInterval};
use crate::posterior::confidence_on_interval;
use crate::rng::rng_from_seed;

/// Full per-trial outcomes are kept only up to this many trials; longer runs
/// retain checkpoints alone.
pub const OUTCOME_STORAGE_CAP: u64 = 10_000_000;

/// Recorded run of a Bernoulli process.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialTrajectory {
    /// Per-trial outcomes; empty when the run exceeds [`OUTCOME_STORAGE_CAP`].
    pub outcomes: Vec<bool>,
    /// `(n, running frequency after n trials)` at every stride-th trial and
    /// at the final trial.
    pub checkpoints: Vec<Checkpoint>,
    pub generator_seed: u64,
    pub process_label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Checkpoint {
    pub n: u64,
    pub ratio: f64,
}

impl TrialTrajectory {
    /// Running frequency at the end of the run.
    pub fn final_ratio(&self) -> f64 {
        self.checkpoints.last().map_or(0.0, |c| c.ratio)
    }

    /// Total number of trials simulated.
    pub fn trials(&self) -> u64 {
        self.checkpoints.last().map_or(0, |c| c.n)
    }
}

/// Regime parameters of the demon coin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DemonConfig {
    pub p_high: f64,
    pub p_low: f64,
    pub upper_threshold: f64,
    pub lower_threshold: f64,
    pub p_initial: f64,
}

impl Default for DemonConfig {
    fn default() -> Self {
        Self {
            p_high: 0.6,
            p_low: 0.4,
            upper_threshold: 0.55,
            lower_threshold: 0.45,
            p_initial: 0.5,
        }
    }
}

impl DemonConfig {
    fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("p_high", self.p_high),
            ("p_low", self.p_low),
            ("upper_threshold", self.upper_threshold),
            ("lower_threshold", self.lower_threshold),
            ("p_initial", self.p_initial),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::OutOfUnitRange { name, value });
            }
        }
        if !(self.p_low < self.lower_threshold
            && self.lower_threshold < self.upper_threshold
            && self.upper_threshold < self.p_high)
        {
            return Err(Error::InvalidDemonConfig(
                "parameters must satisfy p_low < lower_threshold < upper_threshold < p_high",
            ));
        }
        Ok(())
    }
}

/// One completed directional run of the demon's frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CycleRecord {
    pub index: u64,
    /// Trial at which the previous cycle ended (0 for the first).
    pub start_n: u64,
    /// Trial whose outcome first put the running frequency on the threshold.
    pub end_n: u64,
    pub direction: CycleDirection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleDirection {
    /// Ended by reaching the upper threshold.
    Rising,
    /// Ended by falling to the lower threshold.
    Falling,
}

impl std::fmt::Display for CycleDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CycleDirection::Rising => write!(f, "rising"),
            CycleDirection::Falling => write!(f, "falling"),
        }
    }
}

/// Per-cycle length and length ratio to the previous cycle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CycleGrowth {
    pub index: u64,
    pub length: u64,
    /// `length / previous length`; absent for the first record.
    pub growth_ratio: Option<f64>,
}

/// Simulate `n` i.i.d. Bernoulli(p) trials, checkpointing the running
/// frequency every `stride` trials and at the final trial.
pub fn simulate_bernoulli(p: f64, n: u64, seed: u64, stride: u64) -> Result<TrialTrajectory> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfUnitRange { name: "p", value: p });
    }
    check_positive("n", n)?;
    check_positive("stride", stride)?;

    let mut rng = rng_from_seed(seed);
    let store_outcomes = n <= OUTCOME_STORAGE_CAP;
    let mut outcomes = Vec::with_capacity(if store_outcomes { n as usize } else { 0 });
    let mut checkpoints = Vec::new();
    let mut successes = 0u64;

    for trial in 1..=n {
        let hit = rng.random::<f64>() < p;
        successes += hit as u64;
        if store_outcomes {
            outcomes.push(hit);
        }
        if trial % stride == 0 || trial == n {
            checkpoints.push(Checkpoint {
                n: trial,
                ratio: successes as f64 / trial as f64,
            });
        }
    }

    Ok(TrialTrajectory {
        outcomes,
        checkpoints,
        generator_seed: seed,
        process_label: format!("bernoulli(p={p})"),
    })
}

/// Confidence series along a trajectory: at each checkpoint `(n, r)`, the
/// posterior mass of `[r - epsilon, r + epsilon]` (clamped to `[0, 1]`)
/// given the evidence accumulated by trial `n`.
pub fn lln_confidence_trajectory(
    trajectory: &TrialTrajectory,
    epsilon: f64,
) -> Result<Vec<(u64, f64)>> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::OutOfUnitRange {
            name: "epsilon",
            value: epsilon,
        });
    }

    trajectory
        .checkpoints
        .iter()
        .map(|c| {
            let successes = (c.ratio * c.n as f64).round() as u64;
            let evidence = Evidence::new(c.n, successes)?;
            let interval =
                ProbInterval::new((c.ratio - epsilon).max(0.0), (c.ratio + epsilon).min(1.0))?;
            Ok((c.n, confidence_on_interval(evidence, interval).confidence))
        })
        .collect()
}

/// Run the demon coin for `max_trials` trials.
///
/// Returns the trajectory plus every completed cycle. The initial regime is
/// `p_initial`; the first threshold crossing in either direction closes the
/// first cycle and starts the alternation.
pub fn simulate_demon(
    config: DemonConfig,
    max_trials: u64,
    seed: u64,
    stride: u64,
) -> Result<(TrialTrajectory, Vec<CycleRecord>)> {
    config.validate()?;
    check_positive("max_trials", max_trials)?;
    check_positive("stride", stride)?;

    let mut rng = rng_from_seed(seed);
    let store_outcomes = max_trials <= OUTCOME_STORAGE_CAP;
    let mut outcomes = Vec::with_capacity(if store_outcomes { max_trials as usize } else { 0 });
    let mut checkpoints = Vec::new();
    let mut cycles = Vec::new();

    let mut p = config.p_initial;
    let mut successes = 0u64;
    let mut cycle_start = 0u64;
    // Until the first crossing either direction may close a cycle; afterwards
    // only the direction the current regime drives toward.
    let mut expect_rising = true;
    let mut expect_falling = true;

    for trial in 1..=max_trials {
        let hit = rng.random::<f64>() < p;
        successes += hit as u64;
        if store_outcomes {
            outcomes.push(hit);
        }
        let ratio = successes as f64 / trial as f64;
        if trial % stride == 0 || trial == max_trials {
            checkpoints.push(Checkpoint { n: trial, ratio });
        }

        if expect_rising && ratio >= config.upper_threshold {
            cycles.push(CycleRecord {
                index: cycles.len() as u64,
                start_n: cycle_start,
                end_n: trial,
                direction: CycleDirection::Rising,
            });
            cycle_start = trial;
            p = config.p_low;
            expect_rising = false;
            expect_falling = true;
        } else if expect_falling && ratio <= config.lower_threshold {
            cycles.push(CycleRecord {
                index: cycles.len() as u64,
                start_n: cycle_start,
                end_n: trial,
                direction: CycleDirection::Falling,
            });
            cycle_start = trial;
            p = config.p_high;
            expect_falling = false;
            expect_rising = true;
        }
    }

    let trajectory = TrialTrajectory {
        outcomes,
        checkpoints,
        generator_seed: seed,
        process_label: "demon".to_string(),
    };
    Ok((trajectory, cycles))
}

/// Lengths and consecutive length ratios of completed cycles.
pub fn analyze_cycles(cycles: &[CycleRecord]) -> Vec<CycleGrowth> {
    let mut out = Vec::with_capacity(cycles.len());
    let mut prev_len: Option<u64> = None;
    for record in cycles {
        let length = record.end_n - record.start_n;
        let growth_ratio = prev_len.map(|p| length as f64 / p as f64);
        out.push(CycleGrowth {
            index: record.index,
            length,
            growth_ratio,
        });
        prev_len = Some(length);
    }
    out
}

fn check_positive(name: &'static str, value: u64) -> Result<()> {
    if value == 0 {
        return Err(Error::ZeroCount { name });
    }
    Ok(())
}
