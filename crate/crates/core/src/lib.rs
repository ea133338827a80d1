//! Estimation and confirmation for Bernoulli evidence under a uniform prior.
//!
//! Given "the event occurred `k` times in `n` trials", this crate computes
//! the Beta-shaped posterior over the event probability, the confidence that
//! the probability lies in a given interval, the maximum-confidence interval
//! of a given width, and the degree of confirmation that trades interval
//! tightness against confidence. Laplace's Rule of Succession is included
//! for comparison, together with a rejection-sampling oracle for it, and the
//! simulation module exhibits both law-of-large-numbers convergence and a
//! threshold-switching "demon" coin whose running frequency never settles.

pub mod confirmation;
pub mod error;
pub mod evidence;
pub mod posterior;
pub mod rng;
pub mod simulation;
pub mod special;
pub mod succession;

pub use error::{Error, Result};
pub use evidence::{Evidence, ProbInterval};
