//! Maximum-confidence intervals of fixed width and the degree of
//! confirmation.
//!
//! For a given width `d`, the best interval is the width-`d` window carrying
//! maximal posterior mass. The posterior here is Beta with both shapes >= 1,
//! hence unimodal, so the optimal window always covers the mode and the mass
//! is unimodal in the window's left endpoint; golden-section search over the
//! mode-covering range finds it. The degree of confirmation is then
//! `C = max over d of (1 - d) * c*(d)`, located by a coarse grid scan over
//! `d` followed by golden-section refinement of the bracketing cell.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::evidence::{Evidence, ProbInterval};
use crate::posterior::{mode, shape_params};
use crate::special::betainc;

/// Left-endpoint tolerance for the inner window search.
const WINDOW_TOL: f64 = 1e-9;

/// Width tolerance for the outer maximization over `d`.
const WIDTH_TOL: f64 = 1e-9;

/// Number of cells in the coarse scan over widths.
const WIDTH_GRID: usize = 1024;

/// The confirmation summary: the optimal width, the interval attaining it,
/// that interval's confidence, and the resulting degree of confirmation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConfirmationReport {
    pub evidence: Evidence,
    pub best_width: f64,
    pub best_interval: ProbInterval,
    pub best_confidence: f64,
    pub degree: f64,
}

/// The width-`width` interval of maximal posterior mass, and that mass.
///
/// Ties (a flat stretch of equal-mass windows, e.g. under the uniform
/// posterior) resolve to the smallest left endpoint.
pub fn max_confidence_interval(evidence: Evidence, width: f64) -> Result<(ProbInterval, f64)> {
    if !(0.0..=1.0).contains(&width) {
        return Err(Error::OutOfUnitRange {
            name: "width",
            value: width,
        });
    }
    Ok(best_window(evidence, width))
}

fn best_window(evidence: Evidence, width: f64) -> (ProbInterval, f64) {
    if evidence.trials() == 0 {
        // Uniform posterior: every placement carries mass = width; the
        // smallest left endpoint wins the tie.
        let interval = ProbInterval::new(0.0, width).expect("width validated");
        return (interval, width);
    }

    let (a, b) = shape_params(evidence);
    let mass = |left: f64| betainc(a, b, left + width) - betainc(a, b, left);

    // The optimal window covers the mode, so its left endpoint lies in
    // [mode - width, mode] intersected with the feasible range [0, 1-width].
    let m = mode(evidence);
    let left_lo = (m - width).max(0.0);
    let left_hi = m.min(1.0 - width);

    let (mut best_left, mut best_mass) = golden_section_max(&mass, left_lo, left_hi, WINDOW_TOL);
    // Strict improvement only: boundary candidates in ascending order keep
    // the tie-break deterministic.
    for cand in [left_lo, left_hi] {
        let v = mass(cand);
        if v > best_mass || (v == best_mass && cand < best_left) {
            best_left = cand;
            best_mass = v;
        }
    }

    let hi = (best_left + width).min(1.0);
    let interval = ProbInterval::new(best_left, hi).expect("window stays inside [0, 1]");
    (interval, best_mass.clamp(0.0, 1.0))
}

/// Degree of confirmation: `C = max over d in [0,1] of (1-d) * c*(d)` where
/// `c*(d)` is the confidence of the best width-`d` window.
pub fn degree_of_confirmation(evidence: Evidence) -> ConfirmationReport {
    let objective = |d: f64| {
        let (_, c) = best_window(evidence, d);
        (1.0 - d) * c
    };

    // Coarse scan: the objective vanishes at both ends for nondegenerate
    // posteriors and unimodality over d is not guaranteed a priori.
    let mut best_i = 0;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..=WIDTH_GRID {
        let d = i as f64 / WIDTH_GRID as f64;
        let v = objective(d);
        if v > best_v {
            best_i = i;
            best_v = v;
        }
    }

    // Refine inside the cells adjacent to the best grid point.
    let lo = (best_i.saturating_sub(1)) as f64 / WIDTH_GRID as f64;
    let hi = ((best_i + 1).min(WIDTH_GRID)) as f64 / WIDTH_GRID as f64;
    let (refined_d, refined_v) = golden_section_max(&objective, lo, hi, WIDTH_TOL);
    let best_d = if refined_v >= best_v {
        refined_d
    } else {
        best_i as f64 / WIDTH_GRID as f64
    };

    let (best_interval, best_confidence) = best_window(evidence, best_d);
    ConfirmationReport {
        evidence,
        best_width: best_d,
        best_interval,
        best_confidence,
        degree: (1.0 - best_d) * best_confidence,
    }
}

/// Closed-form degree of confirmation for all-success evidence `(n, n)`:
/// `(n+2)^(-1/(n+1)) * (n+1)/(n+2)`.
pub fn all_success_confirmation(n: u64) -> f64 {
    let n = n as f64;
    (n + 2.0).powf(-1.0 / (n + 1.0)) * (n + 1.0) / (n + 2.0)
}

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`.
/// Returns `(argmax, max)`. For flat stretches any point of the plateau may
/// be returned; callers needing a tie-break compare boundary candidates.
fn golden_section_max(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;

    if !(b - a).is_finite() || b - a <= tol {
        let mid = 0.5 * (a + b);
        return (mid, f(mid));
    }

    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    while b - a > tol {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }

    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}
