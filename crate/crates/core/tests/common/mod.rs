//! Test-only quadrature oracle for posterior masses.
//!
//! Integrates the posterior kernel `x^k (1-x)^(n-k)` by adaptive Simpson on
//! the exponentiated, max-shifted log-kernel. Deliberately shares nothing
//! with the production continued-fraction path: this is the independent
//! route the accuracy suites compare against.

/// Log of the unnormalized kernel.
fn log_kernel(trials: u64, occurrences: u64, x: f64) -> f64 {
    let failures = trials - occurrences;
    let mut v = 0.0;
    if occurrences > 0 {
        v += occurrences as f64 * x.ln();
    }
    if failures > 0 {
        v += failures as f64 * (1.0 - x).ln();
    }
    v
}

/// Posterior mass of `[lo, hi]` by quadrature of both the restricted and the
/// normalizing integral with a shared max-shift.
pub fn quad_confidence(trials: u64, occurrences: u64, lo: f64, hi: f64) -> f64 {
    // Shift by the kernel maximum over [0, 1] (at the mode) so the
    // integrand lives in [0, 1].
    let mode = if trials == 0 {
        0.5
    } else {
        occurrences as f64 / trials as f64
    };
    let shift = log_kernel(trials, occurrences, mode);
    let f = |x: f64| (log_kernel(trials, occurrences, x) - shift).exp();

    let numerator = adaptive_simpson(&f, lo, hi, 1e-13);
    let denominator = adaptive_simpson(&f, 0.0, 1.0, 1e-13);
    numerator / denominator
}

/// Posterior CDF by quadrature.
pub fn quad_cdf(trials: u64, occurrences: u64, x: f64) -> f64 {
    quad_confidence(trials, occurrences, 0.0, x)
}

/// Recursion budget; subintervals reach width `(b-a) * 2^-52` in the worst
/// case, the last point at which midpoints remain distinct.
const MAX_DEPTH: u32 = 52;

/// Mandatory subdivisions before the error estimate may terminate a branch.
/// Simpson's `left + right - whole` estimate can coincidentally vanish on an
/// unresolved peak; forcing 2^10 panels first means only features narrower
/// than ~0.001 of the range could slip through, far below any posterior
/// kernel this suite integrates.
const MIN_DEPTH: u32 = 10;

fn simpson_rule(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

/// Adaptive Simpson with Richardson extrapolation and a minimum-depth
/// safeguard against spuriously small error estimates.
fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a >= b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson_rule(fa, fm, fb, b - a);
    recurse(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH, MIN_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    min_depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_rule(fa, flm, fm, m - a);
    let right = simpson_rule(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if depth == 0 || (min_depth == 0 && delta.abs() <= 15.0 * tol) {
        left + right + delta / 15.0
    } else {
        let child_min = min_depth.saturating_sub(1);
        recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, child_min)
            + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, child_min)
    }
}
