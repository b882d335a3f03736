//! Series kernel: closed-form logarithmic tails, the dilogarithm on `[0, 1]`,
//! and a certified truncated-summation engine.
//!
//! The engine is the crate's independent oracle: every closed form elsewhere
//! is tested against a truncated sum whose tail is bounded by a caller-supplied
//! geometric certificate, so agreement is a theorem check, not a tautology.

use crate::error::Error;
use crate::Result;

/// Largest radius at which series are evaluated. Beyond this the logarithmic
/// singularity at `r = 1` dominates and nothing numerically useful remains.
pub const R_MAX: f64 = 1.0 - 1e-9;

/// Stopping contract for [`truncated_sum`]: quit as soon as the certified
/// tail bound drops to `tolerance`, fail after `max_terms` terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationBudget {
    tolerance: f64,
    max_terms: u32,
}

impl TruncationBudget {
    /// A budget with positive finite `tolerance` and `max_terms >= 2`.
    pub fn new(tolerance: f64, max_terms: u32) -> Result<Self> {
        if !(tolerance > 0.0) || !tolerance.is_finite() {
            return Err(Error::Domain(format!(
                "truncation tolerance must be positive and finite, got {tolerance}"
            )));
        }
        if max_terms < 2 {
            return Err(Error::Domain(format!(
                "max_terms must be at least 2, got {max_terms}"
            )));
        }
        Ok(Self { tolerance, max_terms })
    }

    /// Default oracle budget: tail below `1e-12` within 4000 terms.
    pub fn default_oracle() -> Self {
        Self { tolerance: 1e-12, max_terms: 4000 }
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn max_terms(&self) -> u32 {
        self.max_terms
    }
}

/// Geometric tail certificate: the caller promises `t_n <= coeff * ratio^n`
/// for every index the engine may visit, so the tail after summing indices
/// below `n` is at most `coeff * ratio^n / (1 - ratio)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricTail {
    coeff: f64,
    ratio: f64,
}

impl GeometricTail {
    /// Certificate with `coeff >= 0` and `0 <= ratio <= 1 - 1e-9`.
    pub fn new(coeff: f64, ratio: f64) -> Result<Self> {
        if !(coeff >= 0.0) || !coeff.is_finite() {
            return Err(Error::Domain(format!(
                "certificate coefficient must be non-negative and finite, got {coeff}"
            )));
        }
        if !(0.0..=R_MAX).contains(&ratio) {
            return Err(Error::Domain(format!(
                "certificate ratio must lie in [0, 1 - 1e-9], got {ratio}"
            )));
        }
        Ok(Self { coeff, ratio })
    }

    /// Upper bound on the tail `sum_{k >= n} t_k`.
    pub fn tail_from(&self, n: u32) -> f64 {
        self.coeff * self.ratio.powi(n as i32) / (1.0 - self.ratio)
    }
}

/// Outcome of a certified summation: the value, how many terms were consumed,
/// and the certified bound on everything left out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: u32,
    pub tail_bound: f64,
}

/// Sums `term(start) + term(start+1) + ...` with Kahan compensation until the
/// certificate's tail bound drops to the budget tolerance.
///
/// Terms must be non-negative (every series in this crate has non-negative
/// terms; signed parts are carried in closed form by the callers). Returns
/// [`Error::BudgetExceeded`] if `max_terms` terms do not bring the certified
/// tail under the tolerance. A certificate with `coeff = 0` certifies an
/// identically-zero tail, so the sum is `0.0` with no terms consumed.
pub fn truncated_sum<F>(
    start: u32,
    term: F,
    tail: GeometricTail,
    budget: TruncationBudget,
) -> Result<SeriesResult>
where
    F: Fn(u32) -> f64,
{
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64; // Kahan compensation
    let mut n = start;
    let mut used = 0_u32;
    loop {
        let bound = tail.tail_from(n);
        if bound <= budget.tolerance() {
            return Ok(SeriesResult { value: sum, terms_used: used, tail_bound: bound });
        }
        if used == budget.max_terms() {
            return Err(Error::BudgetExceeded { terms: used, tail_bound: bound });
        }
        let t = term(n);
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!(
                "series term at n = {n} must be non-negative and finite, got {t}"
            )));
        }
        debug_assert!(
            t <= tail.coeff * tail.ratio.powi(n as i32) * (1.0 + 1e-9) + 1e-300,
            "tail certificate violated at n = {n}: term {t} exceeds {}",
            tail.coeff * tail.ratio.powi(n as i32)
        );
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        n += 1;
        used += 1;
    }
}

/// Logarithmic tail `sum_{n >= start} r^n / n = -ln(1-r) - sum_{n=1}^{start-1} r^n / n`
/// for `start >= 1` and `0 <= r < 1`, evaluated in closed form.
pub fn log_tail(start: u32, r: f64) -> Result<f64> {
    if start < 1 {
        return Err(Error::Domain(format!("log_tail start index must be >= 1, got {start}")));
    }
    check_radius_open(r)?;
    Ok(log_tail_unchecked(start, r))
}

pub(crate) fn log_tail_unchecked(start: u32, r: f64) -> f64 {
    -(-r).ln_1p() - partial_log_sum(r, start - 1)
}

/// `sum_{n=1}^{upto} r^n / n`, with the empty sum for `upto = 0`.
pub(crate) fn partial_log_sum(r: f64, upto: u32) -> f64 {
    let mut s = 0.0;
    let mut p = 1.0;
    for n in 1..=upto {
        p *= r;
        s += p / n as f64;
    }
    s
}

/// Alternating logarithmic tail `sum_{n >= 2} (-1)^(n-1) r^n / n = ln(1+r) - r`
/// for `0 <= r <= 1`. Always non-positive; equals `ln 2 - 1` at `r = 1`.
pub fn alt_log_tail(r: f64) -> Result<f64> {
    check_radius_closed(r)?;
    Ok(r.ln_1p() - r)
}

/// Dilogarithm `Li_2(r) = sum_{n >= 1} r^n / n^2` on `[0, 1]`.
///
/// Direct series for `r <= 1/2`; the Euler reflection
/// `Li_2(r) = pi^2/6 - ln(r) ln(1-r) - Li_2(1-r)` otherwise, with the
/// endpoint `r = 1` special-cased to `pi^2/6` so the `0 * inf` product in the
/// reflection never forms.
pub fn dilog(r: f64) -> Result<f64> {
    check_radius_closed(r)?;
    Ok(dilog_unchecked(r))
}

pub(crate) fn dilog_unchecked(r: f64) -> f64 {
    const PI2_6: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
    if r == 0.0 {
        0.0
    } else if r == 1.0 {
        PI2_6
    } else if r <= 0.5 {
        dilog_series(r)
    } else {
        // ln(r) via ln_1p(r-1) keeps full accuracy as r -> 1.
        PI2_6 - (r - 1.0).ln_1p() * (-r).ln_1p() - dilog_series(1.0 - r)
    }
}

/// Direct series for `Li_2(x)`, `0 < x <= 1/2`; terms fall at least as fast
/// as `2^-n`, so sub-epsilon truncation needs under 60 terms.
fn dilog_series(x: f64) -> f64 {
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    let mut p = 1.0_f64;
    let mut n = 1_u32;
    loop {
        p *= x;
        let t = p / (n as f64 * n as f64);
        if t < 1e-18 * sum.max(1.0) {
            return sum;
        }
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        n += 1;
    }
}

fn check_radius_open(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("radius must lie in [0, 1), got {r}")));
    }
    Ok(())
}

fn check_radius_closed(r: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain(format!("radius must lie in [0, 1], got {r}")));
    }
    Ok(())
}
