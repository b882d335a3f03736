//! Deterministic smallest-root search for radius equations.
//!
//! Every radius in this crate is the first zero of a residual `G` that is
//! strictly negative immediately right of 0 and eventually positive before 1.
//! The solver walks a fixed scan grid to the first sign change and bisects
//! the bracket; no floating-point state leaks between calls, so results are
//! bit-for-bit reproducible.

use crate::error::Error;
use crate::functionals::RadiusEquation;
use crate::kernel::R_MAX;
use crate::Result;

/// Scan and bisection parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    scan_step: f64,
    root_tol: f64,
}

impl SolverConfig {
    /// `scan_step` in `(0, 0.5]`, `root_tol` in `[1e-15, scan_step)`.
    pub fn new(scan_step: f64, root_tol: f64) -> Result<Self> {
        if !scan_step.is_finite() || !(0.0..=0.5).contains(&scan_step) || scan_step == 0.0 {
            return Err(Error::Domain(format!(
                "scan step must lie in (0, 0.5], got {scan_step}"
            )));
        }
        if !root_tol.is_finite() || !(1e-15..scan_step).contains(&root_tol) {
            return Err(Error::Domain(format!(
                "root tolerance must lie in [1e-15, scan_step), got {root_tol}"
            )));
        }
        Ok(Self { scan_step, root_tol })
    }

    pub fn scan_step(&self) -> f64 {
        self.scan_step
    }

    pub fn root_tol(&self) -> f64 {
        self.root_tol
    }
}

impl Default for SolverConfig {
    /// Scan step `1e-3`, bracket width `1e-12`.
    fn default() -> Self {
        Self { scan_step: 1e-3, root_tol: 1e-12 }
    }
}

/// A located smallest root with its final bracket and diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    /// Midpoint of the final bracket.
    pub root: f64,
    /// Final bracket `(lo, hi)` with `lo < root < hi`, `G(lo) < 0 <= G(hi)`,
    /// and `hi - lo <= root_tol`.
    pub bracket: (f64, f64),
    /// Bisection iterations performed (the scan is not counted). At most
    /// `ceil(log2(scan_step / root_tol)) + 2`.
    pub iterations: u32,
    /// Residual at the reported root.
    pub residual: f64,
}

/// Finds the smallest root of `g` on `(0, 1)`.
///
/// Probes `scan_step, 2 scan_step, ...` and finally `1 - 1e-9`; the first
/// probe with `g >= 0` closes the bracket. Fails with
/// [`Error::NonNegativeStart`] when `g(scan_step) >= 0` (the residual does
/// not start below zero, so no admissible smallest root exists) and with
/// [`Error::NoSignChange`] when `g` stays negative through `1 - 1e-9`.
pub fn smallest_root<F>(g: F, config: SolverConfig) -> Result<RootResult>
where
    F: Fn(f64) -> f64,
{
    let probe = |r: f64| -> Result<f64> {
        let v = g(r);
        if !v.is_finite() {
            return Err(Error::Domain(format!("residual is not finite at r = {r}: {v}")));
        }
        Ok(v)
    };

    let mut lo = config.scan_step;
    let first = probe(lo)?;
    if first >= 0.0 {
        return Err(Error::NonNegativeStart { value: first });
    }

    // Scan to the first non-negative probe.
    let mut hi = None;
    let mut k = 2_u64;
    loop {
        let r = (k as f64 * config.scan_step).min(R_MAX);
        let v = probe(r)?;
        if v >= 0.0 {
            hi = Some(r);
            break;
        }
        lo = r;
        if r >= R_MAX {
            break;
        }
        k += 1;
    }
    let Some(mut hi) = hi else {
        return Err(Error::NoSignChange);
    };

    // Bisect; the width halves every pass, so termination is unconditional.
    let mut iterations = 0_u32;
    while hi - lo > config.root_tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket no longer splittable in f64
        }
        if probe(mid)? >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }

    let root = 0.5 * (lo + hi);
    Ok(RootResult { root, bracket: (lo, hi), iterations, residual: g(root) })
}

/// Convenience wrapper: solve a radius equation's residual.
pub fn solve_radius(eq: &RadiusEquation, config: SolverConfig) -> Result<RootResult> {
    smallest_root(|r| eq.residual(r), config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functionals::{radius_equation, FunctionalKind, Variant};
    use crate::model::AlphaParam;
    use approx::assert_abs_diff_eq;

    #[test]
    fn config_validation() {
        assert!(SolverConfig::new(1e-3, 1e-12).is_ok());
        assert!(SolverConfig::new(0.0, 1e-12).is_err());
        assert!(SolverConfig::new(0.6, 1e-12).is_err());
        assert!(SolverConfig::new(1e-3, 1e-16).is_err());
        assert!(SolverConfig::new(1e-3, 1e-3).is_err());
        let d = SolverConfig::default();
        assert_eq!(d.scan_step(), 1e-3);
        assert_eq!(d.root_tol(), 1e-12);
    }

    #[test]
    fn linear_root_to_tolerance() {
        let got = smallest_root(|r| r - 1.0 / 3.0, SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(got.root, 1.0 / 3.0, epsilon = 1e-12);
        assert!(got.bracket.0 < got.root && got.root < got.bracket.1);
        assert!(got.bracket.1 - got.bracket.0 <= 1e-12);
        assert!(got.residual.abs() <= 1e-10);
    }

    #[test]
    fn picks_first_of_two_roots() {
        // Downward parabola crossing at 0.2 and 0.7: negative start, first
        // sign change at 0.2.
        let got =
            smallest_root(|r| -(r - 0.2) * (r - 0.7), SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(got.root, 0.2, epsilon = 1e-12);
    }

    #[test]
    fn upward_parabola_starts_non_negative() {
        // (r - 0.2)(r - 0.7) is positive at the first probe, so there is no
        // admissible smallest root to report.
        let err = smallest_root(|r| (r - 0.2) * (r - 0.7), SolverConfig::default()).unwrap_err();
        match err {
            Error::NonNegativeStart { value } => assert!(value > 0.0),
            other => panic!("expected NonNegativeStart, got {other:?}"),
        }
    }

    #[test]
    fn always_negative_reports_no_sign_change() {
        let err = smallest_root(|r| -1.0 - r, SolverConfig::default()).unwrap_err();
        assert!(matches!(err, Error::NoSignChange));
    }

    #[test]
    fn snaps_final_probe_below_one() {
        // Root within 2e-7 of 1: the scan must clamp its last probe to
        // 1 - 1e-9 instead of stepping past 1.
        let got = smallest_root(|r| r - 0.9999998, SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(got.root, 0.9999998, epsilon = 1e-12);
        assert!(got.bracket.1 <= crate::kernel::R_MAX);
    }

    #[test]
    fn iteration_bound_holds() {
        let cap = ((1e-3_f64 / 1e-12).log2().ceil() as u32) + 2;
        assert_eq!(cap, 32);
        for a in [0.0, 0.3, 0.6, 0.9] {
            let eq = radius_equation(
                FunctionalKind::Rogosinski { n: 2 },
                Variant::Proof,
                AlphaParam::new(a).unwrap(),
            )
            .unwrap();
            let got = solve_radius(&eq, SolverConfig::default()).unwrap();
            assert!(got.iterations <= cap, "alpha={a}: {} iterations", got.iterations);
            assert!(got.bracket.1 - got.bracket.0 <= 1e-12);
        }
    }

    #[test]
    fn radius_equation_bracket_signs() {
        let eq = radius_equation(
            FunctionalKind::Jacobian { n: 2 },
            Variant::Proof,
            AlphaParam::new(0.4).unwrap(),
        )
        .unwrap();
        let got = solve_radius(&eq, SolverConfig::default()).unwrap();
        assert!(eq.residual(got.bracket.0) < 0.0);
        assert!(eq.residual(got.bracket.1) >= 0.0);
        assert!(got.residual.abs() <= 1e-10);
    }

    #[test]
    fn bit_for_bit_determinism() {
        let eq = radius_equation(
            FunctionalKind::SquaredCoefficients,
            Variant::Proof,
            AlphaParam::new(0.5).unwrap(),
        )
        .unwrap();
        let a = solve_radius(&eq, SolverConfig::default()).unwrap();
        let b = solve_radius(&eq, SolverConfig::default()).unwrap();
        assert_eq!(a.root.to_bits(), b.root.to_bits());
        assert_eq!(a.bracket, b.bracket);
        assert_eq!(a.iterations, b.iterations);
    }

    #[test]
    fn nan_residual_is_a_domain_error() {
        let err = smallest_root(
            |r| if r > 0.5 { f64::NAN } else { -1.0 },
            SolverConfig::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn coarser_scan_still_finds_same_root() {
        let eq = radius_equation(
            FunctionalKind::Rogosinski { n: 2 },
            Variant::Proof,
            AlphaParam::new(0.1).unwrap(),
        )
        .unwrap();
        let fine = solve_radius(&eq, SolverConfig::default()).unwrap();
        let coarse = solve_radius(&eq, SolverConfig::new(0.05, 1e-12).unwrap()).unwrap();
        assert_abs_diff_eq!(fine.root, coarse.root, epsilon = 2e-12);
    }
}
