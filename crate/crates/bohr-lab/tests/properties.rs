//! Randomized invariants: kernel identities, bound ordering, profile
//! round-trips, solver guarantees, and certificate honesty.

use bohr_lab::functionals::{self, FunctionalKind, Variant};
use bohr_lab::kernel::{self, GeometricTail, TruncationBudget};
use bohr_lab::model::{self, AlphaParam, CoefficientProfile};
use bohr_lab::solver::{self, SolverConfig};
use proptest::prelude::*;

fn alpha_strategy() -> impl Strategy<Value = AlphaParam> {
    (0.0f64..0.95).prop_map(|a| AlphaParam::new(a).unwrap())
}

proptest! {
    // Kernel-level identities are cheap; keep the default case count.

    #[test]
    fn log_tail_peels_one_term(r in 0.0f64..0.95, n in 1u32..40) {
        let whole = kernel::log_tail(n, r).unwrap();
        let peeled = kernel::log_tail(n + 1, r).unwrap();
        let term = r.powi(n as i32) / n as f64;
        prop_assert!((whole - peeled - term).abs() <= 1e-12 * (1.0 + whole.abs()));
    }

    #[test]
    fn log_tail_from_one_is_minus_log1m(r in 0.0f64..0.95) {
        let tail = kernel::log_tail(1, r).unwrap();
        let direct = -(-r).ln_1p();
        prop_assert!((tail - direct).abs() <= 1e-12 * (1.0 + direct.abs()));
    }

    #[test]
    fn alternating_tail_matches_log1p(r in 0.0f64..=1.0) {
        let tail = kernel::alt_log_tail(r).unwrap();
        prop_assert!((tail - (r.ln_1p() - r)).abs() <= 1e-12);
    }

    #[test]
    fn dilog_reflection_holds(r in 0.01f64..0.99) {
        let pi2_6 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
        let lhs = kernel::dilog(r).unwrap() + kernel::dilog(1.0 - r).unwrap()
            + r.ln() * (-r).ln_1p();
        prop_assert!((lhs - pi2_6).abs() <= 1e-10);
    }

    #[test]
    fn dilog_is_increasing(r1 in 0.0f64..0.99, dr in 1e-6f64..0.5) {
        let r2 = (r1 + dr).min(0.999);
        let d1 = kernel::dilog(r1).unwrap();
        let d2 = kernel::dilog(r2).unwrap();
        prop_assert!(d2 > d1);
    }

    #[test]
    fn truncated_sum_certificate_is_honest(
        c in 0.01f64..10.0,
        rho in 0.01f64..0.95,
        start in 0u32..5,
    ) {
        // Geometric series with an exactly matching certificate.
        let tail = GeometricTail::new(c, rho).unwrap();
        let budget = TruncationBudget::new(1e-10, 4000).unwrap();
        let result = kernel::truncated_sum(start, |k| c * rho.powi(k as i32), tail, budget)
            .unwrap();
        let truth = c * rho.powi(start as i32) / (1.0 - rho);
        prop_assert!(
            (result.value - truth).abs() <= result.tail_bound + 1e-12,
            "value {} truth {truth} tail {}",
            result.value,
            result.tail_bound
        );
        prop_assert!(result.tail_bound <= 1e-10 + 1e-15);
    }

    #[test]
    fn minorant_stays_below_majorant(r in 0.001f64..0.999, alpha in alpha_strategy()) {
        let lower = model::minorant(r, alpha).unwrap();
        let upper = model::majorant(r, alpha).unwrap();
        prop_assert!(lower < upper, "minorant {lower} vs majorant {upper}");
    }

    #[test]
    fn envelope_bounds_increase_with_radius(
        r1 in 0.001f64..0.99,
        dr in 1e-5f64..0.5,
        alpha in alpha_strategy(),
    ) {
        let r2 = (r1 + dr).min(0.9995);
        prop_assert!(model::majorant(r2, alpha).unwrap() > model::majorant(r1, alpha).unwrap());
        prop_assert!(model::minorant(r2, alpha).unwrap() > model::minorant(r1, alpha).unwrap());
    }

    #[test]
    fn distance_bound_increases_with_alpha(a1 in 0.0f64..0.9, da in 1e-4f64..0.1) {
        let alpha1 = AlphaParam::new(a1).unwrap();
        let alpha2 = AlphaParam::new((a1 + da).min(0.9999)).unwrap();
        prop_assert!(model::distance_bound(alpha2) > model::distance_bound(alpha1));
    }

    #[test]
    fn default_coefficients_respect_the_class_bound(
        n in 2u32..200,
        alpha in alpha_strategy(),
    ) {
        let profile = CoefficientProfile::extremal(alpha);
        let bound = model::coeff_bound(n, alpha).unwrap();
        prop_assert!(profile.sum_bound(n).unwrap() <= bound + 1e-12);
        prop_assert!(profile.analytic_bound(n).unwrap() <= profile.sum_bound(n).unwrap());
    }

    #[test]
    fn profile_text_round_trips(
        alpha in alpha_strategy(),
        raw in proptest::collection::btree_map(2u32..60, (0.0f64..=1.0, 0.0f64..=1.0), 0..6),
    ) {
        let entries: Vec<(u32, f64, f64)> = raw
            .into_iter()
            .map(|(n, (s, a))| {
                let bound = model::coeff_bound(n, alpha).unwrap();
                let sum = s * bound;
                (n, sum, a * sum)
            })
            .collect();
        let profile = CoefficientProfile::from_entries(alpha, &entries).unwrap();
        let parsed = CoefficientProfile::parse(&profile.to_text()).unwrap();
        prop_assert_eq!(parsed, profile);
    }
}

proptest! {
    // Solver-backed properties cost a root-find per case; use fewer cases.
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solver_finds_known_linear_root(t in 0.002f64..0.99) {
        let config = SolverConfig::default();
        let result = solver::smallest_root(|r| r - t, config).unwrap();
        prop_assert!((result.root - t).abs() <= 1e-11);
        prop_assert!(result.iterations <= 32);
        let (lo, hi) = result.bracket;
        prop_assert!(lo <= result.root && result.root <= hi);
        prop_assert!(hi - lo <= 1e-12 * 1.0001);
        prop_assert!(lo - t < 0.0 && hi - t >= 0.0, "bracket signs straddle the root");
    }

    #[test]
    fn solver_is_bit_for_bit_deterministic(t in 0.002f64..0.99) {
        let config = SolverConfig::default();
        let a = solver::smallest_root(|r| (r - t) * (r + 1.5), config).unwrap();
        let b = solver::smallest_root(|r| (r - t) * (r + 1.5), config).unwrap();
        prop_assert_eq!(a.root.to_bits(), b.root.to_bits());
        prop_assert_eq!(a.bracket.0.to_bits(), b.bracket.0.to_bits());
        prop_assert_eq!(a.bracket.1.to_bits(), b.bracket.1.to_bits());
        prop_assert_eq!(a.iterations, b.iterations);
    }

    #[test]
    fn radius_grows_with_alpha(
        a1 in 0.0f64..0.85,
        da in 0.01f64..0.1,
        kind_idx in 0usize..3,
    ) {
        let kind = [
            FunctionalKind::Rogosinski { n: 2 },
            FunctionalKind::AreaLinear,
            FunctionalKind::Jacobian { n: 2 },
        ][kind_idx];
        let config = SolverConfig::default();
        let root_at = |a: f64| {
            let alpha = AlphaParam::new(a).unwrap();
            let eq = functionals::radius_equation(kind, Variant::Proof, alpha).unwrap();
            solver::solve_radius(&eq, config).unwrap().root
        };
        let lo = root_at(a1);
        let hi = root_at((a1 + da).min(0.9499));
        prop_assert!(hi > lo, "root at larger alpha must be larger: {lo} vs {hi}");
        prop_assert!(lo > 0.0 && hi < 1.0);
    }

    #[test]
    fn closed_form_sits_inside_series_certificate(
        alpha in alpha_strategy(),
        r in 0.01f64..0.9,
        kind_idx in 0usize..4,
    ) {
        let kind = [
            FunctionalKind::Rogosinski { n: 3 },
            FunctionalKind::RogosinskiSquared { n: 4 },
            FunctionalKind::RefinedWeighted { n: 2 },
            FunctionalKind::Jacobian { n: 3 },
        ][kind_idx];
        let profile = CoefficientProfile::extremal(alpha);
        let budget = TruncationBudget::new(1e-11, 4000).unwrap();
        let closed = functionals::lhs_closed(kind, Variant::Proof, &profile, r).unwrap();
        let series = functionals::lhs_series(kind, Variant::Proof, &profile, r, budget).unwrap();
        prop_assert!((closed - series.value).abs() <= series.tail_bound + 1e-10);
    }
}
