//! The eleven Bohr-type coefficient functionals.
//!
//! Each functional has a left-hand side `L(r)` built from coefficient data;
//! its sharp radius is the smallest root of `L(r) = d(alpha)`. The module
//! exposes three views of every functional:
//!
//! * [`lhs_closed`] — the closed form, exact on the extremal profile (the
//!   refined kinds also accept a profile whose only deviation is the second
//!   coefficient, which enters their closed forms as a free parameter);
//! * [`lhs_series`] — the defining series, summed with certified tails, valid
//!   for any admissible coefficient profile;
//! * [`radius_equation`] — the residual `G(r) = L(r) - d(alpha)` along the
//!   extremal profile, the thing the solver drives to zero.
//!
//! Several published displays disagree with their own derivations; those
//! readings are kept, verbatim, behind [`Variant`]: `Proof` is the reading
//! the derivation supports (and the default), `Statement` the reading as
//! displayed, and `Special` the drop-the-linear-term reading that one family
//! of tabulated values actually follows. Where statement and proof coincide
//! the two variants evaluate identically.

use crate::error::Error;
use crate::kernel::{self, GeometricTail, SeriesResult, TruncationBudget};
use crate::model::{self, AlphaParam, CoefficientProfile};
use crate::Result;

const LN_2: f64 = std::f64::consts::LN_2;

/// Which reading of a functional to evaluate. See the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The displayed inequality, exactly as printed.
    Statement,
    /// The inequality the derivation actually establishes (default).
    Proof,
    /// Drop-the-linear-term reading; only the powered-argument functional
    /// has a tabulated column family that follows it.
    Special,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Statement => "statement",
            Variant::Proof => "proof",
            Variant::Special => "special",
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The eleven functional families. Parameters follow the conventions of the
/// underlying sums: `n` is a truncation index (first index kept in the tail),
/// `m` a power applied to the argument or the coefficients, `p` an exponent
/// on the analytic part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionalKind {
    /// `|f(r)| + sum_{k>=n} c_k r^k`.
    Rogosinski { n: u32 },
    /// `|f(r)|^2 + sum_{k>=n} a_k r^k`.
    RogosinskiSquared { n: u32 },
    /// `|f(r^m)| + sum_{k>=n} a_k r^k`.
    PoweredArgument { m: u32, n: u32 },
    /// `|h(r)|^p + |f(r)|`.
    AnalyticPower { p: u32 },
    /// `|f(r)| + sum_{j=1}^{n} S(r)^j` with `S` the normalized area bound.
    AreaPolynomial { n: u32 },
    /// `|f(r)| + S(r)` merged coefficient-wise at first order.
    AreaLinear,
    /// `|f(r)| + sum_{k>=2} c_k^2 r^k`.
    SquaredCoefficients,
    /// `|f(r)| + T_f(r) / (1 - r^n)` with `T_f` the second-and-higher part
    /// of the coefficient area sum.
    RefinedWeighted { n: u32 },
    /// `|f(r)| + Q(c_2, r^m) * sum_{k>=3} k^(m-1) c_k^m r^(mk)`.
    RefinedQ { m: u32 },
    /// `|f(r)|` corrected by the exact second-coefficient ratio term.
    RefinedR,
    /// `|f(r)| + |h'(r)| r + sum_{k>=n} c_k r^k`.
    Jacobian { n: u32 },
}

impl FunctionalKind {
    /// Kebab-case family name, shared with the command-line interface.
    pub fn name(&self) -> &'static str {
        match self {
            FunctionalKind::Rogosinski { .. } => "rogosinski",
            FunctionalKind::RogosinskiSquared { .. } => "rogosinski-squared",
            FunctionalKind::PoweredArgument { .. } => "powered-argument",
            FunctionalKind::AnalyticPower { .. } => "analytic-power",
            FunctionalKind::AreaPolynomial { .. } => "area-polynomial",
            FunctionalKind::AreaLinear => "area-linear",
            FunctionalKind::SquaredCoefficients => "squared-coefficients",
            FunctionalKind::RefinedWeighted { .. } => "refined-weighted",
            FunctionalKind::RefinedQ { .. } => "refined-q",
            FunctionalKind::RefinedR => "refined-r",
            FunctionalKind::Jacobian { .. } => "jacobian",
        }
    }

    /// Family name with parameters, e.g. `powered-argument(m=2, n=3)`.
    pub fn label(&self) -> String {
        match *self {
            FunctionalKind::Rogosinski { n } => format!("rogosinski(n={n})"),
            FunctionalKind::RogosinskiSquared { n } => format!("rogosinski-squared(n={n})"),
            FunctionalKind::PoweredArgument { m, n } => {
                format!("powered-argument(m={m}, n={n})")
            }
            FunctionalKind::AnalyticPower { p } => format!("analytic-power(p={p})"),
            FunctionalKind::AreaPolynomial { n } => format!("area-polynomial(n={n})"),
            FunctionalKind::AreaLinear => "area-linear".into(),
            FunctionalKind::SquaredCoefficients => "squared-coefficients".into(),
            FunctionalKind::RefinedWeighted { n } => format!("refined-weighted(n={n})"),
            FunctionalKind::RefinedQ { m } => format!("refined-q(m={m})"),
            FunctionalKind::RefinedR => "refined-r".into(),
            FunctionalKind::Jacobian { n } => format!("jacobian(n={n})"),
        }
    }

    /// Parameter validation: truncation indices start at 2 (the area
    /// polynomial admits degree 1), powers and exponents start at 1.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Unsupported(msg));
        match *self {
            FunctionalKind::Rogosinski { n }
            | FunctionalKind::RogosinskiSquared { n }
            | FunctionalKind::RefinedWeighted { n }
            | FunctionalKind::Jacobian { n } => {
                if n < 2 {
                    return fail(format!("{} needs n >= 2, got {n}", self.name()));
                }
            }
            FunctionalKind::PoweredArgument { m, n } => {
                if m < 1 {
                    return fail(format!("powered-argument needs m >= 1, got {m}"));
                }
                if n < 2 {
                    return fail(format!("powered-argument needs n >= 2, got {n}"));
                }
            }
            FunctionalKind::AnalyticPower { p } => {
                if p < 1 {
                    return fail(format!("analytic-power needs p >= 1, got {p}"));
                }
            }
            FunctionalKind::AreaPolynomial { n } => {
                if n < 1 {
                    return fail(format!("area-polynomial needs n >= 1, got {n}"));
                }
            }
            FunctionalKind::RefinedQ { m } => {
                if m < 1 {
                    return fail(format!("refined-q needs m >= 1, got {m}"));
                }
            }
            FunctionalKind::AreaLinear
            | FunctionalKind::SquaredCoefficients
            | FunctionalKind::RefinedR => {}
        }
        Ok(())
    }

    /// Whether the requested reading exists for this family.
    pub fn supports(&self, variant: Variant) -> bool {
        match variant {
            Variant::Special => matches!(self, FunctionalKind::PoweredArgument { .. }),
            _ => true,
        }
    }

    fn check_variant(&self, variant: Variant) -> Result<()> {
        if self.supports(variant) {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "variant {variant} exists only for powered-argument, not {}",
                self.name()
            )))
        }
    }
}

/// Normalized area bound along the extremal image of the sub-disk of radius
/// `r`: `S(r) = r^2 - 4(1-alpha)^2 (r^2 + ln(1-r^2))` for `0 <= r < 1`.
pub fn area_bound(r: f64, alpha: AlphaParam) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("area bound radius must lie in [0, 1), got {r}")));
    }
    Ok(area_core(r, alpha))
}

fn area_core(r: f64, alpha: AlphaParam) -> f64 {
    let k2 = alpha.k2();
    let r2 = r * r;
    r2 - k2 * k2 * (r2 + (-r2).ln_1p())
}

/// `w + w^2 + ... + w^deg` by Horner's rule; the empty sum for `deg = 0`.
fn poly_sum(w: f64, deg: u32) -> f64 {
    let mut acc = 0.0;
    for _ in 0..deg {
        acc = w * (1.0 + acc);
    }
    acc
}

/// `1 + 2w + ... + deg * w^(deg-1)`, the derivative of [`poly_sum`] in `w`.
fn poly_sum_derivative(w: f64, deg: u32) -> f64 {
    let mut acc = 0.0;
    for j in (1..=deg).rev() {
        acc = acc * w + j as f64;
    }
    acc
}

/// Residual of the radius equation on the extremal profile, with the second
/// coefficient `b2` exposed because the refined families take it as input.
/// Infallible: callers guarantee `0 <= r < 1` and a validated kind/variant.
fn g_core(kind: FunctionalKind, variant: Variant, alpha: AlphaParam, b2: f64, r: f64) -> f64 {
    let a = alpha.value();
    let k2 = alpha.k2();
    let l = (-r).ln_1p(); // ln(1 - r)
    let d_tail = LN_2 - 1.0; // d(alpha) = 1 + k2 * d_tail
    match kind {
        FunctionalKind::Rogosinski { n } => {
            let s = kernel::partial_log_sum(r, n - 1);
            r - 1.0 - k2 * (r - 1.0 + LN_2 + 2.0 * l + s)
        }
        FunctionalKind::RogosinskiSquared { n } => {
            let m = model::majorant_unchecked(r, alpha);
            // The printed display keeps the tail sum anchored one index too
            // early, which adds a spurious linear term; the derivation does
            // not. Both readings are kept.
            let s = match variant {
                Variant::Statement => kernel::partial_log_sum(r, n - 1) - r,
                _ => kernel::partial_log_sum(r, n - 1),
            };
            m * m - 1.0 - k2 * (LN_2 + l - 1.0 + s)
        }
        FunctionalKind::PoweredArgument { m, n } => {
            let rm = r.powi(m as i32);
            let lm = (-rm).ln_1p();
            // `Special` drops the linear term of the truncation sum; the
            // tabulated n = 2 family follows that reading.
            let s = match variant {
                Variant::Special => kernel::partial_log_sum(r, n - 1) - r,
                _ => kernel::partial_log_sum(r, n - 1),
            };
            rm - 1.0 - k2 * (rm - 1.0 + LN_2 + l + lm + s)
        }
        FunctionalKind::AnalyticPower { p } => match variant {
            // Displayed: both occurrences of the analytic part majorized.
            Variant::Statement => {
                let m = model::majorant_unchecked(r, alpha);
                m.powi(p as i32) + m - (1.0 + k2 * d_tail)
            }
            // Derived: the power term keeps the bare monomial r^p.
            _ => r.powi(p as i32) + r - 1.0 - k2 * (r - 1.0 + LN_2 + l),
        },
        FunctionalKind::AreaPolynomial { n } => {
            let w = area_core(r, alpha);
            r - 1.0 - k2 * (r - 1.0 + LN_2 + l) + poly_sum(w, n)
        }
        FunctionalKind::AreaLinear => {
            // First-order merge of majorant and area sum: the combined
            // coefficient 2(1-alpha)(3-2alpha) = 2(1-alpha) + 4(1-alpha)^2.
            r * r + r - 1.0 - k2 * (3.0 - 2.0 * a) * (r + l) - k2 * d_tail
        }
        FunctionalKind::SquaredCoefficients => {
            // Statement coefficient 4(1-a^2) vs derived 4(1-a)^2.
            let c = match variant {
                Variant::Statement => 4.0 * (1.0 - a * a),
                _ => k2 * k2,
            };
            r - 1.0 - k2 * (r - 1.0 + LN_2 + l) + c * (kernel::dilog_unchecked(r) - r)
        }
        FunctionalKind::RefinedWeighted { n } => {
            let rn = r.powi(n as i32);
            let r2 = r * r;
            r - 1.0 - k2 * (r - 1.0 + LN_2 + l + k2 / (1.0 - rn) * (r2 + (-r2).ln_1p()))
        }
        FunctionalKind::RefinedQ { m } => {
            let rm = r.powi(m as i32);
            let q = 1.0 / (1.0 + b2) + rm / (1.0 - rm);
            let km = k2.powi(m as i32);
            r - 1.0 - k2 * (r - 1.0 + LN_2 + l)
                - km * q * (rm + rm * rm / 2.0 + (-rm).ln_1p())
        }
        FunctionalKind::RefinedR => match variant {
            // The printed display lost the constant term, leaving a residual
            // that is already positive at 0+; kept verbatim so the
            // degeneracy is observable.
            Variant::Statement => {
                r - (1.0 - b2 * b2) * r / (1.0 - b2 * r)
                    - k2 * (r + r * r / 2.0 - 1.0 + LN_2 + l)
            }
            _ => {
                let ratio = (b2 * b2 - b2) * r / (1.0 - b2 * r);
                r + ratio - 1.0 - k2 * (r + r * r / 2.0 - 1.0 + LN_2 + l)
            }
        },
        FunctionalKind::Jacobian { n } => {
            let s2 = kernel::partial_log_sum(r, n - 1) - r; // sum_{k=2}^{n-1}
            let j = model::jacobian_sqrt_unchecked(r, alpha);
            r - 1.0 - k2 * (2.0 * r - 1.0 + s2 + LN_2 + 2.0 * l) + j * r
        }
    }
}

fn check_closed_inputs(
    kind: FunctionalKind,
    variant: Variant,
    profile: &CoefficientProfile,
    r: f64,
) -> Result<()> {
    kind.validate()?;
    kind.check_variant(variant)?;
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("radius must lie in [0, 1), got {r}")));
    }
    let closed_ok = match kind {
        // Refined families take the second coefficient as an input, so a
        // profile that deviates only there still has an exact closed form.
        FunctionalKind::RefinedQ { .. } | FunctionalKind::RefinedR => {
            profile.is_extremal_beyond_second()
        }
        _ => profile.is_extremal(),
    };
    if !closed_ok {
        return Err(Error::NonExtremalProfile);
    }
    Ok(())
}

/// Closed-form left-hand side `L(r)` of the functional. Exact on the
/// extremal profile; refuses profiles the closed form cannot represent.
pub fn lhs_closed(
    kind: FunctionalKind,
    variant: Variant,
    profile: &CoefficientProfile,
    r: f64,
) -> Result<f64> {
    check_closed_inputs(kind, variant, profile, r)?;
    let alpha = profile.alpha();
    Ok(distance(alpha) + g_core(kind, variant, alpha, profile.second_coeff(), r))
}

fn distance(alpha: AlphaParam) -> f64 {
    model::distance_bound(alpha)
}

// ---- series evaluation ------------------------------------------------

fn check_series_radius(r: f64) -> Result<()> {
    if !(0.0..=kernel::R_MAX).contains(&r) {
        return Err(Error::Domain(format!(
            "series radius must lie in [0, 1 - 1e-9], got {r}"
        )));
    }
    Ok(())
}

/// Split a budget across `parts` independent sub-series, leaving headroom
/// for propagation through squares and polynomial composition.
fn sub_budget(budget: TruncationBudget, parts: u32) -> TruncationBudget {
    TruncationBudget::new(budget.tolerance() / (4.0 * parts as f64), budget.max_terms())
        .expect("scaled budget stays valid")
}

#[derive(Clone, Copy)]
enum Channel {
    /// Combined bound `c_k >= |a_k| + |b_k|`.
    Sum,
    /// Analytic-part bound `a_k >= |a_k|`.
    Analytic,
}

fn chan(profile: &CoefficientProfile, channel: Channel, k: u32) -> f64 {
    match channel {
        Channel::Sum => profile.c(k),
        Channel::Analytic => profile.a(k),
    }
}

/// `sum_{k>=from} chan_k r^k`; every channel value is at most `2(1-alpha)/k`.
fn coeff_tail(
    profile: &CoefficientProfile,
    channel: Channel,
    from: u32,
    r: f64,
    budget: TruncationBudget,
) -> Result<SeriesResult> {
    let cert = GeometricTail::new(profile.alpha().k2() / from as f64, r)?;
    kernel::truncated_sum(from, |k| chan(profile, channel, k) * r.powi(k as i32), cert, budget)
}

/// `r + sum_{k>=2} c_k r^k` — the profile's modulus majorant.
fn majorant_series(
    profile: &CoefficientProfile,
    r: f64,
    budget: TruncationBudget,
) -> Result<SeriesResult> {
    let tail = coeff_tail(profile, Channel::Sum, 2, r, budget)?;
    Ok(SeriesResult { value: r + tail.value, ..tail })
}

/// `sum_{k>=2} k c_k^2 r^(2k)` — the coefficient area sum minus its leading
/// `r^2` term.
fn area_tail_series(
    profile: &CoefficientProfile,
    r: f64,
    budget: TruncationBudget,
) -> Result<SeriesResult> {
    let k2 = profile.alpha().k2();
    let cert = GeometricTail::new(k2 * k2 / 2.0, r * r)?;
    kernel::truncated_sum(
        2,
        |k| {
            let c = profile.c(k);
            k as f64 * c * c * r.powi(2 * k as i32)
        },
        cert,
        budget,
    )
}

/// Certified left-hand side from the defining series, valid for any
/// admissible profile at `0 <= r <= 1 - 1e-9`.
///
/// The reported `tail_bound` is authoritative: after propagation through
/// squares, powers, and polynomial composition it can exceed the requested
/// tolerance, and consumers must compare against the bound actually returned.
/// Readings that exist only as printed misstatements (`Special`, and the
/// statement readings of the squared-coefficients and refined-ratio families)
/// have no defining series and are rejected.
pub fn lhs_series(
    kind: FunctionalKind,
    variant: Variant,
    profile: &CoefficientProfile,
    r: f64,
    budget: TruncationBudget,
) -> Result<SeriesResult> {
    kind.validate()?;
    kind.check_variant(variant)?;
    check_series_radius(r)?;
    let alpha = profile.alpha();
    let k2 = alpha.k2();
    match kind {
        FunctionalKind::Rogosinski { n } => {
            let b = sub_budget(budget, 2);
            let maj = majorant_series(profile, r, b)?;
            let tail = coeff_tail(profile, Channel::Sum, n, r, b)?;
            Ok(SeriesResult {
                value: maj.value + tail.value,
                terms_used: maj.terms_used + tail.terms_used,
                tail_bound: maj.tail_bound + tail.tail_bound,
            })
        }
        FunctionalKind::RogosinskiSquared { n } => {
            let b = sub_budget(budget, 2);
            let maj = majorant_series(profile, r, b)?;
            let tail = coeff_tail(profile, Channel::Analytic, n, r, b)?;
            // The statement reading carries the spurious linear term
            // 2(1-alpha) r that its display anchors into the tail.
            let extra = match variant {
                Variant::Statement => k2 * r,
                _ => 0.0,
            };
            let v = maj.value;
            let t = maj.tail_bound;
            Ok(SeriesResult {
                value: v * v + extra + tail.value,
                terms_used: maj.terms_used + tail.terms_used,
                tail_bound: t * (2.0 * v + t) + tail.tail_bound,
            })
        }
        FunctionalKind::PoweredArgument { m, n } => {
            if variant == Variant::Special {
                return Err(Error::Unsupported(
                    "the special reading is a misprinted equation, not a series; \
                     evaluate it through the closed form"
                        .into(),
                ));
            }
            let b = sub_budget(budget, 2);
            let rm = r.powi(m as i32);
            // |f(r^m)|: the majorant series evaluated at r^m.
            let cert = GeometricTail::new(k2 / 2.0, rm)?;
            let head = kernel::truncated_sum(
                2,
                |k| profile.c(k) * rm.powi(k as i32),
                cert,
                b,
            )?;
            let tail = coeff_tail(profile, Channel::Analytic, n, r, b)?;
            Ok(SeriesResult {
                value: rm + head.value + tail.value,
                terms_used: head.terms_used + tail.terms_used,
                tail_bound: head.tail_bound + tail.tail_bound,
            })
        }
        FunctionalKind::AnalyticPower { p } => {
            let b = sub_budget(budget, 2);
            let maj = majorant_series(profile, r, b)?;
            match variant {
                Variant::Statement => {
                    let h = coeff_tail(profile, Channel::Analytic, 2, r, b)?;
                    let v = r + h.value;
                    let t = h.tail_bound;
                    // (v + t)^p - v^p <= p (v + t)^(p-1) t
                    let pow_tail = p as f64 * (v + t).powi(p as i32 - 1) * t;
                    Ok(SeriesResult {
                        value: v.powi(p as i32) + maj.value,
                        terms_used: h.terms_used + maj.terms_used,
                        tail_bound: pow_tail + maj.tail_bound,
                    })
                }
                _ => Ok(SeriesResult {
                    value: r.powi(p as i32) + maj.value,
                    terms_used: maj.terms_used,
                    tail_bound: maj.tail_bound,
                }),
            }
        }
        FunctionalKind::AreaPolynomial { n } => {
            let b = sub_budget(budget, 2);
            let maj = majorant_series(profile, r, b)?;
            let area = area_tail_series(profile, r, b)?;
            let w = r * r + area.value;
            let t = area.tail_bound;
            // P(w + t) - P(w) <= P'(w + t) t, and P' is increasing on w >= 0.
            let poly_tail = poly_sum_derivative(w + t, n) * t;
            Ok(SeriesResult {
                value: maj.value + poly_sum(w, n),
                terms_used: maj.terms_used + area.terms_used,
                tail_bound: maj.tail_bound + poly_tail,
            })
        }
        FunctionalKind::AreaLinear => {
            // Merged first-order series r + r^2 + sum_{k>=2} (c_k + k c_k^2) r^k,
            // with the area part attached at r^k exactly as the published
            // corollary specializes it.
            let cert = GeometricTail::new((k2 + k2 * k2) / 2.0, r)?;
            let s = kernel::truncated_sum(
                2,
                |k| {
                    let c = profile.c(k);
                    (c + k as f64 * c * c) * r.powi(k as i32)
                },
                cert,
                sub_budget(budget, 1),
            )?;
            Ok(SeriesResult { value: r + r * r + s.value, ..s })
        }
        FunctionalKind::SquaredCoefficients => {
            if variant == Variant::Statement {
                return Err(Error::Unsupported(
                    "the statement coefficient 4(1-alpha^2) does not arise from any \
                     coefficient profile; use the proof variant or the closed form"
                        .into(),
                ));
            }
            let cert = GeometricTail::new(k2 / 2.0 + k2 * k2 / 4.0, r)?;
            let s = kernel::truncated_sum(
                2,
                |k| {
                    let c = profile.c(k);
                    (c + c * c) * r.powi(k as i32)
                },
                cert,
                sub_budget(budget, 1),
            )?;
            Ok(SeriesResult { value: r + s.value, ..s })
        }
        FunctionalKind::RefinedWeighted { n } => {
            let b = sub_budget(budget, 2);
            let maj = majorant_series(profile, r, b)?;
            // Only the k >= 2 part of the area sum is re-weighted; the
            // leading r^2 term belongs to the identity coefficient and is
            // not part of the refinement.
            let area = area_tail_series(profile, r, b)?;
            let weight = 1.0 / (1.0 - r.powi(n as i32));
            Ok(SeriesResult {
                value: maj.value + weight * area.value,
                terms_used: maj.terms_used + area.terms_used,
                tail_bound: maj.tail_bound + weight * area.tail_bound,
            })
        }
        FunctionalKind::RefinedQ { m } => {
            let b = sub_budget(budget, 2);
            let maj = majorant_series(profile, r, b)?;
            let rm = r.powi(m as i32);
            let q = 1.0 / (1.0 + profile.second_coeff()) + rm / (1.0 - rm);
            let cert = GeometricTail::new(k2.powi(m as i32) / 3.0, rm)?;
            let s = kernel::truncated_sum(
                3,
                |k| {
                    (k as f64).powi(m as i32 - 1)
                        * profile.c(k).powi(m as i32)
                        * r.powi((m * k) as i32)
                },
                cert,
                b,
            )?;
            Ok(SeriesResult {
                value: maj.value + q * s.value,
                terms_used: maj.terms_used + s.terms_used,
                tail_bound: maj.tail_bound + q * s.tail_bound,
            })
        }
        FunctionalKind::RefinedR => {
            if variant == Variant::Statement {
                return Err(Error::Unsupported(
                    "the statement reading lost its constant term and defines no \
                     series; use the proof variant or the closed form"
                        .into(),
                ));
            }
            let b2 = profile.second_coeff();
            let ratio = (b2 * b2 - b2) * r / (1.0 - b2 * r);
            let s = coeff_tail(profile, Channel::Sum, 3, r, sub_budget(budget, 1))?;
            Ok(SeriesResult { value: r + ratio + s.value, ..s })
        }
        FunctionalKind::Jacobian { n } => {
            let b = sub_budget(budget, 3);
            let maj = majorant_series(profile, r, b)?;
            // |h'(r)| r expanded coefficient-wise: r + sum_{k>=2} k a_k r^k.
            let cert = GeometricTail::new(k2, r)?;
            let deriv = kernel::truncated_sum(
                2,
                |k| k as f64 * profile.a(k) * r.powi(k as i32),
                cert,
                b,
            )?;
            let tail = coeff_tail(profile, Channel::Sum, n, r, b)?;
            Ok(SeriesResult {
                value: maj.value + r + deriv.value + tail.value,
                terms_used: maj.terms_used + deriv.terms_used + tail.terms_used,
                tail_bound: maj.tail_bound + deriv.tail_bound + tail.tail_bound,
            })
        }
    }
}

// ---- radius equations ---------------------------------------------------

/// The residual `G(r) = L(r) - d(alpha)` of one functional along the
/// extremal profile, ready for the smallest-root solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusEquation {
    kind: FunctionalKind,
    variant: Variant,
    alpha: AlphaParam,
    second_coeff: f64,
}

/// Builds the radius equation for a functional at the extremal profile.
pub fn radius_equation(
    kind: FunctionalKind,
    variant: Variant,
    alpha: AlphaParam,
) -> Result<RadiusEquation> {
    kind.validate()?;
    kind.check_variant(variant)?;
    Ok(RadiusEquation { kind, variant, alpha, second_coeff: 1.0 - alpha.value() })
}

impl RadiusEquation {
    pub fn kind(&self) -> FunctionalKind {
        self.kind
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn alpha(&self) -> AlphaParam {
        self.alpha
    }

    /// The right-hand side `d(alpha)` the functional is measured against.
    pub fn distance(&self) -> f64 {
        distance(self.alpha)
    }

    /// `G(r) = L(r) - d(alpha)`; negative strictly left of the sharp radius,
    /// positive strictly right of it. Callers keep `0 <= r < 1`.
    pub fn residual(&self, r: f64) -> f64 {
        debug_assert!((0.0..1.0).contains(&r), "residual radius out of range: {r}");
        g_core(self.kind, self.variant, self.alpha, self.second_coeff, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::truncated_sum;
    use approx::assert_abs_diff_eq;

    fn ap(a: f64) -> AlphaParam {
        AlphaParam::new(a).unwrap()
    }

    fn extremal(a: f64) -> CoefficientProfile {
        CoefficientProfile::extremal(ap(a))
    }

    const ALL_KINDS: [FunctionalKind; 11] = [
        FunctionalKind::Rogosinski { n: 2 },
        FunctionalKind::RogosinskiSquared { n: 3 },
        FunctionalKind::PoweredArgument { m: 2, n: 2 },
        FunctionalKind::AnalyticPower { p: 7 },
        FunctionalKind::AreaPolynomial { n: 2 },
        FunctionalKind::AreaLinear,
        FunctionalKind::SquaredCoefficients,
        FunctionalKind::RefinedWeighted { n: 2 },
        FunctionalKind::RefinedQ { m: 1 },
        FunctionalKind::RefinedR,
        FunctionalKind::Jacobian { n: 2 },
    ];

    #[test]
    fn area_bound_reference_value_and_oracle() {
        let alpha = ap(0.1);
        let closed = area_bound(0.2734, alpha).unwrap();
        assert_abs_diff_eq!(closed, 0.08427675832536215, epsilon = 1e-15);
        // Independent series: r^2 + sum_{k>=2} k (2(1-a)/k)^2 r^(2k).
        let r: f64 = 0.2734;
        let k2 = alpha.k2();
        let oracle = truncated_sum(
            2,
            |k| k as f64 * (k2 / k as f64).powi(2) * r.powi(2 * k as i32),
            GeometricTail::new(k2 * k2 / 2.0, r * r).unwrap(),
            TruncationBudget::default_oracle(),
        )
        .unwrap();
        assert!((closed - (r * r + oracle.value)).abs() <= oracle.tail_bound + 1e-12);
        assert!(area_bound(1.0, alpha).is_err());
    }

    #[test]
    fn poly_sum_against_naive() {
        for deg in 0..=10u32 {
            for w in [0.0_f64, 0.3, 1.0, 2.5] {
                let naive: f64 = (1..=deg).map(|j| w.powi(j as i32)).sum();
                assert_abs_diff_eq!(poly_sum(w, deg), naive, epsilon = 1e-12);
                let dnaive: f64 =
                    (1..=deg).map(|j| j as f64 * w.powi(j as i32 - 1)).sum();
                assert_abs_diff_eq!(poly_sum_derivative(w, deg), dnaive, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn closed_lhs_reaches_distance_near_tabulated_radius() {
        // At the sharp radius of the first family the left side meets
        // d(alpha); 0.2771 is the 4-decimal radius for alpha = 0.1.
        let p = extremal(0.1);
        let lhs =
            lhs_closed(FunctionalKind::Rogosinski { n: 2 }, Variant::Proof, &p, 0.2771).unwrap();
        assert_abs_diff_eq!(lhs, 0.44768376431318824, epsilon = 1e-15);
        let d = model::distance_bound(ap(0.1));
        assert!((lhs - d).abs() <= 2e-4, "lhs {lhs} vs d {d}");
    }

    #[test]
    fn squared_coefficients_closed_value() {
        let p = extremal(0.5);
        let lhs =
            lhs_closed(FunctionalKind::SquaredCoefficients, Variant::Proof, &p, 0.5).unwrap();
        assert_abs_diff_eq!(lhs, 0.7753877, epsilon = 5e-8);
    }

    #[test]
    fn closed_matches_series_on_extremal_grid() {
        let budget = TruncationBudget::new(1e-11, 4000).unwrap();
        for kind in ALL_KINDS {
            for a in [0.0, 0.3, 0.7] {
                let p = extremal(a);
                for r in [0.05, 0.2, 0.45, 0.7, 0.9] {
                    let closed = lhs_closed(kind, Variant::Proof, &p, r).unwrap();
                    let series = lhs_series(kind, Variant::Proof, &p, r, budget).unwrap();
                    assert!(
                        (closed - series.value).abs() <= series.tail_bound + 1e-10,
                        "{} alpha={a} r={r}: closed {closed} vs series {} (tail {})",
                        kind.label(),
                        series.value,
                        series.tail_bound
                    );
                }
            }
        }
    }

    #[test]
    fn statement_variants_differ_where_documented() {
        let p = extremal(0.2);
        let r = 0.3;
        // These four families have a genuine statement/proof gap.
        for kind in [
            FunctionalKind::RogosinskiSquared { n: 3 },
            FunctionalKind::AnalyticPower { p: 3 },
            FunctionalKind::SquaredCoefficients,
            FunctionalKind::RefinedR,
        ] {
            let s = lhs_closed(kind, Variant::Statement, &p, r).unwrap();
            let q = lhs_closed(kind, Variant::Proof, &p, r).unwrap();
            assert!((s - q).abs() > 1e-6, "{} should split", kind.label());
        }
        // Everywhere else the two readings coincide bit-for-bit.
        for kind in [
            FunctionalKind::Rogosinski { n: 4 },
            FunctionalKind::PoweredArgument { m: 3, n: 4 },
            FunctionalKind::AreaPolynomial { n: 3 },
            FunctionalKind::AreaLinear,
            FunctionalKind::RefinedWeighted { n: 3 },
            FunctionalKind::RefinedQ { m: 2 },
            FunctionalKind::Jacobian { n: 3 },
        ] {
            let s = lhs_closed(kind, Variant::Statement, &p, r).unwrap();
            let q = lhs_closed(kind, Variant::Proof, &p, r).unwrap();
            assert_eq!(s, q, "{} statement must equal proof", kind.label());
        }
    }

    #[test]
    fn statement_series_matches_statement_closed_where_defined() {
        let budget = TruncationBudget::new(1e-11, 4000).unwrap();
        let p = extremal(0.2);
        for kind in [
            FunctionalKind::RogosinskiSquared { n: 3 },
            FunctionalKind::AnalyticPower { p: 3 },
        ] {
            for r in [0.1, 0.3, 0.5] {
                let closed = lhs_closed(kind, Variant::Statement, &p, r).unwrap();
                let series = lhs_series(kind, Variant::Statement, &p, r, budget).unwrap();
                assert!(
                    (closed - series.value).abs() <= series.tail_bound + 1e-10,
                    "{} r={r}",
                    kind.label()
                );
            }
        }
    }

    #[test]
    fn special_variant_gating() {
        let kind = FunctionalKind::PoweredArgument { m: 2, n: 2 };
        assert!(kind.supports(Variant::Special));
        assert!(!FunctionalKind::Rogosinski { n: 2 }.supports(Variant::Special));
        let p = extremal(0.3);
        // closed form exists for the special reading...
        let sp = lhs_closed(kind, Variant::Special, &p, 0.2).unwrap();
        let pr = lhs_closed(kind, Variant::Proof, &p, 0.2).unwrap();
        // ...and exceeds the proof reading by exactly 2(1-alpha) r.
        assert_abs_diff_eq!(sp - pr, 2.0 * 0.7 * 0.2, epsilon = 1e-12);
        // ...but has no defining series.
        let err =
            lhs_series(kind, Variant::Special, &p, 0.2, TruncationBudget::default_oracle())
                .unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
        // and other kinds reject it outright.
        let err = lhs_closed(FunctionalKind::AreaLinear, Variant::Special, &p, 0.2).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }

    #[test]
    fn misprint_only_readings_have_no_series() {
        let p = extremal(0.3);
        let b = TruncationBudget::default_oracle();
        for kind in [FunctionalKind::SquaredCoefficients, FunctionalKind::RefinedR] {
            let err = lhs_series(kind, Variant::Statement, &p, 0.2, b).unwrap_err();
            assert!(matches!(err, Error::Unsupported(_)), "{}", kind.label());
        }
    }

    #[test]
    fn closed_form_refuses_general_profiles() {
        let p = CoefficientProfile::from_entries(ap(0.3), &[(3, 0.1, 0.1)]).unwrap();
        let err =
            lhs_closed(FunctionalKind::Rogosinski { n: 2 }, Variant::Proof, &p, 0.2).unwrap_err();
        assert!(matches!(err, Error::NonExtremalProfile));
        // Refined kinds accept a second-coefficient-only deviation...
        let q = CoefficientProfile::extremal(ap(0.3)).with_second_coeff(0.4).unwrap();
        assert!(lhs_closed(FunctionalKind::RefinedQ { m: 1 }, Variant::Proof, &q, 0.2).is_ok());
        assert!(lhs_closed(FunctionalKind::RefinedR, Variant::Proof, &q, 0.2).is_ok());
        // ...but not beyond.
        let err = lhs_closed(FunctionalKind::RefinedR, Variant::Proof, &p, 0.2).unwrap_err();
        assert!(matches!(err, Error::NonExtremalProfile));
        // and the plain kinds refuse even the second coefficient.
        let err =
            lhs_closed(FunctionalKind::Rogosinski { n: 2 }, Variant::Proof, &q, 0.2).unwrap_err();
        assert!(matches!(err, Error::NonExtremalProfile));
    }

    #[test]
    fn series_respects_profile_overrides() {
        // Shrinking the second coefficient lowers every series that reads it.
        let b = TruncationBudget::default_oracle();
        let base = extremal(0.3);
        let small = CoefficientProfile::extremal(ap(0.3)).with_second_coeff(0.1).unwrap();
        for kind in [
            FunctionalKind::Rogosinski { n: 3 },
            FunctionalKind::AreaPolynomial { n: 2 },
            FunctionalKind::SquaredCoefficients,
            FunctionalKind::Jacobian { n: 3 },
        ] {
            let full = lhs_series(kind, Variant::Proof, &base, 0.4, b).unwrap();
            let less = lhs_series(kind, Variant::Proof, &small, 0.4, b).unwrap();
            assert!(
                less.value < full.value - 1e-6,
                "{}: {} !< {}",
                kind.label(),
                less.value,
                full.value
            );
        }
    }

    #[test]
    fn refined_closed_forms_track_second_coeff() {
        // The refined families' closed forms move with the supplied second
        // coefficient and agree with their series at the same input.
        let b = TruncationBudget::default_oracle();
        for c2 in [0.2, 0.5, 0.7] {
            let p = CoefficientProfile::extremal(ap(0.3)).with_second_coeff(c2).unwrap();
            for kind in [FunctionalKind::RefinedQ { m: 2 }, FunctionalKind::RefinedR] {
                let closed = lhs_closed(kind, Variant::Proof, &p, 0.35).unwrap();
                let series = lhs_series(kind, Variant::Proof, &p, 0.35, b).unwrap();
                // The refined-q closed form keeps the extremal majorant while
                // its series majorant carries the overridden c_2, so the two
                // differ by exactly ((1-alpha) - c_2) r^2. The refined-r sums
                // start at index 3 on both sides, so there is no gap there.
                let gap = match kind {
                    FunctionalKind::RefinedQ { .. } => (0.7 - c2) * 0.35_f64.powi(2),
                    _ => 0.0,
                };
                assert!(
                    (closed - (series.value + gap)).abs() <= series.tail_bound + 1e-9,
                    "{} c2={c2}: closed {closed} vs series {}",
                    kind.label(),
                    series.value
                );
            }
        }
    }

    #[test]
    fn residual_sign_structure() {
        for kind in ALL_KINDS {
            for a in [0.0, 0.4, 0.8] {
                let eq = radius_equation(kind, Variant::Proof, ap(a)).unwrap();
                assert!(eq.residual(1e-6) < 0.0, "{} alpha={a} at 0+", kind.label());
                assert!(
                    eq.residual(kernel::R_MAX) > 0.0,
                    "{} alpha={a} at 1-",
                    kind.label()
                );
            }
        }
    }

    #[test]
    fn refined_r_statement_is_degenerate_at_zero_plus() {
        // The printed display lost its constant term: the residual is
        // already positive at 0+, so no admissible radius exists.
        let eq = radius_equation(FunctionalKind::RefinedR, Variant::Statement, ap(0.3)).unwrap();
        assert!(eq.residual(1e-3) > 0.0);
        let expected = 2.0 * 0.7 * (1.0 - LN_2);
        assert_abs_diff_eq!(eq.residual(1e-9), expected, epsilon = 1e-6);
    }

    #[test]
    fn kind_validation_and_names() {
        assert!(FunctionalKind::Rogosinski { n: 1 }.validate().is_err());
        assert!(FunctionalKind::AreaPolynomial { n: 0 }.validate().is_err());
        assert!(FunctionalKind::AreaPolynomial { n: 1 }.validate().is_ok());
        assert!(FunctionalKind::PoweredArgument { m: 0, n: 2 }.validate().is_err());
        assert!(FunctionalKind::PoweredArgument { m: 1, n: 1 }.validate().is_err());
        assert!(FunctionalKind::AnalyticPower { p: 0 }.validate().is_err());
        assert!(FunctionalKind::RefinedQ { m: 0 }.validate().is_err());
        assert_eq!(FunctionalKind::RogosinskiSquared { n: 3 }.name(), "rogosinski-squared");
        assert_eq!(
            FunctionalKind::PoweredArgument { m: 2, n: 3 }.label(),
            "powered-argument(m=2, n=3)"
        );
        assert_eq!(Variant::Proof.name(), "proof");
    }

    #[test]
    fn jacobian_weight_equals_derivative_series() {
        // alpha + (1-alpha)(1+r)/(1-r) multiplied by r equals the derivative
        // series r + sum k (2(1-alpha)/k) r^k term by term.
        for a in [0.0, 0.3, 0.8] {
            let alpha = ap(a);
            for r in [0.1, 0.4, 0.75] {
                let weighted = model::jacobian_sqrt_bound(r, alpha).unwrap() * r;
                let series = truncated_sum(
                    2,
                    |k| k as f64 * (alpha.k2() / k as f64) * r.powi(k as i32),
                    GeometricTail::new(alpha.k2(), r).unwrap(),
                    TruncationBudget::default_oracle(),
                )
                .unwrap();
                assert!(
                    (weighted - (r + series.value)).abs() <= series.tail_bound + 1e-10,
                    "alpha={a} r={r}"
                );
            }
        }
    }
}
