//! Class model: the order parameter, sharp coefficient bounds, the extremal
//! majorant/minorant pair, and user-supplied coefficient profiles.
//!
//! Throughout, `f = h + conj(g)` with `h(z) = z + sum a_n z^n` and
//! `g(z) = sum_{n>=2} b_n z^n`; membership at order `alpha` forces
//! `|a_n| + |b_n| <= 2(1-alpha)/n`, attained by the extremal mapping
//! `f_alpha(z) = z + sum 2(1-alpha) z^n / n` (whose co-analytic part vanishes).

use std::collections::BTreeMap;

use crate::error::Error;
use crate::kernel;
use crate::Result;

/// Validated class order `0 <= alpha < 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || !(0.0..1.0).contains(&alpha) {
            return Err(Error::Alpha(alpha));
        }
        Ok(Self(alpha))
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    /// The recurring factor `2(1 - alpha)`, the n = 1 numerator of the
    /// coefficient bound.
    pub(crate) fn k2(&self) -> f64 {
        2.0 * (1.0 - self.0)
    }
}

/// Sharp combined coefficient bound `|a_n| + |b_n| <= 2(1-alpha)/n`, `n >= 2`.
pub fn coeff_bound(n: u32, alpha: AlphaParam) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("coefficient bound index must be >= 2, got {n}")));
    }
    Ok(alpha.k2() / n as f64)
}

/// Distance from `f(0)` to the boundary of the extremal image:
/// `d(alpha) = 1 + 2(1-alpha)(ln 2 - 1)`. Every Bohr-type radius in this
/// crate is the threshold at which a coefficient functional first reaches
/// this quantity.
pub fn distance_bound(alpha: AlphaParam) -> f64 {
    1.0 + alpha.k2() * (std::f64::consts::LN_2 - 1.0)
}

/// Extremal coefficient majorant `r + sum_{n>=2} 2(1-alpha) r^n / n`,
/// in closed form `r - 2(1-alpha)(r + ln(1-r))` for `0 <= r < 1`.
pub fn majorant(r: f64, alpha: AlphaParam) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("majorant radius must lie in [0, 1), got {r}")));
    }
    Ok(majorant_unchecked(r, alpha))
}

pub(crate) fn majorant_unchecked(r: f64, alpha: AlphaParam) -> f64 {
    r + alpha.k2() * kernel::log_tail_unchecked(2, r)
}

/// Extremal modulus minorant `r + 2(1-alpha)(ln(1+r) - r)` for `0 <= r <= 1`;
/// at `r = 1` it equals `d(alpha)` exactly, which is what makes the distance
/// bound sharp.
pub fn minorant(r: f64, alpha: AlphaParam) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain(format!("minorant radius must lie in [0, 1], got {r}")));
    }
    Ok(r + alpha.k2() * (r.ln_1p() - r))
}

/// Pointwise bound on the square root of the Jacobian along the extremal
/// mapping: `alpha + (1-alpha)(1+r)/(1-r)`, i.e. exactly `h'(r)` of the
/// extremal analytic part. Defined for `0 <= r < 1`.
pub fn jacobian_sqrt_bound(r: f64, alpha: AlphaParam) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!(
            "jacobian bound radius must lie in [0, 1), got {r}"
        )));
    }
    Ok(jacobian_sqrt_unchecked(r, alpha))
}

pub(crate) fn jacobian_sqrt_unchecked(r: f64, alpha: AlphaParam) -> f64 {
    alpha.value() + (1.0 - alpha.value()) * (1.0 + r) / (1.0 - r)
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct ProfileEntry {
    /// Combined bound on `|a_n| + |b_n|`.
    sum: f64,
    /// Bound on the analytic part `|a_n|` alone.
    analytic: f64,
}

/// Coefficient data for one mapping in the class: the order plus optional
/// per-index overrides of the combined bound `c_n >= |a_n| + |b_n|` and the
/// analytic bound `a_n >= |a_n|`. Indices without an override fall back to
/// the sharp class bound `2(1-alpha)/n` for both channels, so the empty
/// profile is the extremal mapping.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientProfile {
    alpha: AlphaParam,
    overrides: BTreeMap<u32, ProfileEntry>,
}

/// Slack allowed when checking overrides against the sharp class bound, so
/// that values printed at full precision round-trip through text.
const BOUND_HEADROOM: f64 = 1e-12;

impl CoefficientProfile {
    /// The extremal profile: every coefficient at the sharp bound.
    pub fn extremal(alpha: AlphaParam) -> Self {
        Self { alpha, overrides: BTreeMap::new() }
    }

    /// Builds a profile from `(n, c_n, a_n_bound)` triples. Every index must
    /// be distinct and at least 2, and both channels must respect
    /// `0 <= a_n_bound <= c_n <= 2(1-alpha)/n` (up to `1e-12` headroom).
    pub fn from_entries(alpha: AlphaParam, entries: &[(u32, f64, f64)]) -> Result<Self> {
        let mut overrides = BTreeMap::new();
        for &(n, sum, analytic) in entries {
            let entry = Self::validated_entry(alpha, n, sum, analytic)?;
            if overrides.insert(n, entry).is_some() {
                return Err(Error::Domain(format!("duplicate profile entry for n = {n}")));
            }
        }
        Ok(Self { alpha, overrides })
    }

    /// Parses the plain-text interchange format:
    ///
    /// ```text
    /// alpha=0.3
    /// n, c_n, a_n_bound
    /// 2, 0.7, 0.65
    /// 7, 0.05, 0.05
    /// ```
    ///
    /// Blank lines and `#` comments are ignored. Errors carry 1-based line
    /// numbers; bound violations surface as [`Error::CoefficientBound`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut alpha: Option<AlphaParam> = None;
        let mut seen_header = false;
        let mut entries: Vec<(u32, f64, f64)> = Vec::new();
        let mut entry_lines: Vec<usize> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if alpha.is_none() {
                let rest = line.strip_prefix("alpha").and_then(|s| {
                    let s = s.trim_start();
                    s.strip_prefix('=')
                });
                let Some(rest) = rest else {
                    return Err(Error::ProfileParse {
                        line: line_no,
                        msg: format!("expected `alpha=<value>` preamble, got {line:?}"),
                    });
                };
                let value: f64 = rest.trim().parse().map_err(|_| Error::ProfileParse {
                    line: line_no,
                    msg: format!("cannot parse alpha value {:?}", rest.trim()),
                })?;
                alpha = Some(AlphaParam::new(value)?);
                continue;
            }
            if !seen_header {
                let normalized: String =
                    line.chars().filter(|c| !c.is_whitespace()).collect();
                if normalized != "n,c_n,a_n_bound" {
                    return Err(Error::ProfileParse {
                        line: line_no,
                        msg: format!("expected header `n, c_n, a_n_bound`, got {line:?}"),
                    });
                }
                seen_header = true;
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(Error::ProfileParse {
                    line: line_no,
                    msg: format!("expected 3 comma-separated fields, got {}", fields.len()),
                });
            }
            let n: u32 = fields[0].parse().map_err(|_| Error::ProfileParse {
                line: line_no,
                msg: format!("cannot parse index {:?}", fields[0]),
            })?;
            let sum: f64 = fields[1].parse().map_err(|_| Error::ProfileParse {
                line: line_no,
                msg: format!("cannot parse c_n {:?}", fields[1]),
            })?;
            let analytic: f64 = fields[2].parse().map_err(|_| Error::ProfileParse {
                line: line_no,
                msg: format!("cannot parse a_n_bound {:?}", fields[2]),
            })?;
            entries.push((n, sum, analytic));
            entry_lines.push(line_no);
        }
        let Some(alpha) = alpha else {
            return Err(Error::ProfileParse {
                line: text.lines().count().max(1),
                msg: "missing `alpha=<value>` preamble".into(),
            });
        };
        if !seen_header {
            return Err(Error::ProfileParse {
                line: text.lines().count().max(1),
                msg: "missing `n, c_n, a_n_bound` header".into(),
            });
        }
        // Structural duplicates are reported with their line number before
        // semantic bound checks run.
        let mut seen = std::collections::BTreeSet::new();
        for (&(n, _, _), &line_no) in entries.iter().zip(&entry_lines) {
            if !seen.insert(n) {
                return Err(Error::ProfileParse {
                    line: line_no,
                    msg: format!("duplicate entry for n = {n}"),
                });
            }
        }
        Self::from_entries(alpha, &entries)
    }

    fn validated_entry(
        alpha: AlphaParam,
        n: u32,
        sum: f64,
        analytic: f64,
    ) -> Result<ProfileEntry> {
        if n < 2 {
            return Err(Error::Domain(format!("profile indices start at n = 2, got {n}")));
        }
        if !sum.is_finite() || !analytic.is_finite() || sum < 0.0 || analytic < 0.0 {
            return Err(Error::Domain(format!(
                "profile entry at n = {n} must be finite and non-negative, got c_n = {sum}, a_n_bound = {analytic}"
            )));
        }
        let bound = alpha.k2() / n as f64;
        if sum > bound + BOUND_HEADROOM {
            return Err(Error::CoefficientBound { n, value: sum, bound });
        }
        if analytic > sum + BOUND_HEADROOM {
            return Err(Error::Domain(format!(
                "analytic bound at n = {n} exceeds the combined bound: {analytic} > {sum}"
            )));
        }
        Ok(ProfileEntry { sum, analytic })
    }

    /// Replaces the `n = 2` combined bound (both channels) with `c2`. The
    /// refined functionals read their second-coefficient input from here.
    pub fn with_second_coeff(mut self, c2: f64) -> Result<Self> {
        let entry = Self::validated_entry(self.alpha, 2, c2, c2)?;
        self.overrides.insert(2, entry);
        Ok(self)
    }

    pub fn alpha(&self) -> AlphaParam {
        self.alpha
    }

    /// True when no override is present, i.e. the profile is the extremal
    /// mapping `f_alpha`. An override that merely restates the sharp bound
    /// still counts as non-extremal; closed forms refuse it.
    pub fn is_extremal(&self) -> bool {
        self.overrides.is_empty()
    }

    /// True when the only override (if any) is the second coefficient; the
    /// refined closed forms accept exactly this much deviation.
    pub(crate) fn is_extremal_beyond_second(&self) -> bool {
        self.overrides.keys().all(|&n| n == 2)
    }

    /// Combined bound `c_n` for `n >= 2`: the override if present, else the
    /// sharp class bound `2(1-alpha)/n`.
    pub fn sum_bound(&self, n: u32) -> Result<f64> {
        if n < 2 {
            return Err(Error::Domain(format!("profile indices start at n = 2, got {n}")));
        }
        Ok(self.c(n))
    }

    /// Analytic-part bound `a_n` for `n >= 2` (override or class bound).
    pub fn analytic_bound(&self, n: u32) -> Result<f64> {
        if n < 2 {
            return Err(Error::Domain(format!("profile indices start at n = 2, got {n}")));
        }
        Ok(self.a(n))
    }

    /// Second-coefficient channel used by the refined functionals; equals
    /// `1 - alpha` on the extremal profile.
    pub fn second_coeff(&self) -> f64 {
        self.c(2)
    }

    pub(crate) fn c(&self, n: u32) -> f64 {
        debug_assert!(n >= 2);
        match self.overrides.get(&n) {
            Some(e) => e.sum,
            None => self.alpha.k2() / n as f64,
        }
    }

    pub(crate) fn a(&self, n: u32) -> f64 {
        debug_assert!(n >= 2);
        match self.overrides.get(&n) {
            Some(e) => e.analytic,
            None => self.alpha.k2() / n as f64,
        }
    }

    /// Renders the profile in the same format [`CoefficientProfile::parse`]
    /// accepts (only the overridden rows are listed).
    pub fn to_text(&self) -> String {
        let mut out = format!("alpha={}\n", self.alpha.value());
        out.push_str("n, c_n, a_n_bound\n");
        for (n, e) in &self.overrides {
            out.push_str(&format!("{n}, {}, {}\n", e.sum, e.analytic));
        }
        out
    }
}
