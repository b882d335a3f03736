//! Sharp Bohr-type radii for close-to-convex harmonic mappings of order alpha.
//!
//! The class under study consists of harmonic mappings `f = h + conj(g)` on
//! the unit disk, normalized so that `g'(0) = 0`, whose analytic parts satisfy
//! `Re(h'(z) - alpha) > |g'(z)|` for some order `0 <= alpha < 1`. Every such
//! mapping obeys the sharp coefficient bounds `|a_n| + |b_n| <= 2(1-alpha)/n`,
//! with equality along the extremal mapping
//!
//! ```text
//! f_alpha(z) = z + sum_{n>=2} 2(1-alpha) z^n / n .
//! ```
//!
//! A Bohr-type theorem for this class states that a coefficient functional
//! stays below the distance bound `d(alpha) = 1 + 2(1-alpha)(ln 2 - 1)` for
//! all radii `r` up to some sharp threshold, the root of a transcendental
//! equation in `(0, 1)`. This crate evaluates those functionals three ways —
//! closed form, certified series, and a summation oracle — solves the radius
//! equations deterministically, and reproduces the published numerical tables
//! cell by cell, flagging the handful of misprinted cells as machine-readable
//! errata.
//!
//! Modules, bottom up:
//!
//! * [`kernel`] — logarithmic tails, the dilogarithm, and a certified
//!   truncated-summation engine with geometric tail certificates.
//! * [`model`] — class order, coefficient bounds, extremal majorant/minorant,
//!   and user-supplied coefficient profiles.
//! * [`functionals`] — the eleven Bohr functionals, each with a closed-form
//!   and a series left-hand side plus the residual of its radius equation.
//! * [`solver`] — deterministic smallest-root search (scan + bisection).
//! * [`tables`] — the published tables as data, with per-cell reproduction
//!   reports and flagged errata.

pub mod error;
pub mod functionals;
pub mod kernel;
pub mod model;
pub mod solver;
pub mod tables;

pub use error::Error;
pub use functionals::{FunctionalKind, RadiusEquation, Variant};
pub use kernel::{GeometricTail, SeriesResult, TruncationBudget};
pub use model::{AlphaParam, CoefficientProfile};
pub use solver::{RootResult, SolverConfig};
pub use tables::{PaperTable, TableReport};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
