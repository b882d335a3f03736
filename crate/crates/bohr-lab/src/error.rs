use thiserror::Error;

/// Everything that can go wrong across the crate: domain violations, class
/// bound violations, degenerate radius equations, and budget exhaustion in
/// the series oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The class order must satisfy 0 <= alpha < 1.
    #[error("alpha must lie in [0, 1), got {0}")]
    Alpha(f64),

    /// A supplied coefficient bound exceeds the sharp class bound 2(1-alpha)/n.
    #[error("coefficient bound violated at n = {n}: {value} exceeds the class bound {bound}")]
    CoefficientBound { n: u32, value: f64, bound: f64 },

    /// Structural problem in the plain-text profile interchange format.
    #[error("profile parse error at line {line}: {msg}")]
    ProfileParse { line: usize, msg: String },

    /// Closed-form left-hand sides are exact only at the extremal profile;
    /// general profiles must go through the series oracle.
    #[error("closed forms are exact only for the extremal profile; evaluate general profiles with the series oracle")]
    NonExtremalProfile,

    /// A functional was asked to do something its definition does not support
    /// (missing profile channel, inapplicable variant, bad parameter).
    #[error("unsupported combination: {0}")]
    Unsupported(String),

    /// The summation engine hit its term cap before the tail certificate
    /// reached the requested tolerance.
    #[error("series budget exceeded after {terms} terms (remaining tail bound {tail_bound:.3e})")]
    BudgetExceeded { terms: u32, tail_bound: f64 },

    /// The residual stayed negative over the whole scan range.
    #[error("no sign change: the residual stays negative on the scan range up to 1 - 1e-9")]
    NoSignChange,

    /// The residual is already non-negative at the scan start, so no root
    /// with the required negative approach exists. Signals a degenerate
    /// functional reading rather than a solver failure.
    #[error("residual at the scan start is non-negative ({value:.6e}); the equation admits no smallest root with a sign change")]
    NonNegativeStart { value: f64 },

    /// Table id not present in the registry.
    #[error("unknown table id {0:?} (known ids: T1..T8, TR)")]
    UnknownTable(String),
}
