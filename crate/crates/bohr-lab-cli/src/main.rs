//! Command-line front end: single-radius queries, table reproduction with
//! diff reports, alpha-sweep curves, and the verification suites.

use std::process::ExitCode;

use bohr_lab::functionals::{self, FunctionalKind, Variant};
use bohr_lab::kernel::TruncationBudget;
use bohr_lab::model::{self, AlphaParam, CoefficientProfile};
use bohr_lab::solver::{self, SolverConfig};
use bohr_lab::tables;
use bohr_lab::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bohr-lab",
    version,
    about = "Sharp Bohr-type radii for close-to-convex harmonic mappings of order alpha"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one sharp radius
    Radius(RadiusArgs),
    /// Recompute a published table and report per-cell agreement
    Table(TableArgs),
    /// Emit (alpha, root) rows across an alpha range
    Curve(CurveArgs),
    /// Run verification suites
    Check(CheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindName {
    Rogosinski,
    RogosinskiSquared,
    PoweredArgument,
    AnalyticPower,
    AreaPolynomial,
    AreaLinear,
    SquaredCoefficients,
    RefinedWeighted,
    RefinedQ,
    RefinedR,
    Jacobian,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantName {
    Statement,
    Proof,
    Special,
}

impl VariantName {
    fn to_variant(self) -> Variant {
        match self {
            VariantName::Statement => Variant::Statement,
            VariantName::Proof => Variant::Proof,
            VariantName::Special => Variant::Special,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatName {
    Plain,
    Csv,
    Markdown,
}

#[derive(Args)]
struct KindArgs {
    /// Functional family
    #[arg(long, value_enum)]
    kind: KindName,
    /// Truncation index or polynomial degree (rogosinski, rogosinski-squared,
    /// powered-argument, area-polynomial, refined-weighted, jacobian)
    #[arg(long)]
    n: Option<u32>,
    /// Argument / coefficient power (powered-argument, refined-q)
    #[arg(long)]
    m: Option<u32>,
    /// Analytic-part exponent (analytic-power)
    #[arg(long)]
    p: Option<u32>,
}

#[derive(Args)]
struct SolverArgs {
    /// Scan step for locating the first sign change
    #[arg(long, default_value_t = 1e-3)]
    scan_step: f64,
    /// Final bracket width
    #[arg(long, default_value_t = 1e-12)]
    root_tol: f64,
}

#[derive(Args)]
struct RadiusArgs {
    #[command(flatten)]
    kind: KindArgs,
    /// Class order, in [0, 1)
    #[arg(long)]
    alpha: f64,
    /// Which reading of the functional to solve
    #[arg(long, value_enum, default_value_t = VariantName::Proof)]
    variant: VariantName,
    #[arg(long, value_enum, default_value_t = FormatName::Plain)]
    format: FormatName,
    /// Digits after the decimal point, 1..=15 (default 4, or
    /// BOHR_LAB_PRECISION)
    #[arg(long)]
    precision: Option<usize>,
    #[command(flatten)]
    solver: SolverArgs,
    /// Also print bracket, residual, and iteration count (plain format)
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Table id: T1..T8 or TR
    #[arg(long)]
    id: String,
    #[arg(long, value_enum, default_value_t = FormatName::Plain)]
    format: FormatName,
}

#[derive(Args)]
struct CurveArgs {
    #[command(flatten)]
    kind: KindArgs,
    /// First alpha of the sweep, in [0, 1)
    #[arg(long)]
    alpha_from: f64,
    /// Last alpha of the sweep, in [0, 1)
    #[arg(long)]
    alpha_to: f64,
    /// Sweep increment, > 0
    #[arg(long)]
    step: f64,
    #[arg(long, value_enum, default_value_t = VariantName::Proof)]
    variant: VariantName,
    #[arg(long, value_enum, default_value_t = FormatName::Csv)]
    format: FormatName,
    #[arg(long)]
    precision: Option<usize>,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Tables,
    Sharpness,
    Oracle,
    Identities,
    Monotonicity,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridName {
    Coarse,
    Full,
}

#[derive(Args)]
struct CheckArgs {
    /// Run every suite
    #[arg(long, conflicts_with = "suite")]
    all: bool,
    /// Run selected suites (repeatable)
    #[arg(long, value_enum)]
    suite: Vec<SuiteName>,
    /// Oracle grid density
    #[arg(long, value_enum, default_value_t = GridName::Coarse)]
    grid: GridName,
}

/// A terminal failure: message plus process exit code (2 = bad input,
/// 3 = solver failure, 1 = verification failure).
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoSignChange
            | Error::NonNegativeStart { .. }
            | Error::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Cmd::Radius(args) => cmd_radius(args),
        Cmd::Table(args) => cmd_table(args),
        Cmd::Curve(args) => cmd_curve(args),
        Cmd::Check(args) => cmd_check(args),
    }
}

/// Builds the functional from `--kind` plus exactly the parameters that kind
/// takes; extraneous or missing parameters are usage errors.
fn build_kind(args: &KindArgs) -> Result<FunctionalKind, Failure> {
    let need = |v: Option<u32>, flag: &str, kind: &str| {
        v.ok_or_else(|| Failure::usage(format!("--kind {kind} requires --{flag}")))
    };
    let forbid = |v: Option<u32>, flag: &str, kind: &str| {
        if v.is_some() {
            Err(Failure::usage(format!("--kind {kind} does not take --{flag}")))
        } else {
            Ok(())
        }
    };
    let (n, m, p) = (args.n, args.m, args.p);
    let kind = match args.kind {
        KindName::Rogosinski => {
            forbid(m, "m", "rogosinski")?;
            forbid(p, "p", "rogosinski")?;
            FunctionalKind::Rogosinski { n: need(n, "n", "rogosinski")? }
        }
        KindName::RogosinskiSquared => {
            forbid(m, "m", "rogosinski-squared")?;
            forbid(p, "p", "rogosinski-squared")?;
            FunctionalKind::RogosinskiSquared { n: need(n, "n", "rogosinski-squared")? }
        }
        KindName::PoweredArgument => {
            forbid(p, "p", "powered-argument")?;
            FunctionalKind::PoweredArgument {
                m: need(m, "m", "powered-argument")?,
                n: need(n, "n", "powered-argument")?,
            }
        }
        KindName::AnalyticPower => {
            forbid(n, "n", "analytic-power")?;
            forbid(m, "m", "analytic-power")?;
            FunctionalKind::AnalyticPower { p: need(p, "p", "analytic-power")? }
        }
        KindName::AreaPolynomial => {
            forbid(m, "m", "area-polynomial")?;
            forbid(p, "p", "area-polynomial")?;
            FunctionalKind::AreaPolynomial { n: need(n, "n", "area-polynomial")? }
        }
        KindName::AreaLinear => {
            forbid(n, "n", "area-linear")?;
            forbid(m, "m", "area-linear")?;
            forbid(p, "p", "area-linear")?;
            FunctionalKind::AreaLinear
        }
        KindName::SquaredCoefficients => {
            forbid(n, "n", "squared-coefficients")?;
            forbid(m, "m", "squared-coefficients")?;
            forbid(p, "p", "squared-coefficients")?;
            FunctionalKind::SquaredCoefficients
        }
        KindName::RefinedWeighted => {
            forbid(m, "m", "refined-weighted")?;
            forbid(p, "p", "refined-weighted")?;
            FunctionalKind::RefinedWeighted { n: need(n, "n", "refined-weighted")? }
        }
        KindName::RefinedQ => {
            forbid(n, "n", "refined-q")?;
            forbid(p, "p", "refined-q")?;
            FunctionalKind::RefinedQ { m: need(m, "m", "refined-q")? }
        }
        KindName::RefinedR => {
            forbid(n, "n", "refined-r")?;
            forbid(m, "m", "refined-r")?;
            forbid(p, "p", "refined-r")?;
            FunctionalKind::RefinedR
        }
        KindName::Jacobian => {
            forbid(m, "m", "jacobian")?;
            forbid(p, "p", "jacobian")?;
            FunctionalKind::Jacobian { n: need(n, "n", "jacobian")? }
        }
    };
    kind.validate()?;
    Ok(kind)
}

/// Digits after the decimal point: flag, else `BOHR_LAB_PRECISION`, else 4.
fn resolve_precision(flag: Option<usize>) -> Result<usize, Failure> {
    let prec = match flag {
        Some(p) => p,
        None => match std::env::var("BOHR_LAB_PRECISION") {
            Ok(s) => s.parse::<usize>().map_err(|_| {
                Failure::usage(format!("BOHR_LAB_PRECISION must be an integer, got {s:?}"))
            })?,
            Err(_) => 4,
        },
    };
    if !(1..=15).contains(&prec) {
        return Err(Failure::usage(format!("precision must lie in 1..=15, got {prec}")));
    }
    Ok(prec)
}

fn solver_config(args: &SolverArgs) -> Result<SolverConfig, Failure> {
    Ok(SolverConfig::new(args.scan_step, args.root_tol)?)
}

fn cmd_radius(args: RadiusArgs) -> Result<ExitCode, Failure> {
    let kind = build_kind(&args.kind)?;
    let variant = args.variant.to_variant();
    let alpha = AlphaParam::new(args.alpha)?;
    let prec = resolve_precision(args.precision)?;
    let config = solver_config(&args.solver)?;
    let eq = functionals::radius_equation(kind, variant, alpha)?;
    eprintln!(
        "# kind={} variant={} alpha={} scan_step={:e} root_tol={:e}",
        kind.label(),
        variant,
        args.alpha,
        args.solver.scan_step,
        args.solver.root_tol
    );
    let result = solver::solve_radius(&eq, config)?;
    match args.format {
        FormatName::Plain => {
            println!("{:.prec$}", result.root);
            if args.verbose {
                println!("bracket_lo = {:.16e}", result.bracket.0);
                println!("bracket_hi = {:.16e}", result.bracket.1);
                println!("residual = {:.3e}", result.residual);
                println!("iterations = {}", result.iterations);
            }
        }
        FormatName::Csv => {
            println!("alpha,root");
            println!("{:.prec$},{:.prec$}", args.alpha, result.root);
        }
        FormatName::Markdown => {
            println!("| alpha | root |");
            println!("|---|---|");
            println!("| {:.prec$} | {:.prec$} |", args.alpha, result.root);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, Failure> {
    let table = tables::table(&args.id)?;
    eprintln!("# table={} variant={}", table.id, table.variant);
    let report = tables::reproduce(&table, SolverConfig::default())?;
    match args.format {
        FormatName::Plain => {
            println!("{}", report.summary());
            for cell in &report.cells {
                match cell.status {
                    tables::CellStatus::Pass => {}
                    tables::CellStatus::Flagged => {
                        let reason = table
                            .flag_for(&cell.row, &cell.col)
                            .map(|f| f.reason)
                            .unwrap_or("");
                        println!(
                            "  flagged {} / {}: printed {:.4}, recomputed {:.4} — {}",
                            cell.row, cell.col, cell.printed, cell.recomputed, reason
                        );
                    }
                    tables::CellStatus::Fail => {
                        println!(
                            "  FAIL {} / {}: printed {:.4}, recomputed {:.4} (diff {:.3e})",
                            cell.row, cell.col, cell.printed, cell.recomputed, cell.diff
                        );
                    }
                }
            }
        }
        FormatName::Csv => print!("{}", report.to_csv()),
        FormatName::Markdown => print!("{}", report.to_markdown()),
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_curve(args: CurveArgs) -> Result<ExitCode, Failure> {
    let kind = build_kind(&args.kind)?;
    let variant = args.variant.to_variant();
    let prec = resolve_precision(args.precision)?;
    let config = solver_config(&args.solver)?;
    if !args.step.is_finite() || args.step <= 0.0 {
        return Err(Failure::usage(format!("--step must be positive, got {}", args.step)));
    }
    if args.alpha_to < args.alpha_from {
        return Err(Failure::usage(format!(
            "empty range: --alpha-to {} is below --alpha-from {}",
            args.alpha_to, args.alpha_from
        )));
    }
    AlphaParam::new(args.alpha_from)?;
    AlphaParam::new(args.alpha_to)?;
    eprintln!(
        "# kind={} variant={} alpha={}..{} step={}",
        kind.label(),
        variant,
        args.alpha_from,
        args.alpha_to,
        args.step
    );
    let mut rows: Vec<(f64, f64)> = Vec::new();
    let mut i = 0u32;
    loop {
        let a = args.alpha_from + i as f64 * args.step;
        if a > args.alpha_to + 1e-12 {
            break;
        }
        let alpha = AlphaParam::new(a)?;
        let eq = functionals::radius_equation(kind, variant, alpha)?;
        rows.push((a, solver::solve_radius(&eq, config)?.root));
        i += 1;
    }
    match args.format {
        FormatName::Csv => {
            println!("alpha,root");
            for (a, root) in &rows {
                println!("{a:.prec$},{root:.prec$}");
            }
        }
        FormatName::Plain => {
            for (a, root) in &rows {
                println!("{a:.prec$}\t{root:.prec$}");
            }
        }
        FormatName::Markdown => {
            println!("| alpha | root |");
            println!("|---|---|");
            for (a, root) in &rows {
                println!("| {a:.prec$} | {root:.prec$} |");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---- verification suites -------------------------------------------------

/// One representative parameter choice per family.
fn representative_kinds() -> [FunctionalKind; 11] {
    [
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
    ]
}

/// The wide parameter grid used by the full oracle suite.
fn full_param_grid() -> Vec<FunctionalKind> {
    let mut kinds = Vec::new();
    for n in [2u32, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15] {
        kinds.push(FunctionalKind::Rogosinski { n });
    }
    for n in 2u32..=13 {
        kinds.push(FunctionalKind::RogosinskiSquared { n });
    }
    for m in [1u32, 2, 3, 5, 7, 15, 25, 35, 50, 90] {
        for n in [2u32, 3, 5] {
            kinds.push(FunctionalKind::PoweredArgument { m, n });
        }
    }
    for p in [1u32, 2, 3, 5, 7, 15, 35, 90] {
        kinds.push(FunctionalKind::AnalyticPower { p });
    }
    for n in 1u32..=10 {
        kinds.push(FunctionalKind::AreaPolynomial { n });
    }
    kinds.push(FunctionalKind::AreaLinear);
    kinds.push(FunctionalKind::SquaredCoefficients);
    for n in [2u32, 3, 4, 5, 10, 25, 50] {
        kinds.push(FunctionalKind::RefinedWeighted { n });
    }
    for m in 1u32..=6 {
        kinds.push(FunctionalKind::RefinedQ { m });
    }
    kinds.push(FunctionalKind::RefinedR);
    for n in [2u32, 3, 4, 5, 8, 10] {
        kinds.push(FunctionalKind::Jacobian { n });
    }
    kinds
}

fn alpha_grid() -> Vec<AlphaParam> {
    (0..10).map(|k| AlphaParam::new(k as f64 / 10.0).unwrap()).collect()
}

struct SuiteOutcome {
    passed: bool,
    lines: Vec<String>,
}

fn suite_tables() -> SuiteOutcome {
    let mut lines = Vec::new();
    let mut passed = true;
    let mut pass = 0;
    let mut flagged = 0;
    let mut fail = 0;
    for table in tables::registry() {
        match tables::reproduce(&table, SolverConfig::default()) {
            Ok(report) => {
                lines.push(format!("  {}", report.summary()));
                pass += report.pass_count();
                flagged += report.flagged_count();
                fail += report.fail_count();
                passed &= report.passed();
            }
            Err(e) => {
                lines.push(format!("  {}: error: {e}", table.id));
                passed = false;
            }
        }
    }
    lines.push(format!(
        "tables: {pass} pass, {flagged} flagged (known errata), {fail} fail"
    ));
    SuiteOutcome { passed, lines }
}

fn suite_sharpness() -> SuiteOutcome {
    let mut max_dev = 0.0f64;
    let mut count = 0;
    let mut passed = true;
    let mut lines = Vec::new();
    for kind in representative_kinds() {
        for &alpha in &alpha_grid() {
            match sharpness_deviation(kind, alpha) {
                Ok(dev) => {
                    max_dev = max_dev.max(dev);
                    count += 1;
                }
                Err(e) => {
                    lines.push(format!("  {}: error: {e}", kind.label()));
                    passed = false;
                }
            }
        }
    }
    passed &= max_dev <= 1e-8;
    lines.push(format!(
        "sharpness: max |lhs(r*) - d(alpha)| = {max_dev:.3e} over {count} roots (tol 1e-8)"
    ));
    SuiteOutcome { passed, lines }
}

fn sharpness_deviation(kind: FunctionalKind, alpha: AlphaParam) -> Result<f64, Error> {
    let eq = functionals::radius_equation(kind, Variant::Proof, alpha)?;
    let root = solver::solve_radius(&eq, SolverConfig::default())?.root;
    let profile = CoefficientProfile::extremal(alpha);
    let lhs = functionals::lhs_closed(kind, Variant::Proof, &profile, root)?;
    Ok((lhs - model::distance_bound(alpha)).abs())
}

fn suite_oracle(grid: GridName) -> SuiteOutcome {
    let (kinds, radii): (Vec<FunctionalKind>, Vec<f64>) = match grid {
        GridName::Coarse => (
            representative_kinds().to_vec(),
            vec![0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9],
        ),
        GridName::Full => {
            (full_param_grid(), (1..=18).map(|k| 0.05 * k as f64).collect())
        }
    };
    let budget = TruncationBudget::new(1e-11, 4000).unwrap();
    let mut count = 0u32;
    let mut worst = f64::NEG_INFINITY;
    let mut passed = true;
    let mut lines = Vec::new();
    for &kind in &kinds {
        for &alpha in &alpha_grid() {
            let profile = CoefficientProfile::extremal(alpha);
            for &r in &radii {
                let closed = functionals::lhs_closed(kind, Variant::Proof, &profile, r);
                let series = functionals::lhs_series(kind, Variant::Proof, &profile, r, budget);
                match (closed, series) {
                    (Ok(c), Ok(s)) => {
                        let excess = (c - s.value).abs() - s.tail_bound;
                        worst = worst.max(excess);
                        if excess > 1e-10 {
                            passed = false;
                            lines.push(format!(
                                "  {} alpha={} r={r}: closed {c} vs series {} exceeds tail by {excess:.3e}",
                                kind.label(),
                                alpha.value(),
                                s.value
                            ));
                        }
                        count += 1;
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        passed = false;
                        lines.push(format!("  {}: error: {e}", kind.label()));
                    }
                }
            }
        }
    }
    lines.push(format!(
        "oracle: {count} closed-vs-series checks, worst excess over tail bound {worst:.3e} (tol 1e-10)"
    ));
    SuiteOutcome { passed, lines }
}

fn suite_identities() -> SuiteOutcome {
    let mut passed = true;
    let mut lines = Vec::new();
    let mut count = 0;
    let mut check = |name: &str, dev: f64, tol: f64| {
        count += 1;
        if !(dev <= tol) {
            passed = false;
            lines.push(format!("  identity {name} off by {dev:.3e} (tol {tol:.0e})"));
        }
    };
    check(
        "d(1/2) = ln 2",
        (model::distance_bound(AlphaParam::new(0.5).unwrap()) - std::f64::consts::LN_2).abs(),
        1e-12,
    );
    for &alpha in &alpha_grid() {
        check(
            "minorant(1) = d",
            (model::minorant(1.0, alpha).unwrap() - model::distance_bound(alpha)).abs(),
            1e-12,
        );
    }
    let pi2_6 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
    for k in 1..=9 {
        let r = 0.1 * k as f64;
        let reflect = bohr_lab::kernel::dilog(r).unwrap()
            + bohr_lab::kernel::dilog(1.0 - r).unwrap()
            + r.ln() * (-r).ln_1p();
        check("dilog reflection", (reflect - pi2_6).abs(), 1e-10);
        let alt = bohr_lab::kernel::alt_log_tail(r).unwrap();
        let via_log = bohr_lab::kernel::log_tail(1, r).unwrap()
            - bohr_lab::kernel::log_tail(1, r * r).unwrap()
            - r;
        check("alternating tail", (alt - via_log).abs(), 1e-10);
        for &alpha in &alpha_grid() {
            let lhs = model::jacobian_sqrt_bound(r, alpha).unwrap();
            let rhs = (1.0 + r - 2.0 * alpha.value() * r) / (1.0 - r);
            check("jacobian bound forms", (lhs - rhs).abs(), 1e-10);
        }
    }
    lines.push(format!("identities: {count} checks"));
    SuiteOutcome { passed, lines }
}

fn suite_monotonicity() -> SuiteOutcome {
    let mut passed = true;
    let mut lines = Vec::new();
    let mut count = 0;
    for kind in representative_kinds() {
        let mut last = 0.0f64;
        for &alpha in &alpha_grid() {
            let eq = match functionals::radius_equation(kind, Variant::Proof, alpha) {
                Ok(eq) => eq,
                Err(e) => {
                    passed = false;
                    lines.push(format!("  {}: error: {e}", kind.label()));
                    continue;
                }
            };
            match solver::solve_radius(&eq, SolverConfig::default()) {
                Ok(res) => {
                    if !(res.root > last && res.root < 1.0) {
                        passed = false;
                        lines.push(format!(
                            "  {} alpha={}: root {} not above previous {}",
                            kind.label(),
                            alpha.value(),
                            res.root,
                            last
                        ));
                    }
                    last = res.root;
                    count += 1;
                }
                Err(e) => {
                    passed = false;
                    lines.push(format!("  {}: error: {e}", kind.label()));
                }
            }
        }
    }
    lines.push(format!(
        "monotonicity: {count} roots strictly increasing in alpha across {} families",
        representative_kinds().len()
    ));
    SuiteOutcome { passed, lines }
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, Failure> {
    let suites: Vec<SuiteName> = if args.all {
        vec![
            SuiteName::Tables,
            SuiteName::Sharpness,
            SuiteName::Oracle,
            SuiteName::Identities,
            SuiteName::Monotonicity,
        ]
    } else if !args.suite.is_empty() {
        args.suite.clone()
    } else {
        return Err(Failure::usage("choose --all or at least one --suite"));
    };
    let mut all_passed = true;
    for suite in suites {
        let outcome = match suite {
            SuiteName::Tables => suite_tables(),
            SuiteName::Sharpness => suite_sharpness(),
            SuiteName::Oracle => suite_oracle(args.grid),
            SuiteName::Identities => suite_identities(),
            SuiteName::Monotonicity => suite_monotonicity(),
        };
        for line in &outcome.lines {
            println!("{line}");
        }
        all_passed &= outcome.passed;
    }
    if all_passed {
        println!("check: PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("check: FAIL");
        Ok(ExitCode::from(1))
    }
}
