//! `rfh` command line.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rfh_core::hermite::{gauss_hermite_rule, HermiteBasis, WeightConvention, MAX_GAUSS_HERMITE_ORDER};
use rfh_core::integral::{exact_integral_sampler, riemann_stieltjes, BoundRow, TestFunction, DEFAULT_HALF_WIDTH, DEFAULT_STEP};
use rfh_core::rfh::{
    coefficients, projection_error_curve, random_phases, randomized_rft, EigenMode, RfhExpansion, SeriesScaling, RULE_MARGIN,
};
use rfh_core::rng::{derive_seed, rng_from_seed};
use rfh_core::stable::{simulate_path, uniform_grid};
use rfh_core::stats::ks_two_sample;
use rfh_core::verify::{
    bound_check_experiment, cauchy_truncation_experiment, mean_from_gaps, run_trials, series_convergence_experiment,
    ExperimentConfig, DEFAULT_SEED,
};
use rfh_core::Error;

use crate::exec::{Workers, WORKERS_ENV};
use crate::report::{self, Table};

/// Significance level below which `integrate` reports a mismatch with the
/// exact law.
pub const KS_LEVEL: f64 = 0.01;

#[derive(Debug, Parser)]
#[command(name = "rfh", version, about = "Random Fourier-Hermite series driven by symmetric stable processes")]
pub struct Cli {
    /// Master seed; every trial draws from a sub-seed derived from it.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Emit JSON instead of CSV.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for Monte Carlo trials.
    #[arg(long, global = true, env = WORKERS_ENV, default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate one process path and dump its increments.
    Path(PathArgs),
    /// Compare Riemann-Stieltjes sums with the exact law of the integral.
    Integrate(IntegrateArgs),
    /// Fourier-Hermite coefficients c_n.
    Coeffs(CoeffsArgs),
    /// c_n, A_n and eigenvalues for one path, optionally with partial-sum traces.
    Expansion(ExpansionArgs),
    /// E|Y_T − Y_T′| for consecutive truncations on shared paths.
    Theorem34(Theorem34Args),
    /// Convergence of the random series to the stochastic integral.
    Theorem35(Theorem35Args),
    /// Moment and tail bounds against Monte Carlo estimates.
    Bounds(BoundsArgs),
    /// Weighted projection error curve.
    Projection(ProjectionArgs),
    /// Randomized transform, its round trip and energies.
    Rft(RftArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EigenArg {
    None,
    Paper,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScalingArg {
    Orthonormal,
    Literal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConventionArg {
    /// φ_n = H_n e^{−t²} / ‖H_n‖
    Paper,
    /// φ_n = H_n e^{−t²/2} / ‖H_n‖
    Half,
}

impl From<ScalingArg> for SeriesScaling {
    fn from(s: ScalingArg) -> Self {
        match s {
            ScalingArg::Orthonormal => SeriesScaling::Orthonormal,
            ScalingArg::Literal => SeriesScaling::Literal,
        }
    }
}

impl From<ConventionArg> for WeightConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Paper => WeightConvention::PaperLiteral,
            ConventionArg::Half => WeightConvention::HalfWeight,
        }
    }
}

fn eigen_mode(arg: EigenArg, seed: u64) -> EigenMode {
    match arg {
        EigenArg::None => EigenMode::None,
        EigenArg::Paper => EigenMode::Paper,
        EigenArg::Random => EigenMode::Randomized { seed },
    }
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Half-width T of the simulation window [−T, T].
    #[arg(long = "half-width", visible_alias = "T", default_value_t = DEFAULT_HALF_WIDTH)]
    pub half_width: f64,
    /// Grid step h.
    #[arg(long, default_value_t = DEFAULT_STEP)]
    pub step: f64,
}

#[derive(Debug, Args)]
pub struct PathArgs {
    #[arg(long, default_value_t = 2.0)]
    pub alpha: f64,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    /// Test function name.
    #[arg(long = "f", default_value = "gaussian")]
    pub f: String,
    #[arg(long, default_value_t = 2.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 5000)]
    pub trials: usize,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long = "f", default_value = "gaussian")]
    pub f: String,
    #[arg(long, default_value_t = 32)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
    pub convention: ConventionArg,
}

#[derive(Debug, Args)]
pub struct ExpansionArgs {
    #[arg(long = "f", default_value = "gaussian")]
    pub f: String,
    #[arg(long, default_value_t = 32)]
    pub order: usize,
    #[arg(long, default_value_t = 2.0)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value_t = EigenArg::None)]
    pub eigen: EigenArg,
    #[arg(long, value_enum, default_value_t = ScalingArg::Orthonormal)]
    pub scaling: ScalingArg,
    #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
    pub convention: ConventionArg,
    /// Evaluation points for partial-sum traces.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-2,-1,-0.5,0,0.5,1,2")]
    pub y: Vec<f64>,
    /// Also write partial-sum traces `n,y,S_n` to this file.
    #[arg(long)]
    pub traces: Option<PathBuf>,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct Theorem34Args {
    #[arg(long = "f", default_value = "gaussian")]
    pub f: String,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6")]
    pub truncations: Vec<f64>,
    #[arg(long, default_value_t = 2.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 2000)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_STEP)]
    pub step: f64,
}

#[derive(Debug, Args)]
pub struct Theorem35Args {
    #[arg(long = "f", default_value = "gaussian")]
    pub f: String,
    #[arg(long, value_delimiter = ',', default_value = "0,2,4,8,16,32")]
    pub orders: Vec<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-2,-1,-0.5,0,0.5,1,2")]
    pub y: Vec<f64>,
    #[arg(long, default_value_t = 2000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long = "reference-order", default_value_t = 128)]
    pub reference_order: usize,
    #[arg(long, value_enum, default_value_t = EigenArg::None)]
    pub eigen: EigenArg,
    #[arg(long, value_enum, default_value_t = ScalingArg::Orthonormal)]
    pub scaling: ScalingArg,
    #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
    pub convention: ConventionArg,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long = "f", default_value = "gaussian")]
    pub f: String,
    #[arg(long, default_value_t = 2.0)]
    pub alpha: f64,
    /// Tail thresholds ε.
    #[arg(long, value_delimiter = ',', default_value = "0.5,1,2,3")]
    pub epsilon: Vec<f64>,
    /// ε′ in the tail bound (defaults to ε).
    #[arg(long = "eps-prime")]
    pub eps_prime: Option<f64>,
    /// Constant C of the tail bound.
    #[arg(long = "C", visible_alias = "c", default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,
    /// Only evaluate the bound formulas; no simulation.
    #[arg(long = "formula-only")]
    pub formula_only: bool,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct ProjectionArgs {
    #[arg(long = "f", default_value = "gaussian")]
    pub f: String,
    #[arg(long, default_value_t = 64)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct RftArgs {
    #[arg(long = "f", default_value = "gaussian")]
    pub f: String,
    #[arg(long, default_value_t = 32)]
    pub order: usize,
    /// Sample points.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-3,-2,-1,-0.5,0,0.5,1,2,3")]
    pub t: Vec<f64>,
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit 2.
    Usage(String),
    /// Runtime failure: exit 1.
    Runtime(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Argument(_) | Error::Capacity { .. } | Error::Range { .. } | Error::InsufficientSpan { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Runtime(other.to_string()),
        }
    }
}

/// Rendered report plus the rows that violated an assertion, if any.
pub struct Outcome {
    pub table: Table,
    pub failures: Vec<String>,
}

impl Outcome {
    fn ok(table: Table) -> Self {
        Self {
            table,
            failures: Vec::new(),
        }
    }
}

fn test_function(name: &str) -> Result<TestFunction, CliError> {
    TestFunction::by_name(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown test function '{name}' (try gaussian, t_gaussian, cauchy_kernel, box01, hermite3_gaussian, zero, hermiteN)"
        ))
    })
}

fn rule_for(order: usize) -> Result<rfh_core::hermite::QuadratureRule, CliError> {
    let m = (order + RULE_MARGIN).clamp(64, MAX_GAUSS_HERMITE_ORDER);
    Ok(gauss_hermite_rule(m)?)
}

/// Runs the parsed command and returns its report.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let workers = Workers::new(cli.workers).map_err(|e| CliError::Runtime(e.to_string()))?;
    let seed = cli.seed;
    match &cli.command {
        Command::Path(a) => {
            let grid = uniform_grid(a.grid.half_width, a.grid.step)?;
            let path = simulate_path(grid, a.alpha, seed)?;
            Ok(Outcome::ok(report::path_table(&path, a.grid.half_width, a.grid.step)))
        }
        Command::Integrate(a) => integrate(&workers, a, seed),
        Command::Coeffs(a) => {
            let f = test_function(&a.f)?;
            let basis = HermiteBasis::new(a.order, a.convention.into());
            let c = coefficients(&f, a.order, &basis, &rule_for(a.order)?)?;
            let mut t = report::coeffs_table(&c);
            t.meta("f", &a.f).meta("order", a.order).meta("convention", format!("{:?}", a.convention).to_lowercase());
            Ok(Outcome::ok(t))
        }
        Command::Expansion(a) => {
            let f = test_function(&a.f)?;
            let basis = Arc::new(HermiteBasis::new(a.order, a.convention.into()));
            let path = simulate_path(uniform_grid(a.grid.half_width, a.grid.step)?, a.alpha, seed)?;
            let e = RfhExpansion::build(&f, basis, &rule_for(a.order)?, a.order, &path, eigen_mode(a.eigen, seed), a.scaling.into())?;
            if let Some(p) = &a.traces {
                let mut tr = report::traces_table(&e, &a.y)?;
                tr.meta("f", &a.f).meta_num("alpha", a.alpha);
                write_file(p, &tr.render(cli.json))?;
            }
            let mut t = report::expansion_table(&e);
            t.meta("f", &a.f)
                .meta_num("alpha", a.alpha)
                .meta_num("T", a.grid.half_width)
                .meta_num("h", a.grid.step);
            Ok(Outcome::ok(t))
        }
        Command::Theorem34(a) => {
            let f = test_function(&a.f)?;
            let cfg = ExperimentConfig {
                trials: a.trials,
                alpha: a.alpha,
                step: a.step,
                master_seed: seed,
                ..Default::default()
            };
            let r = cauchy_truncation_experiment(&workers, &f, &a.truncations, &cfg)?;
            Ok(Outcome::ok(report::cauchy_table(&r)))
        }
        Command::Theorem35(a) => {
            let f = test_function(&a.f)?;
            let cfg = ExperimentConfig {
                trials: a.trials,
                epsilon: a.epsilon,
                orders: a.orders.clone(),
                y_grid: a.y.clone(),
                half_width: a.grid.half_width,
                step: a.grid.step,
                master_seed: seed,
                reference_order: a.reference_order,
                scaling: a.scaling.into(),
                convention: a.convention.into(),
                ..Default::default()
            };
            let r = series_convergence_experiment(&workers, &f, &cfg, eigen_mode(a.eigen, seed))?;
            Ok(Outcome::ok(report::convergence_table(&r)))
        }
        Command::Bounds(a) => bounds(&workers, a, seed),
        Command::Projection(a) => {
            let f = test_function(&a.f)?;
            let basis = HermiteBasis::new(a.order, WeightConvention::PaperLiteral);
            let rule = gauss_hermite_rule((2 * a.order + RULE_MARGIN).clamp(64, MAX_GAUSS_HERMITE_ORDER))?;
            let curve = projection_error_curve(&f, a.order, &basis, &rule)?;
            let mut t = report::projection_table(&curve);
            t.meta("f", &a.f).meta("order", a.order).meta("rule_order", rule.order());
            Ok(Outcome::ok(t))
        }
        Command::Rft(a) => {
            let f = test_function(&a.f)?;
            let basis = HermiteBasis::new(a.order, WeightConvention::PaperLiteral);
            let rft = randomized_rft(&f, a.order, &random_phases(seed, a.order), &basis, &rule_for(a.order)?)?;
            let mut t = report::rft_table(&rft, &a.t)?;
            t.meta("f", &a.f).meta("order", a.order).meta("seed", seed);
            Ok(Outcome::ok(t))
        }
    }
}

fn integrate(workers: &Workers, a: &IntegrateArgs, seed: u64) -> Result<Outcome, CliError> {
    let f = test_function(&a.f)?;
    let grid: Arc<[f64]> = uniform_grid(a.grid.half_width, a.grid.step)?.into();
    let sums = run_trials(workers, a.trials, seed, |s| {
        riemann_stieltjes(&f, &simulate_path(Arc::clone(&grid), a.alpha, s)?)
    })?;
    // the exact draws use an independent family of sub-seeds
    let exact_master = derive_seed(seed, u64::MAX);
    let exact = run_trials(workers, a.trials, exact_master, |s| exact_integral_sampler(&f, a.alpha, &mut rng_from_seed(s)))?;
    let ks = ks_two_sample(&sums, &exact);
    let abs = |v: &[f64]| v.iter().map(|x| x.abs()).collect::<Vec<_>>();
    let mut t = Table::new(&["quantity", "value"]);
    t.meta("f", &a.f)
        .meta_num("alpha", a.alpha)
        .meta_num("T", a.grid.half_width)
        .meta_num("h", a.grid.step)
        .meta("trials", a.trials)
        .meta("seed", seed);
    t.push(vec!["riemann_stieltjes_mean_abs".into(), mean_from_gaps(&abs(&sums)).mean.into()]);
    t.push(vec!["exact_mean_abs".into(), mean_from_gaps(&abs(&exact)).mean.into()]);
    t.push(vec!["ks_statistic".into(), ks.statistic.into()]);
    t.push(vec!["ks_p_value".into(), ks.p_value.into()]);
    t.push(vec!["pass".into(), (ks.p_value > KS_LEVEL).into()]);
    let failures = if ks.p_value > KS_LEVEL {
        Vec::new()
    } else {
        vec![format!("KS p-value {} <= {KS_LEVEL}", ks.p_value)]
    };
    Ok(Outcome { table: t, failures })
}

fn bounds(workers: &Workers, a: &BoundsArgs, seed: u64) -> Result<Outcome, CliError> {
    let f = test_function(&a.f)?;
    let t = a.grid.half_width;
    if a.formula_only {
        let mut rows = vec![BoundRow::mean_abs(&f, a.alpha, -t, t)?];
        for &eps in &a.epsilon {
            let ep = a.eps_prime.unwrap_or(eps);
            rows.push(if a.alpha == 2.0 {
                BoundRow::real_line_tail(&f, ep, a.c)?
            } else {
                BoundRow::finite_tail(&f, a.alpha, -t, t, ep, a.c)?
            });
        }
        return Ok(Outcome::ok(report::bound_rows_table(&rows)));
    }
    let cfg = ExperimentConfig {
        trials: a.trials,
        eps_prime: a.eps_prime,
        c: a.c,
        half_width: t,
        step: a.grid.step,
        alpha: a.alpha,
        master_seed: seed,
        ..Default::default()
    };
    let r = bound_check_experiment(workers, &f, a.alpha, &cfg, &a.epsilon)?;
    let failures = r
        .rows
        .iter()
        .filter(|row| !row.pass)
        .map(|row| {
            format!(
                "{} eps={:?}: upper {} > bound {}",
                row.quantity, row.epsilon, row.upper, row.bound
            )
        })
        .collect();
    Ok(Outcome {
        table: report::bound_check_table(&r),
        failures,
    })
}

fn write_file(path: &PathBuf, content: &str) -> Result<(), CliError> {
    fs::write(path, content).map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
}

/// Parses `args`, runs the command and returns the process exit code:
/// 0 on success, 1 when the experiment fails or an assertion is violated,
/// 2 on bad arguments.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return e.exit_code();
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}\n\nFor more information, try '--help'.");
            return 2;
        }
        Err(CliError::Runtime(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 1;
        }
    };
    let text = outcome.table.render(cli.json);
    match &cli.out {
        Some(p) => {
            if let Err(CliError::Runtime(msg) | CliError::Usage(msg)) = write_file(p, &text) {
                let _ = writeln!(stderr, "error: {msg}");
                return 1;
            }
        }
        None => {
            if let Err(e) = stdout.write_all(text.as_bytes()) {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return 1;
            }
        }
    }
    if outcome.failures.is_empty() {
        0
    } else {
        for f in &outcome.failures {
            let _ = writeln!(stderr, "failed: {f}");
        }
        1
    }
}
