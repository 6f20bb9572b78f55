//! The `heaviforge` command line.
//!
//! Exit codes: 0 on success, 1 when a verification finds a mismatch (or a
//! computation fails), 2 on usage or parse errors.

pub mod fnexpr;
pub mod render;
pub mod setexpr;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analytic::{snap, Backend, Function};
use crate::piecewise::{compose, compose_with, Composed};
use crate::primes::{self, plan_precision, PrecisionPlan, PrimeChain, DEFAULT_ROUND_MARGIN, N_MAX_LIMIT};
use crate::quadrature::CutoffParams;
use crate::xiset::{eval_chain, grandi_demo, membership, ChainStrategy, MembershipMode};
use render::{short, sig17, svg_plot, Csv};
use setexpr::SetInput;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_T: f64 = 100.0;
const DEFAULT_U: f64 = 128.0;
const DEFAULT_TOL: f64 = 1e-9;
const DEFAULT_SNAP_ATOL: f64 = 1e-6;
const MAX_GRID_ROWS: usize = 1_000_000;

/// A parse failure with a 1-based column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(column: usize, message: impl Into<String>) -> Self {
        Self {
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Parser)]
#[command(name = "heaviforge", version, about = "Integral forms of step, indicator and prime-counting functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Half-line cutoff T replacing the infinite upper limit.
    #[arg(long = "T", global = true, value_name = "REAL")]
    half_line: Option<f64>,

    /// Indicator scale U = tan(π/2 − ε).
    #[arg(long = "U", global = true, value_name = "REAL", conflicts_with = "eps")]
    scale: Option<f64>,

    /// Tangent-interval margin ε; integrals stop at π/2 − ε.
    #[arg(long, global = true, value_name = "REAL")]
    eps: Option<f64>,

    /// Absolute quadrature tolerance.
    #[arg(long, global = true, value_name = "REAL", default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Absolute tolerance for snapping to multiples of ½.
    #[arg(long = "snap-atol", global = true, value_name = "REAL", default_value_t = DEFAULT_SNAP_ATOL)]
    snap_atol: f64,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Backend used for printed values.
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::ClosedForm)]
    backend: BackendArg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    #[command(allow_negative_numbers = true)]
    Eval { function: String, x: f64 },
    /// Tabulate a function on a grid as CSV.
    #[command(allow_negative_numbers = true)]
    Table {
        function: String,
        start: f64,
        stop: f64,
        step: f64,
    },
    /// Plot a function on a grid (SVG by default).
    #[command(allow_negative_numbers = true)]
    Plot {
        function: String,
        start: f64,
        stop: f64,
        step: f64,
    },
    /// Compare the analytic prime chain with exact oracles for n ≤ n_max.
    Primes { n_max: u64 },
    /// Evaluate a ξ-set expression and report membership.
    Xiset { expr: String },
    /// Partial sums and Cesàro mean of 1 − 1 + 1 − ….
    Grandi { k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    ClosedForm,
    Quadrature,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::ClosedForm => Backend::ClosedForm,
            BackendArg::Quadrature => Backend::Quadrature,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcommandKind {
    Eval,
    Table,
    Plot,
    Primes,
    Xiset,
    Grandi,
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub subcommand: SubcommandKind,
    pub cutoffs: CutoffParams<f64>,
    /// Whether `--U` or `--eps` was given explicitly.
    pub explicit_scale: bool,
    pub tol: f64,
    pub snap_atol: f64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub backend: Backend,
}

impl CliConfig {
    fn from_cli(cli: &Cli) -> Result<Self, String> {
        let subcommand = match cli.command {
            Command::Eval { .. } => SubcommandKind::Eval,
            Command::Table { .. } => SubcommandKind::Table,
            Command::Plot { .. } => SubcommandKind::Plot,
            Command::Primes { .. } => SubcommandKind::Primes,
            Command::Xiset { .. } => SubcommandKind::Xiset,
            Command::Grandi { .. } => SubcommandKind::Grandi,
        };
        let t = cli.half_line.unwrap_or(DEFAULT_T);
        let cutoffs = match (cli.scale, cli.eps) {
            (_, Some(eps)) => CutoffParams::new(t, eps),
            (u, None) => CutoffParams::with_scale(t, u.unwrap_or(DEFAULT_U)),
        }
        .map_err(|e| e.to_string())?;
        if !(cli.tol > 0.0 && cli.tol.is_finite()) {
            return Err(format!("--tol must be positive, got {}", cli.tol));
        }
        if !(cli.snap_atol >= 0.0 && cli.snap_atol.is_finite()) {
            return Err(format!("--snap-atol must be non-negative, got {}", cli.snap_atol));
        }
        let format = match (cli.format, subcommand) {
            (Some(Format::Svg), SubcommandKind::Plot) | (None, SubcommandKind::Plot) => Format::Svg,
            (Some(Format::Svg), _) => return Err("--format svg is only valid for plot".into()),
            (_, _) => Format::Csv,
        };
        Ok(Self {
            subcommand,
            cutoffs,
            explicit_scale: cli.scale.is_some() || cli.eps.is_some(),
            tol: cli.tol,
            snap_atol: cli.snap_atol,
            output_path: cli.out.clone(),
            format,
            backend: cli.backend.into(),
        })
    }
}

/// What a subcommand failed with, and the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Compute(_) => EXIT_MISMATCH,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Compute(m) => m,
        }
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

/// A function argument: a named function or a piecewise literal.
enum Target {
    Named(Function),
    Piecewise(Box<Composed<f64>>),
}

impl Target {
    fn parse(src: &str, config: &CliConfig) -> Result<Self, Failure> {
        if src.trim_start().starts_with("pw(") {
            let spec = fnexpr::parse_piecewise(src).map_err(|e| Failure::Usage(e.to_string()))?;
            let composed = if config.explicit_scale {
                compose_with(spec, config.cutoffs)
            } else {
                let default = compose(spec);
                let params = default
                    .params()
                    .with_half_line(config.cutoffs.half_line())
                    .map_err(|e| Failure::Usage(e.to_string()))?;
                compose_with(default.spec().clone(), params)
            };
            return Ok(Target::Piecewise(Box::new(composed)));
        }
        src.parse::<Function>()
            .map(Target::Named)
            .map_err(|e| Failure::Usage(e.to_string()))
    }

    fn params<'a>(&'a self, config: &'a CliConfig) -> &'a CutoffParams<f64> {
        match self {
            Target::Named(_) => &config.cutoffs,
            Target::Piecewise(c) => c.params(),
        }
    }

    fn eval(&self, x: f64, config: &CliConfig, backend: Backend) -> Result<f64, Failure> {
        Ok(match self {
            Target::Named(f) => f.eval(x, &config.cutoffs, backend, config.tol)?,
            Target::Piecewise(c) => c.eval_with(x, backend, config.tol)?,
        })
    }

    fn label(&self, src: &str) -> String {
        match self {
            Target::Named(f) => f.name().to_string(),
            Target::Piecewise(_) => src.trim().to_string(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let config = match CliConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };

    let outcome = match &cli.command {
        Command::Eval { function, x } => cmd_eval(function, *x, &config),
        Command::Table {
            function,
            start,
            stop,
            step,
        } => cmd_table(function, *start, *stop, *step, &config),
        Command::Plot {
            function,
            start,
            stop,
            step,
        } => cmd_plot(function, *start, *stop, *step, &config),
        Command::Primes { n_max } => cmd_primes(*n_max, cli.scale, &config),
        Command::Xiset { expr } => cmd_xiset(expr),
        Command::Grandi { k } => cmd_grandi(*k),
    };

    match outcome {
        Ok(report) => {
            if let Err(e) = emit(&report.body, &config, stdout) {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            if let Some(summary) = &report.summary {
                let _ = writeln!(stderr, "{summary}");
            }
            report.code
        }
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message());
            failure.code()
        }
    }
}

fn emit(body: &str, config: &CliConfig, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &config.output_path {
        Some(path) => std::fs::write(path, body),
        None => stdout.write_all(body.as_bytes()),
    }
}

struct Report {
    body: String,
    summary: Option<String>,
    code: i32,
}

impl Report {
    fn ok(body: String) -> Self {
        Self {
            body,
            summary: None,
            code: EXIT_OK,
        }
    }
}

fn cmd_eval(function: &str, x: f64, config: &CliConfig) -> Result<Report, Failure> {
    if !x.is_finite() {
        return Err(Failure::Usage(format!("x must be finite, got {x}")));
    }
    let target = Target::parse(function, config)?;
    let raw = target.eval(x, config, config.backend)?;
    let params = target.params(config);
    let backend = match config.backend {
        Backend::ClosedForm => "closed-form",
        Backend::Quadrature => "quadrature",
    };
    let mut body = String::new();
    body.push_str(&format!("function: {}\n", target.label(function)));
    body.push_str(&format!("x: {}\n", short(x)));
    body.push_str(&format!("backend: {backend}\n"));
    body.push_str(&format!("T: {}\n", short(params.half_line())));
    body.push_str(&format!("U: {}\n", short(params.indicator_scale())));
    body.push_str(&format!("eps: {}\n", sig17(params.tan_margin())));
    body.push_str(&format!("tol: {}\n", short(config.tol)));
    body.push_str(&format!("raw: {}\n", sig17(raw)));
    body.push_str(&format!("snapped: {}\n", short(snap(raw, config.snap_atol))));
    Ok(Report::ok(body))
}

fn grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
        return Err(Failure::Usage("grid bounds and step must be finite".into()));
    }
    if start > stop {
        return Err(Failure::Usage(format!("start {start} exceeds stop {stop}")));
    }
    if step <= 0.0 {
        return Err(Failure::Usage(format!("step must be positive, got {step}")));
    }
    let span = ((stop - start) / step + 1e-9).floor();
    if span >= MAX_GRID_ROWS as f64 {
        return Err(Failure::Usage(format!("grid exceeds {MAX_GRID_ROWS} rows")));
    }
    Ok((0..=span as usize)
        .map(|i| {
            let x = start + i as f64 * step;
            format!("{x:.14e}").parse().unwrap_or(x)
        })
        .collect())
}

fn table_csv(target: &Target, xs: &[f64], config: &CliConfig) -> Result<String, Failure> {
    let mut csv = Csv::new(&["x", "raw", "snapped", "backend_delta"]);
    for &x in xs {
        let raw = target.eval(x, config, config.backend)?;
        let closed = target.eval(x, config, Backend::ClosedForm)?;
        let quad = target.eval(x, config, Backend::Quadrature)?;
        csv.row([
            short(x),
            sig17(raw),
            short(snap(raw, config.snap_atol)),
            format!("{:.3e}", (quad - closed).abs()),
        ]);
    }
    Ok(csv.finish())
}

fn cmd_table(function: &str, start: f64, stop: f64, step: f64, config: &CliConfig) -> Result<Report, Failure> {
    let xs = grid(start, stop, step)?;
    let target = Target::parse(function, config)?;
    Ok(Report::ok(table_csv(&target, &xs, config)?))
}

fn cmd_plot(function: &str, start: f64, stop: f64, step: f64, config: &CliConfig) -> Result<Report, Failure> {
    let xs = grid(start, stop, step)?;
    let target = Target::parse(function, config)?;
    let body = match config.format {
        Format::Csv => table_csv(&target, &xs, config)?,
        Format::Svg => {
            let points = xs
                .iter()
                .map(|&x| Ok((x, target.eval(x, config, config.backend)?)))
                .collect::<Result<Vec<_>, Failure>>()?;
            let p = target.params(config);
            let title = format!(
                "{}  T={} U={}",
                target.label(function),
                short(p.half_line()),
                short(p.indicator_scale())
            );
            svg_plot(&title, &points)
        }
    };
    Ok(Report::ok(body))
}

fn cmd_primes(n_max: u64, scale: Option<f64>, _config: &CliConfig) -> Result<Report, Failure> {
    if !(1..=N_MAX_LIMIT).contains(&n_max) {
        return Err(Failure::Usage(format!("n_max must lie in 1..={N_MAX_LIMIT}, got {n_max}")));
    }
    let plan: PrecisionPlan<f64> = match scale {
        Some(u) => PrecisionPlan::with_scale(n_max, u, DEFAULT_ROUND_MARGIN),
        None => plan_precision(n_max, DEFAULT_ROUND_MARGIN),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    let chain = PrimeChain::new(plan);
    let is_prime = primes::sieve(n_max as usize);

    let mut csv = Csv::new(&[
        "n",
        "sigma0_analytic",
        "sigma0_exact",
        "fes_snapped",
        "pi_analytic",
        "pi_sieve",
        "match",
    ]);
    let mut mismatches = 0usize;
    let mut pi_exact = 0u64;
    for n in 1..=n_max {
        if is_prime[n as usize] {
            pi_exact += 1;
        }
        let sigma = chain.sigma0(n)?;
        let exact = primes::sigma0_oracle(n);
        let fes = plan.snap(chain.fes(n)?);
        let pi = plan.snap(chain.pi(n as f64)?);
        let ok = plan.snap(sigma) == exact as f64
            && fes == if is_prime[n as usize] { 1.0 } else { 0.0 }
            && pi == pi_exact as f64;
        if !ok {
            mismatches += 1;
        }
        csv.row([
            n.to_string(),
            sig17(sigma),
            exact.to_string(),
            short(fes),
            short(pi),
            pi_exact.to_string(),
            ok.to_string(),
        ]);
    }
    let summary = format!(
        "n_max={n_max} U={} round_margin={} invariant={} mismatches={mismatches}",
        short(plan.indicator_scale()),
        short(plan.round_margin()),
        plan.satisfies_invariant(),
    );
    Ok(Report {
        body: csv.finish(),
        summary: Some(summary),
        code: if mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn cmd_xiset(expr: &str) -> Result<Report, Failure> {
    let parsed = setexpr::parse(expr).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut body = String::new();
    match parsed {
        SetInput::Expr(x) => {
            body.push_str(&format!("components: {x}\n"));
            body.push_str(&format!("xi_class: {}\n", x.xi_class()));
            body.push_str("atom,mode,indices\n");
            for atom in x.atoms() {
                let report = membership(&atom, &x);
                let mode = match report.mode {
                    MembershipMode::All => "all",
                    MembershipMode::Some => "some",
                    MembershipMode::None => "none",
                };
                let indices: Vec<String> = report.index_set.iter().map(|i| i.to_string()).collect();
                body.push_str(&format!("{atom},{mode},{}\n", indices.join(" ")));
            }
        }
        SetInput::Chain(chain) => {
            let outcome = eval_chain(&chain);
            let strategy = match chain.strategy() {
                ChainStrategy::Aligned => "aligned",
                ChainStrategy::Shifted => "shifted",
            };
            body.push_str(&format!("chain: {}\n", chain.bracketed()));
            body.push_str(&format!("strategy: {strategy}\n"));
            body.push_str(&format!("value: {}\n", outcome.value));
            if let Some(tail) = outcome.dangling {
                body.push_str(&format!("dangling: {tail} (trailing operand left unconsumed)\n"));
            }
        }
    }
    Ok(Report::ok(body))
}

fn cmd_grandi(k: usize) -> Result<Report, Failure> {
    let demo = grandi_demo(k).map_err(|e| Failure::Usage(e.to_string()))?;
    let sums: Vec<String> = demo.partial_sums.iter().map(|s| s.to_string()).collect();
    let mean = demo.cesaro_mean;
    let body = format!(
        "k: {k}\npartial_sums: {}\ncesaro_mean: {mean}\ncesaro_mean_decimal: {}\n",
        sums.join(","),
        sig17(*mean.numer() as f64 / *mean.denom() as f64)
    );
    Ok(Report::ok(body))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("heaviforge").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn field<'a>(out: &'a str, key: &str) -> &'a str {
        out.lines()
            .find_map(|l| l.strip_prefix(&format!("{key}: ")))
            .unwrap_or_else(|| panic!("missing {key} in {out}"))
    }

    #[test]
    fn eval_examples() {
        let (code, out, _) = run_args(&["eval", "H2", "0"]);
        assert_eq!(code, 0);
        assert_eq!(field(&out, "raw").parse::<f64>().unwrap(), 0.5);
        assert_eq!(field(&out, "snapped"), "0.5");
        let (_, out, _) = run_args(&["eval", "rt", "0"]);
        assert_eq!(field(&out, "raw").parse::<f64>().unwrap(), 1.0);
        let (_, out, _) = run_args(&["eval", "delta", "0", "--T", "100"]);
        assert_eq!(field(&out, "raw").parse::<f64>().unwrap(), 25.0);
        assert_eq!(field(&out, "T"), "100");
        assert_eq!(field(&out, "U"), "128");
    }

    #[test]
    fn eval_quadrature_backend() {
        let (code, out, _) = run_args(&["eval", "H1", "-0.5", "--backend", "quadrature"]);
        assert_eq!(code, 0);
        assert!(field(&out, "raw").parse::<f64>().unwrap().abs() < 1e-8);
        assert_eq!(field(&out, "snapped"), "0");
    }

    #[test]
    fn eval_usage_errors() {
        assert_eq!(run_args(&["eval", "nope", "0"]).0, 2);
        assert_eq!(run_args(&["eval", "H1", "abc"]).0, 2);
        assert_eq!(run_args(&["eval", "H1", "0", "--U", "0.5"]).0, 2);
        assert_eq!(run_args(&["eval", "H1", "0", "--U", "10", "--eps", "0.1"]).0, 2);
        assert_eq!(run_args(&["eval", "H1", "0", "--tol", "0"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
    }

    #[test]
    fn eval_piecewise_literal() {
        let (code, out, _) = run_args(&["eval", "pw(x^2; 0; x+3; 1; sin(x))", "0.5"]);
        assert_eq!(code, 0);
        assert!((field(&out, "raw").parse::<f64>().unwrap() - 3.5).abs() < 1e-12);
        let (code, _, err) = run_args(&["eval", "pw(x^2; 0; x+)", "0.5"]);
        assert_eq!(code, 2);
        assert!(err.contains("column"));
    }

    #[test]
    fn table_examples() {
        let (code, out, _) = run_args(&["table", "H1", "-1", "1", "1"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "x,raw,snapped,backend_delta");
        let snapped: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(2).unwrap()).collect();
        assert_eq!(snapped, vec!["0", "1", "1"]);
        let (_, out, _) = run_args(&["table", "f", "0.5", "0.5", "1"]);
        assert_eq!(out.lines().count(), 2);
        assert_eq!(run_args(&["table", "f", "1", "0", "0.5"]).0, 2);
        assert_eq!(run_args(&["table", "f", "0", "1", "0"]).0, 2);
        assert_eq!(run_args(&["table", "f", "0", "1", "0.5", "--format", "svg"]).0, 2);
    }

    #[test]
    fn table_f_is_antisymmetric() {
        let (_, out, _) = run_args(&["table", "f", "-2", "2", "0.5"]);
        let raw: Vec<f64> = out.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
        assert_eq!(raw.len(), 9);
        for i in 0..raw.len() {
            assert_eq!(raw[i], -raw[raw.len() - 1 - i]);
        }
    }

    #[test]
    fn plot_writes_svg_to_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("h2.svg");
        let (code, out, _) = run_args(&["plot", "H2", "-1", "1", "0.1", "--U", "10", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        let svg = std::fs::read_to_string(&path).unwrap();
        assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
        let (_, csv, _) = run_args(&["plot", "H2", "-1", "1", "0.5", "--format", "csv"]);
        assert!(csv.starts_with("x,raw,snapped,backend_delta\n"));
    }

    #[test]
    fn primes_examples() {
        let (code, out, err) = run_args(&["primes", "10"]);
        assert_eq!(code, 0, "{err}");
        let last: Vec<&str> = out.lines().last().unwrap().split(',').collect();
        assert_eq!(last[4], "4");
        assert_eq!(last[5], "4");
        assert!(err.contains("mismatches=0"));
        let (_, out, _) = run_args(&["primes", "1"]);
        let last: Vec<&str> = out.lines().last().unwrap().split(',').collect();
        assert_eq!((last[4], last[5]), ("0", "0"));
        assert_eq!(run_args(&["primes", "0"]).0, 2);
        assert_eq!(run_args(&["primes", "10001"]).0, 2);
        let (code, _, err) = run_args(&["primes", "30", "--U", "2"]);
        assert_eq!(code, 1);
        assert!(!err.contains("mismatches=0"));
    }

    #[test]
    fn xiset_examples() {
        let (code, out, _) = run_args(&["xiset", "{1}||{1,2} | {3}||0"]);
        assert_eq!(code, 0);
        assert_eq!(field(&out, "components"), "{1,3}||{1}||{1,2,3}||{1,2}");
        assert_eq!(field(&out, "xi_class"), "4");
        assert!(out.contains("\n1,all,1 2 3 4\n"));
        assert!(out.contains("\n2,some,3 4\n"));
        let (_, out, _) = run_args(&["xiset", "{1} & {1}"]);
        assert_eq!(field(&out, "components"), "{1}");
        assert_eq!(field(&out, "xi_class"), "1");
        let (_, out, _) = run_args(&["xiset", "chain {1,2} 0 6 shifted"]);
        assert_eq!(field(&out, "value"), "{1,2}");
        assert!(field(&out, "dangling").starts_with('0'));
        let (code, _, err) = run_args(&["xiset", "{1,2"]);
        assert_eq!(code, 2);
        assert!(err.contains("column 5"));
    }

    #[test]
    fn grandi_output() {
        let (code, out, _) = run_args(&["grandi", "101"]);
        assert_eq!(code, 0);
        assert_eq!(field(&out, "cesaro_mean"), "51/101");
        assert_eq!(run_args(&["grandi", "0"]).0, 2);
    }
}
