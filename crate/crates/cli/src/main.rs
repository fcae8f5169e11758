use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use prolate::geometry::{eval_psi_ball, eval_radial, RadialForm};
use prolate::linalg::gauss_jacobi;
use prolate::pswf::{lambda_eigenvalue, mu_eigenvalue, solve_pswfs, RadialFamily, RadialPswf};
use prolate::verify::{run_suite, table_check, Suite, VerificationReport};

#[derive(Parser)]
#[command(name = "prolate", version, about = "Ball prolate spheroidal wave functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues chi, lambda, mu for k = 0..=k-max.
    Solve {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        out: OutArg,
    },
    /// Sample a radial profile on an r grid or at the norms of given points.
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "plain", value_parser = parse_form)]
        form: RadialForm,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Evaluate the full ball function psi at Cartesian points.
    EvalBall {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long)]
        points: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check one of the reference tables (1..=4).
    Table {
        #[arg(long)]
        id: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[command(flatten)]
        out: OutArg,
    },
    /// Gauss–Jacobi nodes and weights for (1-x)^alpha (1+x)^beta.
    Quad {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    dim: u32,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long)]
    c: f64,
    #[arg(long, default_value_t = 0)]
    n: u32,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GridArgs {
    /// Radial grid start:step:stop (inclusive).
    #[arg(long)]
    r: Option<String>,
    /// File with one whitespace-separated Cartesian point per line.
    #[arg(long)]
    points: Option<PathBuf>,
}

#[derive(Args)]
struct OutArg {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_form(s: &str) -> Result<RadialForm, String> {
    s.parse().map_err(|e: prolate::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: prolate::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Numerical(String),
    Verification,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Usage(_) => 2,
            Failure::Numerical(_) => 3,
        }
    }
}

impl From<prolate::Error> for Failure {
    fn from(e: prolate::Error) -> Self {
        use prolate::Error::*;
        match e {
            Domain(_) | IndexOutOfRange { .. } | UnsupportedDimension(_) => Failure::Usage(e.to_string()),
            NoConvergence { .. }
            | TruncationNotConverged { .. }
            | DegenerateEndpoint { .. }
            | NonPositiveLambda { .. } => Failure::Numerical(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

/// 16 significant digits with a signed two-digit exponent.
fn fmt(x: f64) -> String {
    let s = format!("{x:.15e}");
    match s.split_once('e') {
        Some((mantissa, exp)) => {
            let e: i32 = exp.parse().expect("exponent");
            format!("{mantissa}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs())
        }
        None => s,
    }
}

fn sink(out: &OutArg) -> CliResult<Box<dyn Write>> {
    Ok(match &out.out {
        Some(path) => Box::new(io::BufWriter::new(fs::File::create(path)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn family(args: &FamilyArgs) -> CliResult<RadialFamily> {
    Ok(RadialFamily::new(args.dim, args.alpha, args.c, args.n)?)
}

fn solve_one(args: &FamilyArgs, k: usize) -> CliResult<RadialPswf> {
    Ok(solve_pswfs(&family(args)?, k)?.swap_remove(k))
}

#[derive(Serialize)]
struct SolveParams {
    d: u32,
    alpha: f64,
    c: f64,
    n: u32,
}

#[derive(Serialize)]
struct SolveRow {
    k: usize,
    chi: f64,
    lambda: Option<f64>,
    mu: Option<f64>,
    #[serde(rename = "K")]
    truncation: usize,
    coeffs: Vec<f64>,
}

#[derive(Serialize)]
struct SolveOutput {
    params: SolveParams,
    results: Vec<SolveRow>,
}

fn cmd_solve(args: &FamilyArgs, k_max: usize, format: Format, out: &OutArg) -> CliResult {
    let family = family(args)?;
    let sols = solve_pswfs(&family, k_max)?;
    let mut results = Vec::with_capacity(sols.len());
    for s in sols {
        // λ is undefined at c = 0; leave it out rather than inventing a value.
        let lambda = if family.c > 0.0 {
            Some(lambda_eigenvalue(&s)?)
        } else {
            None
        };
        results.push(SolveRow {
            k: s.params.k,
            chi: s.chi,
            lambda,
            mu: lambda.map(mu_eigenvalue),
            truncation: s.truncation,
            coeffs: s.coeffs,
        });
    }
    let mut w = sink(out)?;
    match format {
        Format::Csv => {
            writeln!(w, "k,chi,lambda,mu,K")?;
            let opt = |v: Option<f64>| v.map(fmt).unwrap_or_default();
            for r in &results {
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    r.k,
                    fmt(r.chi),
                    opt(r.lambda),
                    opt(r.mu),
                    r.truncation
                )?;
            }
        }
        Format::Json => {
            let doc = SolveOutput {
                params: SolveParams {
                    d: family.d,
                    alpha: family.alpha,
                    c: family.c,
                    n: family.n,
                },
                results,
            };
            serde_json::to_writer_pretty(&mut w, &doc).map_err(io::Error::from)?;
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn parse_grid(text: &str) -> CliResult<Vec<f64>> {
    let bad = || Failure::Usage(format!("malformed grid '{text}', expected start:step:stop"));
    let parts: Vec<f64> = text
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [a, step, b] = parts[..] else {
        return Err(bad());
    };
    if !(a.is_finite() && b.is_finite() && step > 0.0 && step.is_finite() && a <= b && a >= 0.0) {
        return Err(bad());
    }
    let count = ((b - a) / step + 1e-9).floor() as usize + 1;
    if count > 10_000_000 {
        return Err(Failure::Usage(format!("grid '{text}' has too many points")));
    }
    Ok((0..count).map(|i| a + i as f64 * step).collect())
}

fn read_points(path: &Path, d: u32) -> CliResult<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut points = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p: Vec<f64> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| Failure::Usage(format!("{}:{}: not a number", path.display(), i + 1)))?;
        if p.len() != d as usize || p.iter().any(|v| !v.is_finite()) {
            return Err(Failure::Usage(format!(
                "{}:{}: expected {d} finite coordinates",
                path.display(),
                i + 1
            )));
        }
        points.push(p);
    }
    Ok(points)
}

fn coord_header(d: u32) -> String {
    (1..=d).map(|i| format!("x{i}")).collect::<Vec<_>>().join(",")
}

fn coord_row(p: &[f64]) -> String {
    p.iter().map(|&v| fmt(v)).collect::<Vec<_>>().join(",")
}

fn cmd_eval(args: &FamilyArgs, k: usize, form: RadialForm, grid: &GridArgs, out: &OutArg) -> CliResult {
    let rs = match (&grid.r, &grid.points) {
        (Some(text), _) => parse_grid(text)?,
        (None, Some(path)) => return eval_at_points(args, k, form, &read_points(path, args.dim)?, out),
        (None, None) => return Err(Failure::Usage("one of --r or --points is required".into())),
    };
    let s = solve_one(args, k)?;
    let mut w = sink(out)?;
    writeln!(w, "r,value")?;
    for r in rs {
        writeln!(w, "{},{}", fmt(r), fmt(eval_radial(&s, r, form)))?;
    }
    w.flush()?;
    Ok(())
}

fn eval_at_points(
    args: &FamilyArgs,
    k: usize,
    form: RadialForm,
    points: &[Vec<f64>],
    out: &OutArg,
) -> CliResult {
    let s = solve_one(args, k)?;
    let mut w = sink(out)?;
    writeln!(w, "{},value", coord_header(args.dim))?;
    for p in points {
        let r = p.iter().map(|v| v * v).sum::<f64>().sqrt();
        writeln!(w, "{},{}", coord_row(p), fmt(eval_radial(&s, r, form)))?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_eval_ball(args: &FamilyArgs, k: usize, ell: usize, points: &Path, out: &OutArg) -> CliResult {
    if !(1..=3).contains(&args.dim) {
        return Err(prolate::Error::UnsupportedDimension(args.dim).into());
    }
    let points = read_points(points, args.dim)?;
    let s = solve_one(args, k)?;
    let values = points
        .iter()
        .map(|p| eval_psi_ball(&s, ell, p))
        .collect::<Result<Vec<_>, _>>()?;
    let mut w = sink(out)?;
    writeln!(w, "{},value", coord_header(args.dim))?;
    for (p, v) in points.iter().zip(values) {
        writeln!(w, "{},{}", coord_row(p), fmt(v))?;
    }
    w.flush()?;
    Ok(())
}

/// Multiplicative scale on verification tolerances from PROLATE_TOL.
fn tolerance_scale() -> CliResult<f64> {
    match std::env::var("PROLATE_TOL") {
        Err(_) => Ok(1.0),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
            _ => Err(Failure::Usage(format!(
                "PROLATE_TOL must be a positive number, got '{s}'"
            ))),
        },
    }
}

fn emit_reports<T: Serialize>(doc: &T, reports: &[&VerificationReport], out: &OutArg) -> CliResult {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, doc).map_err(io::Error::from)?;
    writeln!(w)?;
    w.flush()?;
    for r in reports {
        eprintln!("{}", r.summary());
        for case in r.failures() {
            eprintln!(
                "  FAIL {}: metric {:.3e} > tol {:.3e}",
                case.params, case.metric, case.tolerance
            );
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_table(id: u32, out: &OutArg) -> CliResult {
    let scale = tolerance_scale()?;
    let mut report = table_check(id)?;
    report.scale_tolerances(scale);
    emit_reports(&report, &[&report], out)
}

fn cmd_verify(suite: Suite, out: &OutArg) -> CliResult {
    let scale = tolerance_scale()?;
    let mut reports = run_suite(suite)?;
    reports.iter_mut().for_each(|r| r.scale_tolerances(scale));
    emit_reports(&reports, &reports.iter().collect::<Vec<_>>(), out)
}

fn cmd_quad(alpha: f64, beta: f64, m: usize, out: &OutArg) -> CliResult {
    let rule = gauss_jacobi(alpha, beta, m)?;
    let mut w = sink(out)?;
    writeln!(w, "node,weight")?;
    for (x, wt) in rule.nodes().iter().zip(rule.weights()) {
        writeln!(w, "{},{}", fmt(*x), fmt(*wt))?;
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Solve {
            family,
            k_max,
            format,
            out,
        } => cmd_solve(family, *k_max, *format, out),
        Command::Eval {
            family,
            k,
            form,
            grid,
            out,
        } => cmd_eval(family, *k, *form, grid, out),
        Command::EvalBall {
            family,
            k,
            ell,
            points,
            out,
        } => cmd_eval_ball(family, *k, *ell, points, out),
        Command::Table { id, out } => cmd_table(*id, out),
        Command::Verify { suite, out } => cmd_verify(*suite, out),
        Command::Quad { alpha, beta, m, out } => cmd_quad(*alpha, *beta, *m, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Numerical(msg) => eprintln!("numerical failure: {msg}"),
                Failure::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
