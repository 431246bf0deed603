//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::field::NumericPoint;
use crate::qalgebra::{base, Observable};
use crate::rep::{build_rep, evaluate, hermiticity_defect, numeric_hermitian, Gauge, RepError};
use crate::states::analysis::{limit_report, spectrum, LimitSpec};
use crate::states::module::half;

use super::expr::{parse_expr, parse_half, StateSpec};
use super::report::{Kind, Record, Report, Status};
use super::verify::{run_all, run_suite, VerifyOptions, SUITES};
use super::CliError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "qpoincare",
    version,
    about = "Exact checks for the two-parameter deformed Poincare algebra"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Gauge for spin-j representation matrices.
    #[arg(long, global = true)]
    pub gauge: Option<Gauge>,
    /// Numeric value of q for evaluation, as a decimal or a ratio like `13/10`.
    #[arg(long, global = true, default_value = "1.3", value_parser = parse_number)]
    pub q: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Print the spin-j matrices of Ω.
    Rep {
        /// Spin, e.g. `1/2`.
        #[arg(long, default_value = "1/2")]
        spin: String,
    },
    /// Normal form of an expression.
    NormalForm { expr: String },
    /// Test a state against observables.
    Eigencheck {
        #[arg(long)]
        state: String,
        /// Observable name or expression; repeatable. Defaults to the commuting set.
        #[arg(long)]
        observable: Vec<String>,
    },
    /// Energy levels from three independent routes.
    Spectrum {
        #[arg(long, default_value_t = 6)]
        l_max: u32,
        /// Evaluation point such as `q=1` or `q=13/10,M=2`; overrides `--q`.
        #[arg(long)]
        numeric: Option<String>,
    },
    /// Undeformed limits over a λ grid.
    Limits {
        #[arg(long, value_delimiter = ',', default_values_t = [1e-2, 1e-3, 1e-4])]
        lambda: Vec<f64>,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        /// Spins for the rest-state limits.
        #[arg(long, value_delimiter = ',', default_values_t = ["1/2".to_string(), "1".to_string()])]
        spin: Vec<String>,
    },
    /// Print the rewrite rules.
    Rules,
}

/// Parses `args`, runs the command and writes the report. Returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            let code = e.exit_code();
            if code == 2 {
                return 2;
            }
            let mut r = Report::new(command_name(&cli.command));
            r.error = Some(e.to_string());
            r
        }
    };
    let text = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    let written = match &cli.out {
        Some(p) => std::fs::write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 1;
    }
    report.status().exit_code()
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Rep { .. } => "rep",
        Command::NormalForm { .. } => "normal-form",
        Command::Eigencheck { .. } => "eigencheck",
        Command::Spectrum { .. } => "spectrum",
        Command::Limits { .. } => "limits",
        Command::Rules => "rules",
    }
}

/// Parses a decimal or `n/d`.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let x = match s.split_once('/') {
        Some((n, d)) => {
            let n: f64 = n.trim().parse().map_err(|_| format!("bad number '{s}'"))?;
            let d: f64 = d.trim().parse().map_err(|_| format!("bad number '{s}'"))?;
            n / d
        }
        None => s.parse().map_err(|_| format!("bad number '{s}'"))?,
    };
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("bad number '{s}'"))
    }
}

fn parse_point(spec: &str, q: f64) -> Result<(f64, f64), CliError> {
    let (mut q, mut mass) = (q, 1.0);
    for part in spec.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("expected name=value, got '{part}'")))?;
        let v = parse_number(v).map_err(CliError::Parse)?;
        match k.trim() {
            "q" => q = v,
            "M" => mass = v,
            other => return Err(CliError::Parse(format!("unknown parameter '{other}'"))),
        }
    }
    if q <= 0.0 {
        return Err(CliError::Usage(format!("q must be positive, got {q}")));
    }
    Ok((q, mass))
}

fn twice_u(s: &str) -> Result<u32, CliError> {
    let t = parse_half(s)?;
    u32::try_from(t).map_err(|_| CliError::Parse(format!("spin must be non-negative, got {s}")))
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    if !(cli.q.is_finite() && cli.q > 0.0) {
        return Err(CliError::Usage(format!(
            "--q must be positive, got {}",
            cli.q
        )));
    }
    let mut report = Report::new(command_name(&cli.command));
    report.input("q", cli.q);
    match &cli.command {
        Command::Verify { suite } => {
            report.input("suite", suite);
            let opts = VerifyOptions {
                q: cli.q,
                ..VerifyOptions::default()
            };
            report.results = if suite == "all" {
                run_all(&opts)?
            } else if SUITES.contains(&suite.as_str()) {
                run_suite(suite, &opts)?
            } else {
                return Err(CliError::Usage(format!(
                    "unknown suite '{suite}'; expected all, {}",
                    SUITES.join(", ")
                )));
            };
        }
        Command::Rep { spin } => {
            let tj = twice_u(spin)?;
            let gauge = cli.gauge.unwrap_or(Gauge::Rational);
            report.input("spin", half(tj as i32));
            report.input("gauge", gauge);
            rep_command(&mut report, tj, gauge, cli.q)?;
        }
        Command::NormalForm { expr } => {
            let sys = &base().system;
            report.input("expr", expr);
            let p = parse_expr(expr, sys)?;
            let n = sys.nf(&p)?;
            report.results.push(Record::value(
                "normal-form",
                expr.clone(),
                n.to_string(),
                true,
            ));
        }
        Command::Eigencheck { state, observable } => {
            let sys = &base().system;
            let spec: StateSpec = state.parse()?;
            let gauge = cli.gauge;
            report.input("state", &spec);
            if let Some(g) = gauge {
                report.input("gauge", g);
            }
            let names: Vec<String> = if observable.is_empty() {
                Observable::COMMUTING
                    .iter()
                    .map(|o| o.name().to_string())
                    .collect()
            } else {
                observable.clone()
            };
            let ops = names
                .iter()
                .map(|n| Ok((n.clone(), parse_expr(n, sys)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let (module, v) = spec.build(sys, gauge)?;
            report.input("state_expansion", &v);
            let label = spec.to_string();
            for (n, op) in ops {
                let r = module.eigencheck(&n, &op, &label, &v)?;
                let value = match &r.eigenvalue {
                    Some(e) => e.to_string(),
                    None => "NOT_EIGENSTATE".to_string(),
                };
                report.results.push(Record::new(
                    "eigencheck",
                    n,
                    Kind::Eigenvalue,
                    value,
                    Status::Ok,
                ));
            }
        }
        Command::Spectrum { l_max, numeric } => {
            report.input("l_max", l_max);
            let (q, mass) = match numeric {
                Some(spec) => {
                    report.input("numeric", spec);
                    parse_point(spec, cli.q)?
                }
                None => (cli.q, 1.0),
            };
            let sys = &base().system;
            let p = NumericPoint::new(q, 1.0, mass);
            for r in spectrum(sys, *l_max)? {
                let num = r.eval(&p).map(|x| format!("{x}")).unwrap_or_default();
                report.results.push(
                    Record::value(
                        "spectrum",
                        format!("E_{}", r.l),
                        r.energy.to_string(),
                        r.agrees(),
                    )
                    .note(format!("q={q}, M={mass}: {num}")),
                );
            }
        }
        Command::Limits { lambda, hbar, spin } => {
            if lambda.is_empty() || lambda.iter().any(|l| !(*l > 0.0 && l.is_finite())) {
                return Err(CliError::Usage("--lambda values must be positive".into()));
            }
            let twice_s = spin
                .iter()
                .map(|s| twice_u(s))
                .collect::<Result<Vec<_>, _>>()?;
            report.input(
                "lambda",
                lambda
                    .iter()
                    .map(|l| format!("{l:e}"))
                    .collect::<Vec<_>>()
                    .join(","),
            );
            report.input("hbar", hbar);
            report.input("spin", spin.join(","));
            let spec = LimitSpec {
                lambdas: lambda.clone(),
                hbar: *hbar,
                twice_s,
                ..LimitSpec::default()
            };
            for r in limit_report(&spec) {
                let order = r
                    .order
                    .map(|o| format!(", order {o:.3}"))
                    .unwrap_or_default();
                report.results.push(
                    Record::value(
                        "limits",
                        format!("{} [{}] lambda={:e}", r.quantity, r.index, r.lambda),
                        format!("{}", r.value),
                        true,
                    )
                    .expect(format!("{}", r.target))
                    .note(format!("error {:e}{order}", r.error)),
                );
            }
        }
        Command::Rules => {
            let sys = &base().system;
            for rule in sys.rules() {
                report.results.push(Record::value(
                    "rules",
                    rule.lhs_word().to_string(),
                    rule.rhs.to_string(),
                    true,
                ));
            }
        }
    }
    Ok(report)
}

fn rep_command(report: &mut Report, tj: u32, gauge: Gauge, q: f64) -> Result<(), CliError> {
    let n = match build_rep(tj, gauge) {
        Ok(rep) => {
            for g in crate::ncalg::Gen::all().filter(|g| g.mat() == crate::ncalg::Mat::O) {
                let m = rep.matrix(g);
                for i in 0..rep.dim() {
                    for j in 0..rep.dim() {
                        let e = m.get(i, j);
                        if !e.is_zero() {
                            report.results.push(Record::value(
                                "rep",
                                format!("{}[{i}][{j}]", g.name()),
                                e.to_string(),
                                true,
                            ));
                        }
                    }
                }
            }
            evaluate(&rep, q)?
        }
        Err(RepError::NoRadical(_)) => {
            report.results.push(Record::value(
                "rep",
                "exact hermitian gauge",
                "no exact square root; numeric only",
                true,
            ));
            numeric_hermitian(tj, q)?
        }
        Err(e) => return Err(e.into()),
    };
    if gauge == Gauge::Hermitian {
        let d = hermiticity_defect(&n);
        report.results.push(Record::value(
            "rep",
            format!("hermiticity defect at q={q}"),
            format!("{d:e}"),
            d < 1e-12,
        ));
    }
    Ok(())
}
