//! `grosscalc`: evaluate grossone expressions, sum series with explicit
//! item counts, query partial zeta/eta values, integrate over explicit
//! endpoints, compare the sin(x) polynomial approximations, and run the
//! exact check suites.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on domain errors (the
//! error name goes to stderr).

use std::collections::HashMap;
use std::io::{BufRead, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grosscalc::checks;
use grosscalc::expvalue::ExpValue;
use grosscalc::gross::GrossNumber;
use grosscalc::integrals::{integrate, GrossPolynomial};
use grosscalc::rational::ExactRational;
use grosscalc::series::{
    rearrangement_count, sum_arithmetic, sum_geometric, sum_pattern, GeomStart, PatternSum,
};
use grosscalc::sinpoly::{coeff_mismatch, curve_to_csv, emit_curve};
use grosscalc::textio::{self, format_value, FormatStyle};
use grosscalc::zetaeta::{eta, euler_inequality_check, relation_check, zeta, ZetaQuery};
use grosscalc::{GrossError, Result};

#[derive(Parser)]
#[command(
    name = "grosscalc",
    about = "Exact calculator for grossone positional records",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format; defaults to GROSSCALC_FORMAT or `record`.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Seed for the randomized parts of `check suite`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Record,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one expression.
    Eval { expr: String },
    /// Interactive session with `let name = expr` bindings.
    Repl,
    /// Closed-form series summation.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Partial zeta value at a non-positive integer exponent.
    Zeta(ZetaArgs),
    /// Partial eta value at a non-positive integer exponent.
    Eta(ZetaArgs),
    /// Exact polynomial integration over explicit endpoints.
    Integrate(IntegrateArgs),
    /// Taylor-versus-product comparison of sin(x) polynomials.
    #[command(subcommand)]
    Sinpoly(SinpolyCommand),
    /// Exact verification checks.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// Arithmetic progression: n items from a1 with difference d.
    Arith {
        #[arg(long)]
        a1: String,
        #[arg(long, default_value = "0")]
        d: String,
        #[arg(short, long)]
        n: String,
    },
    /// Geometric progression with ratio x over an explicit count.
    Geom {
        #[arg(short, long)]
        x: String,
        #[arg(short, long)]
        n: String,
        /// Starting index, 0 or 1.
        #[arg(long, default_value_t = 0)]
        from: u8,
    },
    /// Repeating pattern of rational items over an explicit count.
    Pattern {
        /// Comma-separated items, e.g. `1,-1` or `1,1,-1`.
        #[arg(short, long)]
        pattern: String,
        #[arg(short, long)]
        n: String,
        /// Also print the positive/negative item counts.
        #[arg(long)]
        counts: bool,
    },
}

#[derive(Args)]
struct ZetaArgs {
    /// Non-positive integer exponent s.
    #[arg(short, long, allow_hyphen_values = true)]
    s: i64,
    /// Item count: any integer-valued record expression, e.g. `G` or `G/2`.
    #[arg(short, long)]
    n: String,
}

#[derive(Args)]
struct IntegrateArgs {
    /// Comma-separated coefficient expressions, degree ascending,
    /// e.g. `0,0,1` for x^2 or `0,-1,1` for x^2 - x.
    #[arg(short, long)]
    poly: String,
    /// Lower endpoint expression.
    #[arg(short, long)]
    a: String,
    /// Upper endpoint expression.
    #[arg(short, long)]
    b: String,
}

#[derive(Subcommand)]
enum SinpolyCommand {
    /// Report coefficient mismatches for order 2k+1.
    Mismatch {
        #[arg(short, long)]
        k: u32,
    },
    /// Emit CSV samples of sin(x) and both approximations.
    Curve {
        #[arg(short, long)]
        k: u32,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, default_value_t = 200)]
        steps: u32,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Verify eta(s,n) = zeta(s,n) - 2^(1-s) zeta(s,k) at one point.
    Relation {
        #[arg(short, long, allow_hyphen_values = true)]
        s: i64,
        #[arg(short, long)]
        n: String,
    },
    /// Compare a partial sum with a product of truncated Euler factors.
    Euler {
        #[arg(short, long)]
        s: u32,
        #[arg(short, long)]
        n: u64,
        /// Comma-separated truncation depths over the first primes.
        #[arg(long)]
        depths: String,
    },
    /// Run the full exact reproduction suite.
    Suite,
}

fn output_format(cli: &Cli) -> FormatStyle {
    let chosen = cli.format.or_else(|| {
        match std::env::var("GROSSCALC_FORMAT").ok().as_deref() {
            Some("json") => Some(OutputFormat::Json),
            Some("record") => Some(OutputFormat::Record),
            _ => None,
        }
    });
    match chosen {
        Some(OutputFormat::Json) => FormatStyle::Machine,
        _ => FormatStyle::Record,
    }
}

fn eval_expr(text: &str) -> Result<ExpValue> {
    textio::eval(&textio::parse(text)?)
}

fn eval_gross(text: &str) -> Result<GrossNumber> {
    eval_expr(text)?.into_gross()
}

fn parse_rational_list(text: &str) -> Result<Vec<ExactRational>> {
    text.split(',')
        .map(|item| {
            eval_expr(item.trim())?
                .as_rational()
                .ok_or(GrossError::ExpectedGrossNumber)
        })
        .collect()
}

fn run(cli: &Cli) -> Result<i32> {
    let style = output_format(cli);
    let print_value = |value: &ExpValue| println!("{}", format_value(value, style));
    match &cli.command {
        Command::Eval { expr } => {
            print_value(&eval_expr(expr)?);
        }
        Command::Repl => return repl(style),
        Command::Series(series) => match series {
            SeriesCommand::Arith { a1, d, n } => {
                let value =
                    sum_arithmetic(&eval_gross(a1)?, &eval_gross(d)?, &eval_gross(n)?)?;
                print_value(&ExpValue::from_gross(value));
            }
            SeriesCommand::Geom { x, n, from } => {
                let start = match from {
                    0 => GeomStart::FromZero,
                    1 => GeomStart::FromOne,
                    _ => return Err(GrossError::InvalidCount),
                };
                let ratio = eval_expr(x)?
                    .as_rational()
                    .ok_or(GrossError::ExpectedGrossNumber)?;
                print_value(&sum_geometric(&ratio, &eval_gross(n)?, start)?);
            }
            SeriesCommand::Pattern { pattern, n, counts } => {
                let ps = PatternSum::new(parse_rational_list(pattern)?, eval_gross(n)?)?;
                print_value(&ExpValue::from_gross(sum_pattern(&ps)));
                if *counts {
                    let (pos, neg) = rearrangement_count(&ps);
                    println!("positives: {}", format_value(&ExpValue::from_gross(pos), style));
                    println!("negatives: {}", format_value(&ExpValue::from_gross(neg), style));
                }
            }
        },
        Command::Zeta(args) => {
            let query = ZetaQuery::new(args.s, eval_gross(&args.n)?)?;
            print_value(&ExpValue::from_gross(zeta(&query)));
        }
        Command::Eta(args) => {
            let query = ZetaQuery::new(args.s, eval_gross(&args.n)?)?;
            print_value(&ExpValue::from_gross(eta(&query)?));
        }
        Command::Integrate(args) => {
            let coeffs = args
                .poly
                .split(',')
                .map(|item| eval_gross(item.trim()))
                .collect::<Result<Vec<_>>>()?;
            let value = integrate(
                &GrossPolynomial::new(coeffs),
                &eval_gross(&args.a)?,
                &eval_gross(&args.b)?,
            );
            print_value(&ExpValue::from_gross(value));
        }
        Command::Sinpoly(SinpolyCommand::Mismatch { k }) => {
            let report = coeff_mismatch(*k)?;
            println!("order {}: {} coefficient mismatches", 2 * k + 1, report.entries.len());
            for entry in &report.entries {
                println!(
                    "degree {}: taylor {} vs product {} * pi^{}",
                    entry.degree,
                    entry.taylor,
                    entry.product.rational,
                    entry.product.pi_power
                );
            }
            println!(
                "degree 3 partial inverse-square sum {} (gap to pi^2/6: {:e})",
                report.degree3.partial_inverse_square_sum, report.degree3.numeric_gap
            );
            println!(
                "top degree: taylor {} vs product {} * pi^{}; ratio bound > 1 by {}, numeric gap {:e}",
                report.top_degree.taylor,
                report.top_degree.product.rational,
                report.top_degree.product.pi_power,
                report.top_degree.ratio_minus_one_lower_bound,
                report.top_degree.numeric_gap
            );
        }
        Command::Sinpoly(SinpolyCommand::Curve { k, x_min, x_max, steps }) => {
            let rows = emit_curve(*k, *x_min, *x_max, *steps)?;
            print!("{}", curve_to_csv(&rows));
        }
        Command::Check(CheckCommand::Relation { s, n }) => {
            let holds = relation_check(*s, &eval_gross(n)?)?;
            println!("{}", if holds { "holds" } else { "VIOLATED" });
            return Ok(if holds { 0 } else { 2 });
        }
        Command::Check(CheckCommand::Euler { s, n, depths }) => {
            let depths = depths
                .split(',')
                .map(|d| d.trim().parse::<u32>().map_err(|_| GrossError::InvalidCount))
                .collect::<Result<Vec<_>>>()?;
            let unequal = euler_inequality_check(*s, *n, &depths)?;
            println!("{}", if unequal { "unequal" } else { "EQUAL" });
            return Ok(if unequal { 0 } else { 2 });
        }
        Command::Check(CheckCommand::Suite) => {
            let report = checks::run_suite(cli.seed);
            print!("{}", report.render_table());
            return Ok(if report.all_passed() { 0 } else { 2 });
        }
    }
    Ok(0)
}

/// Line-oriented session: expressions print their value, `let name = expr`
/// adds a binding, blank lines are skipped.
fn repl(style: FormatStyle) -> Result<i32> {
    let stdin = std::io::stdin();
    let interactive = stdin.is_terminal();
    let mut env: HashMap<String, ExpValue> = HashMap::new();
    let mut line = String::new();
    loop {
        if interactive {
            print!("> ");
            std::io::stdout().flush().ok();
        }
        line.clear();
        if stdin.lock().read_line(&mut line).unwrap_or(0) == 0 {
            return Ok(0);
        }
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == ":quit" || trimmed == ":q" {
            return Ok(0);
        }
        match eval_line(trimmed, &mut env) {
            Ok(Some(value)) => println!("{}", format_value(&value, style)),
            Ok(None) => {}
            Err(e) => eprintln!("{e}"),
        }
    }
}

fn eval_line(line: &str, env: &mut HashMap<String, ExpValue>) -> Result<Option<ExpValue>> {
    if let Some(rest) = line.strip_prefix("let ") {
        let (name, expr) = rest
            .split_once('=')
            .ok_or_else(|| GrossError::SyntaxError {
                pos: 0,
                msg: "expected `let name = expr`".to_string(),
            })?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(GrossError::SyntaxError {
                pos: 0,
                msg: format!("bad binding name `{name}`"),
            });
        }
        let value = textio::eval_with_env(&textio::parse(expr)?, env)?;
        env.insert(name.to_string(), value);
        return Ok(None);
    }
    textio::eval_with_env(&textio::parse(line)?, env).map(Some)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success status.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
