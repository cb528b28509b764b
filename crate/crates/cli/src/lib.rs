//! The `meltdown` command line. [`run`] does all the work so tests can drive
//! it without spawning a process.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use meltdown_core::{self as core, format_sig, Heron, RootLadder};

mod output;

pub use output::{Field, Format, Output, OutputSpec};

/// Environment variable that replaces the default ladder depth.
pub const DEPTH_ENV: &str = "MELTDOWN_LOG_DEPTH";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "meltdown",
    version,
    about = "Logarithms from the four operations of arithmetic"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,

    /// Significant digits for numeric output.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u8).range(1..=15))]
    sig_digits: u8,

    /// Root ladder depth. Defaults to $MELTDOWN_LOG_DEPTH, then 40.
    #[arg(long, global = true)]
    depth: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Square root by Heron's iteration.
    Sqrt {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        /// Print every iterate.
        #[arg(long)]
        trace: bool,
        /// Initial guess instead of the digit-count guess.
        #[arg(long)]
        guess: Option<f64>,
        /// Relative stopping tolerance.
        #[arg(long, default_value_t = core::arith::DEFAULT_REL_TOL)]
        tol: f64,
        #[arg(long, default_value_t = core::arith::DEFAULT_MAX_ITERATIONS)]
        max_iter: usize,
    },
    /// Integer power by repeated squaring.
    Pow {
        #[arg(allow_negative_numbers = true)]
        base: f64,
        exponent: u32,
    },
    /// Rungs base^(1/2^j) of the root ladder and their excess over 1.
    Ladder {
        #[arg(long, default_value_t = 10.0)]
        base: f64,
        /// Show one rung only.
        #[arg(long)]
        rung: Option<u32>,
    },
    /// Logarithm by dyadic expansion.
    Log {
        #[arg(allow_negative_numbers = true)]
        y: f64,
        #[arg(long, default_value_t = 10.0)]
        base: f64,
    },
    /// base^x from products of ladder rungs.
    Antilog {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 10.0)]
        base: f64,
    },
    /// log_to(y) computed through a ladder for base `from`.
    ConvertBase {
        #[arg(allow_negative_numbers = true)]
        y: f64,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
    },
    /// Compare log(y1*y2) with log(y1) + log(y2).
    Verify {
        #[arg(allow_negative_numbers = true)]
        y1: f64,
        #[arg(allow_negative_numbers = true)]
        y2: f64,
        #[arg(long, default_value_t = 10.0)]
        base: f64,
    },
    /// Positional numerals in radix 2 to 36.
    Radix {
        #[command(subcommand)]
        op: RadixOp,
    },
    /// Mantissa table base^(k/2^level), as CSV or JSON.
    Table(TableArgs),
    /// Multiply by adding logarithms.
    Mul {
        y1: f64,
        y2: f64,
        /// Read the antilog from a table instead of the ladder.
        #[arg(long)]
        via_table: bool,
        /// Table level for --via-table.
        #[arg(long, default_value_t = 13)]
        level: u32,
        #[arg(long, default_value_t = 10.0)]
        base: f64,
    },
    /// Slope of the log curve at x from a ladder step.
    Slope {
        x: f64,
        #[arg(long)]
        level: u32,
        /// Report the slope of log_p instead of log_10.
        #[arg(long)]
        base: Option<f64>,
    },
    /// Estimate e from the limit sequence t_n.
    DiscoverE {
        #[arg(long, default_value_t = 20)]
        level: u32,
        /// Print t_n for every n up to the level instead.
        #[arg(long)]
        sequence: bool,
    },
    /// ln(x) as the area under 1/t from 1 to x.
    AreaLn {
        x: f64,
        #[arg(long, default_value_t = 4096)]
        steps: usize,
    },
}

#[derive(Debug, Subcommand)]
enum RadixOp {
    /// Integer to digits.
    To {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        base: u32,
    },
    /// Digits to integer.
    From {
        #[arg(allow_hyphen_values = true)]
        digits: String,
        #[arg(long)]
        base: u32,
    },
    /// Leading fractional digits of x in [0, 1), truncated.
    Frac {
        x: f64,
        #[arg(long)]
        base: u32,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    level: u32,
    #[arg(long, default_value_t = 10.0)]
    base: f64,
    /// Look up the antilog of one mantissa instead of printing the table.
    #[arg(long, conflicts_with = "gnuplot_data")]
    lookup: Option<f64>,
    /// Write `x log(x)` pairs for plotting.
    #[arg(long)]
    gnuplot_data: bool,
    /// Number of base intervals covered by --gnuplot-data.
    #[arg(long, default_value_t = 1, requires = "gnuplot_data")]
    decades: u32,
}

enum Failure {
    Usage(String),
    Domain(core::Error),
}

impl From<core::Error> for Failure {
    fn from(e: core::Error) -> Self {
        Failure::Domain(e)
    }
}

/// Run the CLI on `argv` (program name first) and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version also arrive here
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let spec = OutputSpec {
        format: cli.format,
        sig_digits: cli.sig_digits as usize,
    };
    let result = resolve_depth(cli.depth).and_then(|depth| execute(cli.command, depth, &spec));
    match result {
        Ok(output) => match spec.write(out, &output) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_DOMAIN
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn resolve_depth(flag: Option<u32>) -> Result<u32, Failure> {
    if let Some(d) = flag {
        return Ok(d);
    }
    match std::env::var(DEPTH_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{DEPTH_ENV} must be a non-negative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(core::DEFAULT_DEPTH),
    }
}

fn execute(command: Command, depth: u32, spec: &OutputSpec) -> Result<Output, Failure> {
    let ladder = |base: f64| RootLadder::build(base, depth);
    let out = match command {
        Command::Sqrt {
            x,
            trace,
            guess,
            tol,
            max_iter,
        } => {
            let mut heron = Heron::new(tol, max_iter);
            if let Some(g) = guess {
                heron = heron.with_guess(g);
            }
            if trace {
                let t = heron.trace(x)?;
                if !t.converged {
                    return Err(core::Error::NoConvergence {
                        input: x,
                        max_iterations: max_iter,
                    }
                    .into());
                }
                Output::Table {
                    columns: vec!["k", "x", "y"],
                    rows: t
                        .iterations
                        .iter()
                        .enumerate()
                        .map(|(k, s)| vec![Field::from(k + 1), s.x.into(), s.y.into()])
                        .collect(),
                }
            } else {
                Output::Scalar("sqrt", heron.root(x)?.into())
            }
        }
        Command::Pow { base, exponent } => {
            Output::Scalar("pow", core::int_pow(base, exponent)?.into())
        }
        Command::Ladder { base, rung } => {
            let l = ladder(base)?;
            let row = |j: u32| -> Result<Vec<Field>, core::Error> {
                Ok(vec![j.into(), l.rung(j)?.into(), l.epsilon(j)?.into()])
            };
            match rung {
                Some(j) => {
                    let r = row(j)?;
                    Output::Record(vec!["j", "rung", "epsilon"].into_iter().zip(r).collect())
                }
                None => Output::Table {
                    columns: vec!["j", "rung", "epsilon"],
                    rows: (0..=l.depth()).map(row).collect::<Result<_, _>>()?,
                },
            }
        }
        Command::Log { y, base } => {
            let v = core::log_dyadic(y, &ladder(base)?)?;
            log_value_output(&v, spec)
        }
        Command::Antilog { x, base } => {
            Output::Scalar("antilog", core::antilog_real(x, &ladder(base)?)?.into())
        }
        Command::ConvertBase { y, from, to } => {
            let l = ladder(from)?;
            let x = core::LogEstimate::from(core::log_dyadic(y, &l)?);
            let c = core::convert_base(&x, to, &l)?;
            estimate_output(c.value, c.error_bound, spec)
        }
        Command::Verify { y1, y2, base } => {
            let (joint, sum) = core::log_product_check(y1, y2, &ladder(base)?)?;
            Output::Record(vec![
                ("log_product", joint.into()),
                ("log_sum", sum.into()),
                ("difference", (joint - sum).into()),
            ])
        }
        Command::Radix { op } => radix(op)?,
        Command::Table(args) => table(args, depth, spec)?,
        Command::Mul {
            y1,
            y2,
            via_table,
            level,
            base,
        } => {
            let l = ladder(base)?;
            if via_table {
                let t = core::build_table(&l, level)?;
                let (estimate, d) = core::multiply_via_logs(y1, y2, &t, &l)?;
                Output::Record(vec![
                    ("estimate", estimate.into()),
                    ("x1", d.x1.into()),
                    ("x2", d.x2.into()),
                    ("sum", d.sum.into()),
                    ("characteristic", d.characteristic.into()),
                    ("mantissa", d.mantissa.into()),
                    ("antilog", d.antilog.into()),
                    ("grid_error", d.grid_error.into()),
                    ("relative_error_bound", d.relative_error_bound.into()),
                ])
            } else {
                let x1 = core::log_dyadic(y1, &l)?;
                let x2 = core::log_dyadic(y2, &l)?;
                let sum = x1.checked_add(&x2)?;
                Output::Record(vec![
                    ("estimate", core::antilog_dyadic(&sum, &l)?.into()),
                    ("x1", x1.value().into()),
                    ("x2", x2.value().into()),
                    ("sum", sum.value().into()),
                ])
            }
        }
        Command::Slope { x, level, base } => {
            let l = ladder(10.0)?;
            match base {
                None => {
                    let s = core::slope_log10(x, level, &l)?;
                    Output::Record(vec![
                        ("x", s.x.into()),
                        ("level", s.ladder_level.into()),
                        ("epsilon", s.epsilon.into()),
                        ("slope", s.slope.into()),
                        ("slope_times_x", (s.slope * s.x).into()),
                    ])
                }
                Some(p) => {
                    let s = core::slope_log_p(p, x, level, &l)?;
                    Output::Record(vec![
                        ("x", x.into()),
                        ("level", level.into()),
                        ("base", p.into()),
                        ("slope", s.into()),
                        ("slope_times_x", (s * x).into()),
                    ])
                }
            }
        }
        Command::DiscoverE { level, sequence } => {
            let l = ladder(10.0)?;
            if sequence {
                Output::Table {
                    columns: vec!["n", "t_n"],
                    rows: core::limit_sequence(level, &l)?
                        .into_iter()
                        .map(|(n, t)| vec![n.into(), t.into()])
                        .collect(),
                }
            } else {
                let d = core::discover_e(level, &l)?;
                Output::Record(vec![
                    ("level", d.level.into()),
                    ("t_n", d.slope.into()),
                    ("e", d.estimate.into()),
                ])
            }
        }
        Command::AreaLn { x, steps } => Output::Scalar("area", core::riemann_ln(x, steps)?.into()),
    };
    Ok(out)
}

fn log_value_output(v: &core::LogValue, spec: &OutputSpec) -> Output {
    if spec.format == Format::Plain {
        return Output::Scalar("log", v.value().into());
    }
    Output::Record(vec![
        ("value", v.value().into()),
        ("characteristic", v.characteristic().into()),
        ("mantissa", v.mantissa().to_decimal_string().into()),
        ("error_bound", v.error_bound().into()),
    ])
}

fn estimate_output(value: f64, error_bound: f64, spec: &OutputSpec) -> Output {
    if spec.format == Format::Plain {
        return Output::Scalar("log", value.into());
    }
    Output::Record(vec![
        ("value", value.into()),
        ("error_bound", error_bound.into()),
    ])
}

fn radix(op: RadixOp) -> Result<Output, Failure> {
    Ok(match op {
        RadixOp::To { m, base } => {
            let n = core::to_radix(m.unsigned_abs(), base)?;
            let sign = if m < 0 { "-" } else { "" };
            Output::Scalar("digits", format!("{sign}{n}").into())
        }
        RadixOp::From { digits, base } => {
            let (negative, body) = match digits.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, digits.as_str()),
            };
            let magnitude = core::from_radix(&core::RadixNumeral::parse(body, base)?)?;
            let value = i64::try_from(magnitude).map_err(|_| core::Error::Overflow)?;
            Output::Scalar("value", if negative { -value } else { value }.into())
        }
        RadixOp::Frac { x, base, count } => {
            let digits = core::fractional_digits(x, base, count)?;
            let text: String = digits
                .iter()
                .map(|&d| core::numeral::digit_char(d))
                .collect();
            Output::Scalar("digits", format!("0.{text}").into())
        }
    })
}

fn table(args: TableArgs, depth: u32, spec: &OutputSpec) -> Result<Output, Failure> {
    let l = RootLadder::build(args.base, depth)?;
    let t = core::build_table(&l, args.level)?;
    if let Some(m) = args.lookup {
        let (value, bound) = core::lookup_antilog(&t, m)?;
        return Ok(Output::Record(vec![
            ("mantissa", m.into()),
            ("value", value.into()),
            ("grid_error", bound.into()),
        ]));
    }
    if args.gnuplot_data {
        let mut text = String::from("# x log(x)\n");
        for d in 0..args.decades {
            let scale = core::int_pow(args.base, d)?;
            for e in &t.entries {
                let x = e.value * scale;
                let y = d as f64 + e.mantissa_exponent.value();
                text.push_str(&format!(
                    "{} {}\n",
                    format_sig(x, spec.sig_digits),
                    format_sig(y, spec.sig_digits)
                ));
            }
        }
        let end = core::int_pow(args.base, args.decades)?;
        text.push_str(&format!(
            "{} {}\n",
            format_sig(end, spec.sig_digits),
            args.decades
        ));
        return Ok(Output::Text(text));
    }
    Ok(match spec.format {
        Format::Json => {
            let mut s = serde_json::to_string(&t).map_err(|e| Failure::Usage(e.to_string()))?;
            s.push('\n');
            Output::Text(s)
        }
        Format::Plain | Format::Csv => Output::Text(t.to_csv()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("meltdown").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn runs_in_process() {
        assert_eq!(
            call(&["--depth", "40", "log", "100"]),
            (0, "2\n".into(), String::new())
        );
        let (code, out, err) = call(&["--depth", "40", "log", "0"]);
        assert_eq!((code, out.as_str()), (EXIT_DOMAIN, ""));
        assert!(err.starts_with("error: "));
        assert_eq!(call(&["nope"]).0, EXIT_USAGE);
        let (code, out, _) = call(&["--version"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("meltdown "));
    }

    #[test]
    fn global_flags_after_subcommand() {
        let (code, out, _) = call(&[
            "sqrt",
            "2",
            "--sig-digits",
            "3",
            "--format",
            "csv",
            "--depth",
            "40",
        ]);
        assert_eq!((code, out.as_str()), (0, "sqrt\n1.41\n"));
    }
}
