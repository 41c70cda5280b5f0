use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use indexcalc::operator::MAX_ORDER;
use indexcalc::{
    euler_characteristic, index_polynomial, todd_class, CompleteIntersection, IndexMode,
    OperatorSpec, Rational, TwistPoly, VirtualBundle,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::eval::evaluate;
use crate::parser::{parse_bundle, parse_variety, ParseError, VarietyError};
use crate::{output, report};

#[derive(Debug, Parser)]
#[command(name = "indexcalc", version, about = "Characteristic classes and twisted indices on complete intersections")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank, Chern character and Chern classes of a bundle.
    Chern {
        #[arg(long)]
        variety: String,
        #[arg(long)]
        bundle: String,
    },
    /// Todd class of the tangent bundle.
    Todd {
        #[arg(long)]
        variety: String,
    },
    /// Euler characteristic by Hirzebruch-Riemann-Roch.
    Euler {
        #[arg(long)]
        variety: String,
        #[arg(long)]
        bundle: String,
        /// Evaluate at N = AT instead of printing the polynomial.
        #[arg(long, allow_negative_numbers = true)]
        at: Option<i64>,
    },
    /// Index polynomial of a twisted differential operator.
    Index {
        #[arg(long)]
        variety: String,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Mode::Default)]
        mode: Mode,
        #[arg(long, allow_negative_numbers = true)]
        at: Option<i64>,
    },
    /// Regenerate a stored report.
    Report {
        #[arg(value_enum)]
        topic: Topic,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Default,
    PaperCompat,
}

impl From<Mode> for IndexMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Default => IndexMode::Default,
            Mode::PaperCompat => IndexMode::PaperCompat,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Topic {
    Paper,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid --{field} `{input}`: {source}")]
    Parse {
        field: &'static str,
        input: String,
        source: ParseError,
    },
    #[error("invalid --variety `{input}`: {source}")]
    Variety { input: String, source: VarietyError },
    #[error("{0}")]
    Usage(String),
    #[error("computation rejected: {0}")]
    Compute(#[from] indexcalc::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(_) => 1,
            _ => 2,
        }
    }

    /// The error line, plus the offending input with a caret under the
    /// reported byte offset for syntax errors.
    pub fn diagnostic(&self) -> String {
        let mut msg = format!("error: {self}\n");
        let located = match self {
            CliError::Parse { input, source, .. } => Some((input, source.offset)),
            CliError::Variety {
                input,
                source: VarietyError::Syntax(e),
            } => Some((input, e.offset)),
            _ => None,
        };
        if let Some((input, offset)) = located {
            let column = input[..offset.min(input.len())].chars().count();
            msg.push_str(&format!("  {input}\n  {}^\n", " ".repeat(column)));
        }
        msg
    }
}

fn variety(text: &str) -> Result<CompleteIntersection, CliError> {
    parse_variety(text).map_err(|source| CliError::Variety {
        input: text.to_string(),
        source,
    })
}

fn bundle(field: &'static str, text: &str, x: &CompleteIntersection) -> Result<(String, VirtualBundle), CliError> {
    let expr = parse_bundle(text).map_err(|source| CliError::Parse {
        field,
        input: text.to_string(),
        source,
    })?;
    let value = evaluate(&expr, x)?;
    Ok((expr.to_string(), value))
}

/// Text form of an exact value: `20`, `-3/2`.
fn value_text(r: &Rational) -> String {
    r.to_string()
}

fn poly_result(poly: &TwistPoly, at: Option<i64>) -> (String, Value) {
    let value = at.map(|m| poly.eval_int(m));
    let text = match &value {
        Some(v) => value_text(v),
        None => poly.to_string(),
    };
    let json = json!({
        "polynomial": output::poly(poly),
        "value": value.as_ref().map(output::rational),
    });
    (text, json)
}

/// Executes one command, returning the text and JSON renderings.
fn execute(cli: &Cli) -> Result<(String, Value), CliError> {
    match &cli.command {
        Command::Chern { variety: v, bundle: b } => {
            let x = variety(v)?;
            let (canonical, e) = bundle("bundle", b, &x)?;
            let chern = e.chern_classes().total();
            let text = format!("rank: {}\nch: {}\nc: {}", e.rank(), e.ch(), chern);
            let json = output::envelope(
                output::variety(&x),
                json!({ "command": "chern", "bundle": canonical }),
                json!({
                    "rank": e.rank(),
                    "ch": output::class(e.ch()),
                    "chern": output::class(&chern),
                }),
            );
            Ok((text, json))
        }
        Command::Todd { variety: v } => {
            let x = variety(v)?;
            let td = todd_class(&x);
            let chi = x.integrate(&td)?.eval_int(0);
            let text = format!("Td: {td}\nchi(O): {}", value_text(&chi));
            let json = output::envelope(
                output::variety(&x),
                json!({ "command": "todd" }),
                json!({ "todd": output::class(&td), "chi": output::rational(&chi) }),
            );
            Ok((text, json))
        }
        Command::Euler { variety: v, bundle: b, at } => {
            let x = variety(v)?;
            let (canonical, e) = bundle("bundle", b, &x)?;
            let chi = euler_characteristic(&x, &e)?;
            let (text, result) = poly_result(&chi, *at);
            let json = output::envelope(
                output::variety(&x),
                json!({ "command": "euler", "bundle": canonical, "at": at }),
                result,
            );
            Ok((text, json))
        }
        Command::Index {
            variety: v,
            order,
            source,
            target,
            mode,
            at,
        } => {
            let x = variety(v)?;
            if *order > MAX_ORDER {
                return Err(CliError::Usage(format!(
                    "operator order {order} exceeds the maximum of {MAX_ORDER}"
                )));
            }
            let (source_text, f) = bundle("source", source, &x)?;
            let (target_text, g) = bundle("target", target, &x)?;
            let mode = IndexMode::from(*mode);
            let op = OperatorSpec::new(*order, f, g)?;
            let poly = index_polynomial(&x, &op, mode)?;
            let (text, result) = poly_result(&poly, *at);
            let json = output::envelope(
                output::variety(&x),
                json!({
                    "command": "index",
                    "order": order,
                    "source": source_text,
                    "target": target_text,
                    "mode": mode.name(),
                    "at": at,
                }),
                result,
            );
            Ok((text, json))
        }
        Command::Report { topic: Topic::Paper } => {
            let r = report::build()?;
            let text = report::render_text(&r);
            Ok((text.trim_end().to_string(), report::render_json(&r)))
        }
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, json)) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&json).expect("JSON values serialize")
            } else {
                text
            };
            let _ = writeln!(out, "{body}");
            0
        }
        Err(e) => {
            let _ = err.write_all(e.diagnostic().as_bytes());
            e.exit_code()
        }
    }
}
