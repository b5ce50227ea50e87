//! `leavitt`: evaluate Cohn and Leavitt algebra expressions and decide
//! simplicity of the derived Lie algebra of `M_d(L_K(n))`. Every command
//! writes one JSON document to stdout.

mod config;

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use leavitt_core::simplicity::{matrix_from_json, matrix_to_strings};
use leavitt_core::{
    build_witness, evaluate, is_simple, parse, verify_witness, BracketWitness, Error, FieldSpec,
    Value,
};
use serde_json::{json, Value as Json};

use config::Partial;

/// A failed command: exit code 2 for malformed input, 1 for everything else.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    reason: String,
}

impl Failure {
    pub fn parse(reason: impl Into<String>) -> Self {
        Failure { code: 2, reason: reason.into() }
    }

    pub fn domain(reason: impl Into<String>) -> Self {
        Failure { code: 1, reason: reason.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Malformed(_) => Failure::parse(e.to_string()),
            _ => Failure::domain(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "leavitt", version, about = "Cohn and Leavitt path algebra calculator")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Number of generator pairs (n >= 2) [default: 2]
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Matrix size (d >= 1) [default: 1]
    #[arg(long, global = true)]
    d: Option<usize>,
    /// Field characteristic, 0 for Q or a prime [default: $LEAVITT_CHAR or 0]
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,
    /// cohn, leavitt, or matrix [default: leavitt]
    #[arg(long, global = true, value_parser = parse_mode)]
    mode: Option<leavitt_core::Mode>,
    /// key=value settings file (n, d, char, mode)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Human-readable output instead of JSON
    #[arg(long, global = true)]
    pretty: bool,
}

fn parse_mode(s: &str) -> Result<leavitt_core::Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an expression in the configured mode
    Nf { expr: String },
    /// T in cohn mode, tau in leavitt mode, tau_d in matrix mode
    Trace { expr: String },
    /// tau_d of a matrix read from a JSON file of element strings
    Taud { file: PathBuf },
    /// Lie bracket [e1, e2]
    Bracket { e1: String, e2: String },
    /// Simplicity verdict for [M_d(L), M_d(L)]
    Simple,
    /// Bracket witness that the identity lies in the derived algebra
    Witness {
        #[arg(long)]
        verify: bool,
    },
    /// Check a witness file
    Verify { file: PathBuf },
    /// Verdicts over a grid of configurations
    Grid {
        /// Comma-separated characteristics
        #[arg(long, value_delimiter = ',', default_value = "0,2,3,5,7,11")]
        chars: Vec<u64>,
        /// Inclusive range a..b
        #[arg(long, default_value = "2..8", value_parser = parse_range)]
        n_range: RangeInclusive<usize>,
        /// Inclusive range a..b
        #[arg(long, default_value = "1..6", value_parser = parse_range)]
        d_range: RangeInclusive<usize>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected a..b or a single integer, got {s:?}");
    let s = s.trim();
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::domain(format!("cannot read {}: {e}", path.display())))
}

fn element_json(v: &Value) -> Json {
    match v {
        Value::Matrix(m) => json!(matrix_to_strings(m)),
        other => json!(other.to_string()),
    }
}

fn verdict_json(v: &leavitt_core::SimplicityVerdict) -> Json {
    json!({ "simple": v.simple, "reason": v.reason })
}

fn run(cli: &Cli) -> Result<Json, Failure> {
    let g = &cli.global;
    let flags = Partial { n: g.n, d: g.d, characteristic: g.characteristic, mode: g.mode };
    let file = match &g.config {
        Some(p) => config::read_config(p)?,
        None => Partial::default(),
    };
    let partial = flags.or(file).or(config::from_env()?);
    let cfg = partial.resolve()?;
    let expr = |s: &str| -> Result<Value, Failure> { Ok(evaluate(&parse(s).map_err(Error::from)?, &cfg)?) };

    Ok(match &cli.command {
        Command::Nf { expr: e } => element_json(&expr(e)?),
        Command::Trace { expr: e } => json!(expr(e)?.trace()?.to_string()),
        Command::Taud { file } => {
            let m = matrix_from_json(&read(file)?, cfg.context())?;
            json!(m.tau_d()?.to_string())
        }
        Command::Bracket { e1, e2 } => {
            let (a, b) = (expr(e1)?, expr(e2)?);
            let v = match (a, b) {
                (Value::Cohn(a), Value::Cohn(b)) => Value::Cohn(a.bracket(&b)?),
                (Value::Leavitt(a), Value::Leavitt(b)) => Value::Leavitt(a.bracket(&b)?),
                (Value::Matrix(a), Value::Matrix(b)) => Value::Matrix(a.bracket(&b)?),
                _ => unreachable!("both operands share one mode"),
            };
            element_json(&v)
        }
        Command::Simple => verdict_json(&is_simple(cfg.spec, cfg.n, cfg.d)?),
        Command::Witness { verify } => {
            let w = build_witness(cfg.spec, cfg.n, cfg.d)?;
            let mut out = json!({ "witness": w.to_document() });
            if *verify {
                out["verified"] = json!(verify_witness(&w)?);
            }
            out
        }
        Command::Verify { file } => {
            let w = BracketWitness::from_json(&read(file)?)?;
            json!({
                "verified": verify_witness(&w)?,
                "characteristic": w.ctx.spec().characteristic(),
                "n": w.ctx.n(),
                "d": w.d,
            })
        }
        Command::Grid { chars, n_range, d_range } => {
            let mut rows = Vec::new();
            for &p in chars {
                let spec = FieldSpec::new(p)?;
                for n in n_range.clone() {
                    for d in d_range.clone() {
                        let v = is_simple(spec, n, d)?;
                        rows.push(json!({ "characteristic": p, "n": n, "d": d, "simple": v.simple, "reason": v.reason }));
                    }
                }
            }
            Json::Array(rows)
        }
    })
}

fn pretty(result: &Json) -> String {
    match result {
        Json::String(s) => s.clone(),
        Json::Array(rows) if rows.iter().all(|r| r.is_array()) => rows
            .iter()
            .map(|r| {
                let cells: Vec<&str> = r.as_array().unwrap().iter().filter_map(Json::as_str).collect();
                cells.join("\t")
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => serde_json::to_string_pretty(other).expect("json serializes"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            eprint!("{e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            let reason = e.to_string();
            let reason = reason.lines().next().unwrap_or("").trim_start_matches("error: ");
            println!("{}", json!({ "ok": false, "reason": reason }));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(result) if cli.global.pretty => {
            println!("{}", pretty(&result));
            ExitCode::SUCCESS
        }
        Ok(result) => {
            println!("{}", json!({ "ok": true, "result": result }));
            ExitCode::SUCCESS
        }
        Err(f) if cli.global.pretty => {
            eprintln!("error: {}", f.reason);
            ExitCode::from(f.code)
        }
        Err(f) => {
            println!("{}", json!({ "ok": false, "reason": f.reason }));
            ExitCode::from(f.code)
        }
    }
}
