//! `ccv`: conic-connectedness checks for projective varieties.
//!
//! Exit codes: 0 success (including empty results), 2 invalid input, 3 refused computation.

mod render;

use std::path::PathBuf;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use ccv_core::conicfinder::{conic_system, count_conics, find_singular_conics, SearchMode};
use ccv_core::fforacle::{FfVariety, DEFAULT_POINT_CAP};
use ccv_core::linelocus::{line_locus, lines_dimension_report};
use ccv_core::variety::{classify_line_family, criteria_report, load_variety, VarietySpec};
use ccv_core::Error;

#[derive(Parser, Debug)]
#[command(name = "ccv", version, about = "Conic-connectedness checks for projective varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Emit a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the numeric criteria for a variety.
    Check {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Lines through a point: the cone they sweep and a = dim L_x.
    Lines {
        file: PathBuf,
        /// Comma-separated coordinates, e.g. 1,0,0,0.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[command(flatten)]
        common: Common,
    },
    /// Singular conics through two points, and their count.
    Conics {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Only report the ideal degree and the formula.
        #[arg(long)]
        count_only: bool,
        /// List vertices by exhaustive scan over GF(p) instead of solving over the base field.
        #[arg(long)]
        prime: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Census of point pairs over GF(p).
    Oracle {
        file: PathBuf,
        #[arg(long)]
        prime: u32,
        #[arg(long, default_value_t = 50)]
        pairs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Classify line-family invariants (n, c, a) with optional secant defect and index.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        delta: Option<i64>,
        #[arg(long)]
        index: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
}

/// The fully resolved invocation, echoed with every result.
#[derive(Debug, Clone, Serialize, Default)]
pub struct RunConfig {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_only: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point_cap: Option<String>,
    pub format: &'static str,
}

enum Failure {
    Input(String),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_refusal() {
            Failure::Refused(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn point_cap() -> Result<u128, Failure> {
    match std::env::var("CCV_POINT_CAP") {
        Ok(v) => v
            .trim()
            .parse::<u128>()
            .map_err(|_| Failure::Input(format!("CCV_POINT_CAP must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_POINT_CAP),
    }
}

fn load(file: &std::path::Path) -> Result<VarietySpec, Failure> {
    let spec = load_variety(file)?;
    Ok(spec)
}

fn emit(config: &RunConfig, json: bool, value: serde_json::Value, text: String, warnings: &[String]) {
    let out = if json {
        let doc = json!({ "command": config.command, "config": config, "warnings": warnings, "result": value });
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    } else {
        for w in warnings {
            eprintln!("warning: {w}");
        }
        render::config_line(config) + &text
    };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { file, common } => {
            let spec = load(&file)?;
            let config = RunConfig {
                command: "check",
                file: Some(file.display().to_string()),
                format: format_name(common.json),
                ..Default::default()
            };
            let report = criteria_report(&spec);
            emit(&config, common.json, to_value(&report), render::criteria(&report), &spec.warnings);
        }
        Command::Lines { file, point, common } => {
            let spec = load(&file)?;
            let pt = spec.parse_point(&point)?;
            let config = RunConfig {
                command: "lines",
                file: Some(file.display().to_string()),
                point: Some(pt.to_string()),
                format: format_name(common.json),
                ..Default::default()
            };
            let locus = line_locus(&spec, &pt)?;
            let report = lines_dimension_report(&locus, &spec);
            let value = json!({ "locus": locus, "report": report });
            emit(&config, common.json, value, render::lines(&locus, &report), &spec.warnings);
        }
        Command::Conics { file, x, y, count_only, prime, common } => {
            let spec = load(&file)?;
            let (a, b) = (spec.parse_point(&x)?, spec.parse_point(&y)?);
            let cap = point_cap()?;
            let config = RunConfig {
                command: "conics",
                file: Some(file.display().to_string()),
                x: Some(a.to_string()),
                y: Some(b.to_string()),
                prime,
                count_only: Some(count_only),
                point_cap: prime.map(|_| cap.to_string()),
                format: format_name(common.json),
                ..Default::default()
            };
            let system = conic_system(&spec, &a, &b)?;
            let search = if count_only {
                None
            } else {
                let mode = prime.map_or(SearchMode::Symbolic, SearchMode::FiniteField);
                Some(find_singular_conics(&spec, &a, &b, mode, cap)?)
            };
            let count = count_conics(&spec, &a, &b)?;
            let value = json!({ "system": system, "search": search, "count": count });
            emit(&config, common.json, value, render::conics(&system, search.as_ref(), &count), &spec.warnings);
        }
        Command::Oracle { file, prime, pairs, seed, common } => {
            let spec = load(&file)?;
            let cap = point_cap()?;
            let config = RunConfig {
                command: "oracle",
                file: Some(file.display().to_string()),
                prime: Some(prime),
                pairs: Some(pairs),
                seed: Some(seed),
                point_cap: Some(cap.to_string()),
                format: format_name(common.json),
                ..Default::default()
            };
            let reduced = if spec.field == ccv_core::exactmath::Field::Prime(prime) { spec.clone() } else { spec.reduce_mod(prime)? };
            let stats = FfVariety::new(&reduced, prime, cap)?.cc_census(pairs, seed)?;
            emit(&config, common.json, to_value(&stats), render::census(&stats), &reduced.warnings);
        }
        Command::Classify { n, c, a, delta, index, common } => {
            let config = RunConfig {
                command: "classify",
                n: Some(n),
                c: Some(c),
                a: Some(a),
                delta,
                index,
                format: format_name(common.json),
                ..Default::default()
            };
            if n < 1 || c < 1 || a < 0 {
                return Err(Failure::Input(format!("need n ≥ 1, c ≥ 1, a ≥ 0; got n={n}, c={c}, a={a}")));
            }
            let report = classify_line_family(n, c, a, delta, index);
            emit(&config, common.json, to_value(&report), render::classification(&report), &[]);
        }
    }
    Ok(())
}

fn format_name(json: bool) -> &'static str {
    if json {
        "json"
    } else {
        "text"
    }
}

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
    }
}
