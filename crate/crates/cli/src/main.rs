//! `qspace`: quantum-space Poincaré series toolkit.
//!
//! Every subcommand reads JSON (spec or series files, inline JSON flags) and
//! writes a single JSON document to stdout with sorted keys, so identical
//! inputs produce byte-identical payloads. Exit codes: 0 success, 1 domain
//! error (with a structured `{"error": ...}` object on stdout), 2 malformed
//! input or usage.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qspace_core::{
    check_p_sequence, classify, comodule_dims, e_series_via_dims, e_series_via_star, hecke_sum,
    kostka, lr_coefficient, schur_value, skew_schur_value, super_schur_value, Partition,
    QuantumSpaceSpec, Rat, SkewShape, TruncatedSeries,
};

#[derive(Parser)]
#[command(
    name = "qspace",
    version,
    about = "Poincaré series of quantum spaces, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dual series q(t) = 1/p(-t) of a truncated series
    Dual {
        /// JSON series file {"order": N, "coeffs": [...]}
        #[arg(long)]
        series: PathBuf,
        /// Truncation order of the output (capped at the file's order)
        #[arg(long)]
        order: usize,
    },
    /// Simple-comodule dimension table of a quantum-space spec
    Dims {
        /// JSON spec file {"roots": [...], "poles": [...], "q": "..."}
        #[arg(long)]
        spec: PathBuf,
        #[arg(long = "max-weight")]
        max_weight: usize,
    },
    /// Bialgebra series P_E, by either or both routes
    #[command(name = "e-series")]
    ESeries {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        order: usize,
        /// dims: sum of squared comodule dimensions; star: P_S ⋆ P_S;
        /// both: run both and assert agreement
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Rank / super-rank classification with bounds and diagnostics
    Classify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long = "max-weight")]
        max_weight: usize,
    },
    /// Bounded total-positivity (P-sequence) check of a series
    #[command(name = "check-tp")]
    CheckTp {
        #[arg(long)]
        series: PathBuf,
        #[arg(long = "max-order")]
        max_order: usize,
        #[arg(long = "max-index")]
        max_index: usize,
    },
    /// Direct sum of two quantum spaces (series multiply)
    #[command(name = "hecke-sum")]
    HeckeSum {
        /// Spec file; give exactly twice
        #[arg(long = "spec", num_args = 1)]
        specs: Vec<PathBuf>,
    },
    /// Schur (or skew Schur) value at the quantum space's specialization
    Schur {
        #[arg(long)]
        spec: PathBuf,
        /// Outer partition as a JSON array, e.g. '[2,1]'
        #[arg(long)]
        partition: String,
        /// Optional inner partition for a skew shape
        #[arg(long)]
        inner: Option<String>,
    },
    /// Super (hook) Schur value over finite alphabets
    #[command(name = "super-schur")]
    SuperSchur {
        /// JSON array of rationals, e.g. '["1","1/2"]'
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        partition: String,
    },
    /// Kostka number of a shape and a weight composition
    Kostka {
        #[arg(long)]
        shape: String,
        /// JSON array of nonnegative integers, e.g. '[1,1,1]'
        #[arg(long)]
        weight: String,
    },
    /// Littlewood–Richardson coefficient c_{mu,gamma}^lambda
    Lr {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Dims,
    Star,
    Both,
}

enum AppError {
    /// Malformed file, JSON or flag combination: exit 2, message on stderr.
    Input(String),
    /// Domain error: exit 1, structured object on stdout.
    Domain { kind: String, message: String },
}

impl From<qspace_core::Error> for AppError {
    fn from(e: qspace_core::Error) -> Self {
        AppError::Domain {
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| AppError::Input(format!("malformed JSON in {}: {e}", path.display())))
}

fn parse_inline<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T, AppError> {
    serde_json::from_str(text).map_err(|e| AppError::Input(format!("malformed {what}: {e}")))
}

fn to_sorted_value<T: serde::Serialize>(x: &T) -> Value {
    // serde_json maps sort keys, which keeps payloads byte-stable
    serde_json::to_value(x).expect("library types serialize")
}

fn run(command: Command) -> Result<Value, AppError> {
    match command {
        Command::Dual { series, order } => {
            let p: TruncatedSeries = read_json(&series)?;
            let dual = p.truncated(order).dual_series()?;
            Ok(to_sorted_value(&dual))
        }
        Command::Dims { spec, max_weight } => {
            let spec: QuantumSpaceSpec = read_json(&spec)?;
            let table = comodule_dims(&spec, max_weight)?;
            Ok(to_sorted_value(&table))
        }
        Command::ESeries {
            spec,
            order,
            method,
        } => {
            let spec: QuantumSpaceSpec = read_json(&spec)?;
            match method {
                Method::Dims => Ok(
                    json!({ "coeffs": to_sorted_value(&e_series_via_dims(&spec, order).coeffs()) }),
                ),
                Method::Star => Ok(
                    json!({ "coeffs": to_sorted_value(&e_series_via_star(&spec, order).coeffs()) }),
                ),
                Method::Both => {
                    let dims = e_series_via_dims(&spec, order);
                    let star = e_series_via_star(&spec, order);
                    if dims != star {
                        return Err(AppError::Domain {
                            kind: "RouteDisagreement".into(),
                            message: format!("P_E routes disagree: dims {dims:?} vs star {star:?}"),
                        });
                    }
                    Ok(json!({
                        "coeffs": to_sorted_value(&dims.coeffs()),
                        "agreement": true,
                    }))
                }
            }
        }
        Command::Classify { spec, max_weight } => {
            let spec: QuantumSpaceSpec = read_json(&spec)?;
            Ok(to_sorted_value(&classify(&spec, max_weight)))
        }
        Command::CheckTp {
            series,
            max_order,
            max_index,
        } => {
            let p: TruncatedSeries = read_json(&series)?;
            let report = check_p_sequence(p.coeffs(), max_order, max_index)?;
            Ok(to_sorted_value(&report))
        }
        Command::HeckeSum { specs } => {
            if specs.len() != 2 {
                return Err(AppError::Input(format!(
                    "hecke-sum takes exactly two --spec files, got {}",
                    specs.len()
                )));
            }
            let a: QuantumSpaceSpec = read_json(&specs[0])?;
            let b: QuantumSpaceSpec = read_json(&specs[1])?;
            Ok(to_sorted_value(&hecke_sum(&a, &b)?))
        }
        Command::Schur {
            spec,
            partition,
            inner,
        } => {
            let spec: QuantumSpaceSpec = read_json(&spec)?;
            let outer: Partition = parse_inline("partition", &partition)?;
            let sp = spec.specialization(outer.weight().max(1));
            let value = match inner {
                None => schur_value(&sp, &outer)?,
                Some(inner) => {
                    let inner: Partition = parse_inline("inner partition", &inner)?;
                    let shape = SkewShape::new(outer, inner)?;
                    skew_schur_value(&sp, &shape)?
                }
            };
            Ok(json!({ "value": value.to_string() }))
        }
        Command::SuperSchur { x, y, partition } => {
            let x: Vec<Rat> = parse_inline("x values", &x)?;
            let y: Vec<Rat> = parse_inline("y values", &y)?;
            let lambda: Partition = parse_inline("partition", &partition)?;
            let value = super_schur_value(&x, &y, &lambda);
            Ok(json!({ "value": value.to_string() }))
        }
        Command::Kostka { shape, weight } => {
            let lambda: Partition = parse_inline("shape", &shape)?;
            let weight: Vec<usize> = parse_inline("weight", &weight)?;
            Ok(json!({ "value": kostka(&lambda, &weight)? }))
        }
        Command::Lr { mu, gamma, lambda } => {
            let mu: Partition = parse_inline("mu", &mu)?;
            let gamma: Partition = parse_inline("gamma", &gamma)?;
            let lambda: Partition = parse_inline("lambda", &lambda)?;
            Ok(json!({ "value": lr_coefficient(&mu, &gamma, &lambda) }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(payload) => {
            println!("{payload}");
            ExitCode::SUCCESS
        }
        Err(AppError::Domain { kind, message }) => {
            println!(
                "{}",
                json!({ "error": { "kind": kind, "message": message } })
            );
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(AppError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
