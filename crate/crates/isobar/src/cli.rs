//! The `isobar` command-line surface: one verb per library operation plus
//! a `verify` mode that runs the identity suites.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::{evaluate_global, rational_power, CoreFunctionSpec};
use crate::error::Error;
use crate::partition::{parse_partition, Partition};
use crate::poly::IsobaricPolynomial;
use crate::rational::{format_rational, parse_rational, Rat};
use crate::roots::{level_inverse, level_product, root, root_sequence, RootQuery};
use crate::schur::{character_table, hook_reflect, schur_reflect, SchurBasis};
use crate::sequence::IsobaricSequence;
use crate::verify::run_all;
use crate::weights::{parse_weight_spec, wip, WeightPattern};

#[derive(Parser)]
#[command(
    name = "isobar",
    version,
    about = "Exact computer algebra for weighted isobaric polynomials",
    arg_required_else_help = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    /// Signed elementary determinant over the conjugate shape.
    E,
    /// Determinant of GFPs over the shape itself.
    H,
}

#[derive(Subcommand)]
enum Command {
    /// The weighted isobaric polynomial P_{n,ω}.
    Wip {
        #[arg(long)]
        n: usize,
        /// Truncation: variables beyond t_k are zero (defaults to n).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = weights_arg, allow_hyphen_values = true)]
        weights: WeightPattern,
    },
    /// The Schur reflect of a partition, e.g. --lambda 3,2.
    Schur {
        #[arg(long, value_parser = lambda_arg)]
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = BasisArg::E)]
        basis: BasisArg,
    },
    /// The hook reflect of shape (n−r, 1^r).
    Hooks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// The level-n slice of the q-th level root H_{k,n,ω}.
    Root {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = weights_arg, allow_hyphen_values = true)]
        weights: WeightPattern,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        q: Rat,
    },
    /// Level product of the root sequences H(ω,q) and H(ω,q2), levels 0..n.
    Levelmul {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = weights_arg, allow_hyphen_values = true)]
        weights: WeightPattern,
        #[arg(long, value_parser = rat_arg, default_value = "1", allow_hyphen_values = true)]
        q: Rat,
        #[arg(long, value_parser = rat_arg, default_value = "1", allow_hyphen_values = true)]
        q2: Rat,
    },
    /// Level-product inverse of the root sequence H(ω,q), levels 0..n.
    Levelinv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = weights_arg, allow_hyphen_values = true)]
        weights: WeightPattern,
        #[arg(long, value_parser = rat_arg, default_value = "1", allow_hyphen_values = true)]
        q: Rat,
    },
    /// A core multiplicative function: local values at p^0..p^n (--n) or
    /// the global value at an integer (--m).
    Arith {
        /// Core polynomial coefficients, e.g. --coeffs 1,1.
        #[arg(long, value_parser = coeffs_arg, allow_hyphen_values = true)]
        coeffs: RatList,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<u64>,
        /// Convolution power, an exact fraction.
        #[arg(long, value_parser = rat_arg, default_value = "1", allow_hyphen_values = true)]
        q: Rat,
    },
    /// The character table of Sym(n).
    Chartable {
        #[arg(long)]
        n: usize,
    },
    /// Run the identity suites; nonzero exit if any check fails.
    Verify {
        /// Seed for the random-instance suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone)]
struct RatList(Vec<Rat>);

fn weights_arg(s: &str) -> Result<WeightPattern, String> {
    parse_weight_spec(s).map_err(|e| e.to_string())
}

fn lambda_arg(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| e.to_string())
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn coeffs_arg(s: &str) -> Result<RatList, String> {
    s.split(',')
        .map(|c| parse_rational(c).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map(RatList)
}

/// Renders a polynomial in the requested output format.
pub fn format_poly(p: &IsobaricPolynomial, json: bool) -> String {
    if json {
        p.to_json_string()
    } else {
        p.to_string()
    }
}

enum RunError {
    Usage(String),
    Computation(String),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Computation(e.to_string())
    }
}

/// Entry point: parses, dispatches, prints. Exit code 0 on success, 1 on a
/// computation error or failed verification, 2 on a usage error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let json = cli.format == OutputFormat::Json;
    let (output, code) = match execute(&cli.command, json) {
        Ok(pair) => pair,
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
        Err(RunError::Computation(msg)) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, output + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => println!("{output}"),
    }
    code
}

fn execute(command: &Command, json: bool) -> Result<(String, i32), RunError> {
    match command {
        Command::Wip { n, k, weights } => {
            let k = effective_k(*k, *n)?;
            let omega = weights.vector((*n).min(k))?;
            Ok((format_poly(&wip(*n, k, &omega)?, json), 0))
        }
        Command::Schur { lambda, basis } => {
            let basis = match basis {
                BasisArg::E => SchurBasis::Elementary,
                BasisArg::H => SchurBasis::Homogeneous,
            };
            Ok((format_poly(&schur_reflect(lambda, basis), json), 0))
        }
        Command::Hooks { n, r } => Ok((format_poly(&hook_reflect(*n, *r)?, json), 0)),
        Command::Root { n, k, weights, q } => {
            let k = effective_k(*k, *n)?;
            let omega = weights.vector((*n).min(k))?;
            let h = root(&RootQuery { n: *n, k, omega, q: q.clone() })?;
            Ok((format_poly(&h, json), 0))
        }
        Command::Levelmul { n, k, weights, q, q2 } => {
            let k = effective_k(*k, *n)?;
            let omega = weights.vector((*n).min(k))?;
            let a = root_sequence(k, *n, &omega, q)?;
            let b = root_sequence(k, *n, &omega, q2)?;
            Ok((format_sequence(&level_product(&a, &b)?, json), 0))
        }
        Command::Levelinv { n, k, weights, q } => {
            let k = effective_k(*k, *n)?;
            let omega = weights.vector((*n).min(k))?;
            let h = root_sequence(k, *n, &omega, q)?;
            Ok((format_sequence(&level_inverse(&h)?, json), 0))
        }
        Command::Arith { coeffs, n, m, q } => {
            let spec = CoreFunctionSpec::new(coeffs.0.clone())?;
            match (m, n) {
                (Some(m), _) => {
                    let value = evaluate_global(&spec, q, *m)?;
                    let text = if json {
                        format!(r#"{{"m":{m},"value":"{}"}}"#, format_rational(&value))
                    } else {
                        format_rational(&value)
                    };
                    Ok((text, 0))
                }
                (None, Some(n)) => {
                    let local = rational_power(&spec, q, *n)?;
                    let text = if json {
                        serde_json::to_string(
                            &local.values().iter().map(format_rational).collect::<Vec<_>>(),
                        )
                        .expect("string array serialization cannot fail")
                    } else {
                        local
                            .values()
                            .iter()
                            .enumerate()
                            .map(|(i, v)| format!("{i}: {}", format_rational(v)))
                            .collect::<Vec<_>>()
                            .join("\n")
                    };
                    Ok((text, 0))
                }
                (None, None) => {
                    Err(RunError::Usage("arith needs --n (local values) or --m (global value)".into()))
                }
            }
        }
        Command::Chartable { n } => {
            let table = character_table(*n)?;
            let text = if json { table.to_json_string() } else { table.to_string() };
            Ok((text, 0))
        }
        Command::Verify { seed } => {
            let reports = run_all(*seed);
            let all_passed = reports.iter().all(|r| r.passed());
            let text = if json {
                let values: Vec<serde_json::Value> = reports
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "suite": r.name,
                            "checks": r.checks,
                            "failed": r.failed,
                            "samples": r.samples,
                        })
                    })
                    .collect();
                serde_json::to_string(&values).expect("report serialization cannot fail")
            } else {
                let mut lines = Vec::new();
                for r in &reports {
                    let status = if r.passed() {
                        "ok".to_string()
                    } else {
                        format!("{} FAILED", r.failed)
                    };
                    lines.push(format!("{:<22} {:>6} checks  {status}", r.name, r.checks));
                    for sample in &r.samples {
                        lines.push(format!("    {sample}"));
                    }
                }
                let total: u64 = reports.iter().map(|r| r.checks).sum();
                let failed: u64 = reports.iter().map(|r| r.failed).sum();
                lines.push(format!(
                    "{} suites, {total} checks, {failed} failures",
                    reports.len()
                ));
                lines.join("\n")
            };
            Ok((text, if all_passed { 0 } else { 1 }))
        }
    }
}

fn effective_k(k: Option<usize>, n: usize) -> Result<usize, RunError> {
    let k = k.unwrap_or(n.max(1));
    if k == 0 {
        return Err(RunError::Usage("k must be at least 1".into()));
    }
    Ok(k)
}

fn format_sequence(seq: &IsobaricSequence, json: bool) -> String {
    if json {
        let polys: Vec<serde_json::Value> = seq
            .polys()
            .iter()
            .map(|p| {
                serde_json::from_str(&p.to_json_string())
                    .expect("polynomial JSON round-trips")
            })
            .collect();
        serde_json::json!({
            "truncation_k": seq.truncation_k(),
            "polys": polys,
        })
        .to_string()
    } else {
        seq.polys()
            .iter()
            .enumerate()
            .map(|(n, p)| format!("{n}: {p}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}
