//! `germ`: exact classification, certification, flows, and roots of
//! power-series germs on the command line.
//!
//! Every subcommand prints a single JSON document on standard output.
//! Exit codes: 0 for success or a PASS verdict, 2 for a FAIL verdict or a
//! negative decision (not equivalent, does not commute), 1 for usage,
//! parse, and domain errors.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use germ_core::json as gjson;
use germ_core::series::{Germ, TruncatedSeries};
use germ_core::{
    centralizer_element, certify_general, certify_integral, check_commute, check_conjugacy,
    choose_q_exponent, classify, embedding_field, flow_coefficients, flow_integrality_check,
    iterate, nth_root, parse_rat, sigma_property_suite, CommuteCheck, ConjugacyOutcome,
    InvariantMismatch, Rat, SigmaParams, VectorField,
};

/// Working order used when neither the file nor the flags pin one.
const DEFAULT_ORDER: usize = 24;

#[derive(Parser)]
#[command(
    name = "germ",
    version,
    about = "Exact-arithmetic classification of power-series germs tangent to the identity, \
             with p-adic certificates, formal flows, and compositional roots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OrderArg {
    /// Working truncation order (defaults to the input file's
    /// `truncation_order`, or 24 for plain polynomial files)
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariants (m, mu) and the conjugator to normal form
    Classify {
        /// Series file for a germ tangent to the identity
        file: PathBuf,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Decide whether two germs are conjugate; print the conjugator or the
    /// differing invariant
    Conjugacy {
        file_f: PathBuf,
        file_g: PathBuf,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Check the integral-case margins (n-m)! c_n and (n-m)! A_n at a prime
    CertifyIntegral {
        file: PathBuf,
        /// Prime p of the valuation
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Check the general-case margins with q = p^k, k chosen from the input
    CertifyGeneral {
        file: PathBuf,
        /// Prime p of the valuation
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Print sigma_m / epsilon_m values and run their property suite
    SigmaTable {
        /// Order of tangency m >= 2
        #[arg(long)]
        tangency: usize,
        /// Largest n tabulated and checked
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        /// Largest index-tuple weight checked in the superadditivity part
        #[arg(long, default_value_t = 14)]
        weight_max: usize,
    },
    /// Integrate a vector field to its formal flow
    Flow {
        /// Series file for the field coefficients (v_0 = v_1 = 0); omit to
        /// build the embedding field from --tangency and --mu
        field_file: Option<PathBuf>,
        /// Tangency order m of the embedding field
        #[arg(long)]
        tangency: Option<usize>,
        /// Normal-form coefficient mu of the embedding field (rational)
        #[arg(long)]
        mu: Option<String>,
        /// Also evaluate the time-t map (rational)
        #[arg(long)]
        time: Option<String>,
        /// Also check flow integrality at this prime
        #[arg(long)]
        prime: Option<u64>,
        /// Conjugate the field by r*x before integrating (rational), the
        /// rescaling that drives coefficients into the ring of integers
        #[arg(long)]
        rescale: Option<String>,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Extract the tangent-to-identity compositional n-th root
    Root {
        file: PathBuf,
        /// Root index n >= 1
        #[arg(long)]
        root_index: usize,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Produce the time-t element of the centralizer of a germ
    Centralizer {
        file: PathBuf,
        /// Flow time t (rational)
        #[arg(long)]
        time: String,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Check whether two series commute under composition
    Commute {
        file_f: PathBuf,
        file_g: PathBuf,
        #[command(flatten)]
        order: OrderArg,
    },
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl fmt::Display) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }
}

impl From<germ_core::Error> for Failure {
    fn from(e: germ_core::Error) -> Self {
        Failure::usage(e)
    }
}

type CliResult = Result<u8, Failure>;

fn load_series(path: &Path, requested: Option<usize>) -> Result<TruncatedSeries, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let document = gjson::parse_series_document(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let order = match (requested, document.explicit_order) {
        (Some(r), Some(stated)) if r > stated => {
            return Err(Failure::usage(format!(
                "{}: cannot extend truncation order {stated} to {r}; \
                 coefficients beyond {stated} are unknown",
                path.display()
            )));
        }
        (Some(r), _) => r,
        (None, Some(stated)) => stated,
        (None, None) => document.max_degree().max(DEFAULT_ORDER),
    };
    if order < 1 {
        return Err(Failure::usage("truncation order must be at least 1"));
    }
    document
        .to_series(order)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_germ(path: &Path, requested: Option<usize>) -> Result<Germ, Failure> {
    let series = load_series(path, requested)?;
    Germ::new(series).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_field(path: &Path, requested: Option<usize>) -> Result<VectorField, Failure> {
    let series = load_series(path, requested)?;
    VectorField::new(series).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse_rational_arg(name: &str, text: &str) -> Result<Rat, Failure> {
    parse_rat(text).map_err(|e| Failure::usage(format!("--{name}: {e}")))
}

fn emit(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Classify { file, order } => {
            let germ = load_germ(&file, order.order)?;
            let classification = classify(&germ)?;
            emit(&gjson::classification_to_value(&classification));
            Ok(0)
        }
        Command::Conjugacy {
            file_f,
            file_g,
            order,
        } => {
            let f = load_germ(&file_f, order.order)?;
            let g = load_germ(&file_g, order.order)?;
            match check_conjugacy(&f, &g)? {
                ConjugacyOutcome::Equivalent { conjugator } => {
                    emit(&json!({
                        "equivalent": true,
                        "conjugator": gjson::series_to_value(&conjugator),
                    }));
                    Ok(0)
                }
                ConjugacyOutcome::NotEquivalent(mismatch) => {
                    let detail = match mismatch {
                        InvariantMismatch::TangencyOrder { left, right } => json!({
                            "invariant": "m", "left": left, "right": right,
                        }),
                        InvariantMismatch::NormalFormCoefficient { left, right } => json!({
                            "invariant": "mu",
                            "left": left.to_string(),
                            "right": right.to_string(),
                        }),
                    };
                    emit(&json!({"equivalent": false, "mismatch": detail}));
                    Ok(2)
                }
            }
        }
        Command::CertifyIntegral { file, prime, order } => {
            let germ = load_germ(&file, order.order)?;
            let classification = classify(&germ)?;
            let report = certify_integral(&classification, prime)?;
            emit(&gjson::report_to_value(&report));
            Ok(if report.passed() { 0 } else { 2 })
        }
        Command::CertifyGeneral { file, prime, order } => {
            let germ = load_germ(&file, order.order)?;
            let k = choose_q_exponent(germ.series(), prime)?;
            let classification = classify(&germ)?;
            let report = certify_general(&classification, prime, k)?;
            emit(&gjson::report_to_value(&report));
            Ok(if report.passed() { 0 } else { 2 })
        }
        Command::SigmaTable {
            tangency,
            n_max,
            weight_max,
        } => {
            let params = SigmaParams::new(tangency)?;
            let suite = sigma_property_suite(tangency, n_max, weight_max)?;
            let table: Vec<Value> = ((tangency + 1)..=n_max)
                .map(|n| {
                    json!({
                        "n": n,
                        "epsilon": params.epsilon(n).to_string(),
                        "sigma": params.sigma(n),
                    })
                })
                .collect();
            emit(&json!({
                "m": tangency,
                "table": table,
                "suite": gjson::sigma_suite_to_value(&suite),
            }));
            Ok(if suite.passed() { 0 } else { 2 })
        }
        Command::Flow {
            field_file,
            tangency,
            mu,
            time,
            prime,
            rescale,
            order,
        } => {
            let mut field = match (field_file, tangency, mu) {
                (Some(path), None, None) => load_field(&path, order.order)?,
                (None, Some(m), Some(mu_text)) => {
                    if m < 2 {
                        return Err(Failure::usage("--tangency must be at least 2"));
                    }
                    let mu = parse_rational_arg("mu", &mu_text)?;
                    let n = order.order.unwrap_or(DEFAULT_ORDER);
                    if n < 2 * m - 1 {
                        return Err(Failure::usage(format!(
                            "--order must be at least 2m-1 = {}",
                            2 * m - 1
                        )));
                    }
                    embedding_field(m, &mu, n)
                }
                _ => {
                    return Err(Failure::usage(
                        "provide either a field file or both --tangency and --mu",
                    ));
                }
            };
            let mut document = serde_json::Map::new();
            if let Some(text) = rescale {
                let r = parse_rational_arg("rescale", &text)?;
                field = germ_core::rescale_field(&field, &r);
                document.insert("rescale".into(), Value::String(r.to_string()));
            }
            let flow = flow_coefficients(&field);
            document.insert("field".into(), gjson::field_to_value(&field));
            document.insert("flow".into(), gjson::flow_to_value(&flow));
            if let Some(text) = time {
                let t = parse_rational_arg("time", &text)?;
                document.insert(
                    "time_map".into(),
                    gjson::germ_to_value(&flow.time_map(&t)),
                );
            }
            let mut code = 0;
            if let Some(p) = prime {
                let report = flow_integrality_check(&flow, p).map_err(|e| {
                    // surface the rescaling that would make the check apply
                    match germ_core::integralizing_scale_exponent(&field, p) {
                        Ok(k) if k > 0 => {
                            let r = germ_core::rational::rat_pow(&germ_core::rat(p as i64), k);
                            Failure::usage(format!(
                                "{e}; rerun with --rescale {r} to push the field into the \
                                 ring of integers (coefficients become r^(n-1) v_n)"
                            ))
                        }
                        _ => Failure::usage(e),
                    }
                })?;
                if !report.passed() {
                    code = 2;
                }
                document.insert("integrality".into(), gjson::report_to_value(&report));
            }
            emit(&Value::Object(document));
            Ok(code)
        }
        Command::Root {
            file,
            root_index,
            order,
        } => {
            let germ = load_germ(&file, order.order)?;
            let root = nth_root(&germ, root_index)?;
            debug_assert_eq!(iterate(&root, root_index), germ);
            emit(&gjson::germ_to_value(&root));
            Ok(0)
        }
        Command::Centralizer { file, time, order } => {
            let germ = load_germ(&file, order.order)?;
            let t = parse_rational_arg("time", &time)?;
            let element = centralizer_element(&germ, &t)?;
            emit(&gjson::germ_to_value(&element));
            Ok(0)
        }
        Command::Commute {
            file_f,
            file_g,
            order,
        } => {
            let f = load_series(&file_f, order.order)?;
            let g = load_series(&file_g, order.order)?;
            match check_commute(&f, &g)? {
                CommuteCheck::Pass => {
                    emit(&json!({"commute": true}));
                    Ok(0)
                }
                CommuteCheck::Fail { degree, fg, gf } => {
                    emit(&json!({
                        "commute": false,
                        "first_difference": {
                            "degree": degree,
                            "fg": fg.to_string(),
                            "gf": gf.to_string(),
                        },
                    }));
                    Ok(2)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    // die on SIGPIPE like other unix filters instead of panicking when the
    // consumer closes stdout early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    // clap exits with 2 on usage errors by default; the report contract
    // reserves 2 for FAIL verdicts, so usage problems map to 1 here.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
