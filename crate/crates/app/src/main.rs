use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mbwm_app::error::{AppError, ErrorBody};
use mbwm_app::{oracle_report, report, server, Options};
use mbwm_core::oracle::DEFAULT_TOLERANCE;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "mbwm", version, about = "Closed-form multiplicative Best-Worst Method")]
struct Cli {
    /// Print machine-readable JSON at full precision instead of text tables.
    #[arg(long, global = true)]
    json: bool,

    /// Report CR as (eps* - 1) / (CI - 1).
    #[arg(long, global = true)]
    normalize_cr: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimal consistency, intervals, best modified system and weights.
    Solve { input: PathBuf },
    /// Input-based consistency only; no weights are computed.
    Check { input: PathBuf },
    /// Compare the closed form with the bisection oracle.
    Oracle {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Also run this many random systems through both solvers.
        #[arg(long)]
        fuzz: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Global weights of a two-level hierarchy.
    Hierarchy { input: PathBuf },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// Directory holding the UI bundle, served at /.
        #[arg(long)]
        static_dir: Option<PathBuf>,
    },
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> Result<(), AppError> {
    let out = if json {
        let mut s = serde_json::to_string_pretty(value).map_err(|e| AppError::Internal(e.to_string()))?;
        s.push('\n');
        s
    } else {
        text(value)
    };
    match std::io::stdout().lock().write_all(out.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(AppError::io("stdout", e)),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct OracleOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<oracle_report::OracleComparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fuzz: Option<oracle_report::FuzzSummary>,
}

fn run(cli: Cli) -> Result<(), AppError> {
    let options = Options {
        normalize_cr: cli.normalize_cr,
        ..Options::default()
    };
    match cli.command {
        Command::Solve { input } => {
            let request = mbwm_app::load_request(&input, &options)?;
            let response = mbwm_app::evaluate(&request)?;
            emit(cli.json, &response, report::render_evaluation)
        }
        Command::Check { input } => {
            let request = mbwm_app::load_request(&input, &options)?;
            let response = mbwm_app::check(&request)?;
            emit(cli.json, &response, report::render_check)
        }
        Command::Oracle {
            input,
            tolerance,
            fuzz,
            seed,
        } => {
            if input.is_none() && fuzz.is_none() {
                return Err(AppError::Parse("oracle needs an input file or --fuzz N".into()));
            }
            let comparison = match input {
                Some(path) => {
                    let pcs = mbwm_app::load_request(&path, &options)?.validate()?;
                    Some(oracle_report::compare(&pcs, tolerance)?)
                }
                None => None,
            };
            let fuzz = fuzz.map(|n| oracle_report::fuzz(n, seed, tolerance)).transpose()?;
            emit(cli.json, &OracleOutput { comparison, fuzz }, |o| {
                let mut out = String::new();
                if let Some(c) = &o.comparison {
                    out.push_str(&oracle_report::render_comparison(c));
                }
                if let Some(f) = &o.fuzz {
                    out.push_str(&oracle_report::render_fuzz(f));
                }
                out
            })
        }
        Command::Hierarchy { input } => {
            let doc = mbwm_app::load_hierarchy(&input)?;
            let ranked = mbwm_app::hierarchy_file::evaluate_hierarchy(&doc)?;
            emit(cli.json, &ranked, report::render_hierarchy)
        }
        Command::Serve { port, host, static_dir } => {
            let runtime = tokio::runtime::Runtime::new().map_err(|e| AppError::Internal(e.to_string()))?;
            runtime.block_on(server::serve(SocketAddr::new(host, port), static_dir))
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("MBWM_LOG", "warn")).init();
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if json {
                let body = serde_json::to_string(&ErrorBody::from(&e)).unwrap_or_default();
                eprintln!("{body}");
            } else {
                eprintln!("error: {}: {e}", e.code());
            }
            ExitCode::from(if e.is_validation() { 2 } else { 1 })
        }
    }
}
