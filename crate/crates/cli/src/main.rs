//! `sfkit`: identity checks and function evaluation from the command line.
//!
//! Exit codes: 0 when everything passes, 1 on any failed check or numerical
//! error, 2 on invalid input.

mod check;
mod config;
mod eval;
mod report;
mod sweep;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sfkit::identities::registry;

use config::{parse_kv, Format, RawConfig, UsageError};

#[derive(Parser)]
#[command(name = "sfkit", version, about = "Special-function identity checker")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check registered identities on seeded random parameters.
    Check(CheckArgs),
    /// Evaluate one function, e.g. `sfkit eval gamma2 u=0.3+0.1i b=1+0.2i`.
    Eval {
        function: String,
        /// key=value arguments
        args: Vec<String>,
    },
    /// Tabulate a degeneration limit, e.g. `sfkit sweep b_to_i n=0 x=-i`.
    Sweep {
        limit: String,
        /// key=value arguments
        args: Vec<String>,
    },
    /// List identities, functions and limits.
    List,
}

#[derive(Args)]
struct CheckArgs {
    /// Identity id; repeatable or comma-separated, `all` for the whole registry.
    #[arg(long = "id", value_delimiter = ',')]
    ids: Vec<String>,
    /// Seeds: `1,2,3`, `1..3` or `1..=3` (ranges inclusive).
    #[arg(long)]
    seeds: Option<String>,
    /// Override the per-identity tolerance.
    #[arg(long)]
    tol: Option<String>,
    #[arg(long)]
    n_max: Option<String>,
    #[arg(long)]
    y_max: Option<String>,
    /// Output format (csv or json).
    #[arg(long)]
    format: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Worker threads; defaults to SFKIT_JOBS, then the core count.
    #[arg(long)]
    jobs: Option<String>,
    /// Flat key=value file with the same keys as the flags; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl CheckArgs {
    fn into_raw(self) -> (Option<PathBuf>, RawConfig) {
        let raw = RawConfig {
            ids: self.ids.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
            seeds: self.seeds,
            tol: self.tol,
            n_max: self.n_max,
            y_max: self.y_max,
            format: self.format,
            out: self.out,
            jobs: self.jobs,
        };
        (self.config, raw)
    }
}

enum Failure {
    Usage(UsageError),
    Io(String),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn run_check(args: CheckArgs) -> Result<bool, Failure> {
    let (path, flags) = args.into_raw();
    let base = match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| UsageError(format!("cannot read config {}: {e}", p.display())))?;
            RawConfig::from_text(&text)?
        }
        None => RawConfig::default(),
    };
    let ids: Vec<&str> = registry().iter().map(|d| d.id).collect();
    let cfg = base.overlay(flags).validate(&ids)?;
    let records = check::run(&cfg).map_err(|e| Failure::Io(e.to_string()))?;
    for r in records.iter().filter_map(|r| r.error.as_ref().map(|e| (r, e))) {
        eprintln!("{} seed {}: {}", r.0.id, r.0.seed, r.1);
    }
    let text = match cfg.format {
        Format::Csv => report::csv(&records),
        Format::Json => report::json(&cfg, &records),
    };
    emit(cfg.out.as_ref(), &text)?;
    Ok(records.iter().all(|r| r.pass))
}

fn run_eval(function: &str, args: &[String]) -> Result<bool, Failure> {
    match eval::eval(function, parse_kv(args)?)? {
        eval::Outcome::Value(v) => {
            emit(None, &format!("{}\n", eval::render(v)))?;
            Ok(true)
        }
        eval::Outcome::Failed(e) => {
            eprintln!("{function}: {e}");
            Ok(false)
        }
    }
}

fn run_sweep(limit: &str, args: &[String]) -> Result<bool, Failure> {
    match sweep::sweep(limit, parse_kv(args)?)? {
        sweep::Outcome::Table(t) => {
            emit(None, &t)?;
            Ok(true)
        }
        sweep::Outcome::Failed(e) => {
            eprintln!("{limit}: {e}");
            Ok(false)
        }
    }
}

fn list() -> Result<bool, Failure> {
    let mut s = String::from("identities:\n");
    for d in registry() {
        s += &format!("  {:<28} {:<10} tol {:e}\n", d.id, d.kind.to_string(), d.tolerance);
    }
    s += "functions:\n";
    for (f, a) in eval::FUNCTIONS {
        s += &format!("  {f:<16} {a}\n");
    }
    s += "limits:\n";
    for (f, a) in sweep::LIMITS {
        s += &format!("  {f:<16} {a}\n");
    }
    emit(None, &s)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.cmd {
        Cmd::Check(a) => run_check(a),
        Cmd::Eval { function, args } => run_eval(&function, &args),
        Cmd::Sweep { limit, args } => run_sweep(&limit, &args),
        Cmd::List => list(),
    };
    match r {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
