//! `catgraph`: apply graph functors to JSON files and run law suites.

mod apply;
mod format;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use catgraph_core::verify::suites::{self, SuiteConfig};
use catgraph_core::verify::DEFAULT_BUDGET;
use catgraph_core::Error;
use clap::{Parser, Subcommand};

const BUDGET_VAR: &str = "CATGRAPH_BUDGET";

#[derive(Parser)]
#[command(name = "catgraph", version, about = "Simplification, cosimplification and limits of finite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a functor or limit to graph files.
    Apply {
        #[arg(long)]
        functor: String,
        /// Input file; give it twice for `product` and `coproduct`.
        #[arg(long = "in", required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a law suite, printing one JSON report per instance.
    Check {
        #[arg(long)]
        law: String,
        #[arg(long)]
        max_size: Option<usize>,
        /// Sample instances from this seed instead of enumerating all.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 40)]
        samples: usize,
        /// Raw-assignment cap for hom enumeration (overrides CATGRAPH_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List law suites.
    Laws,
    /// List functors accepted by `apply`.
    Functors,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(String),
    Kind(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Budget { .. } | Error::SizeLimit { .. } => Failure::Budget(msg),
            Error::KindMismatch(_) | Error::NotSimple | Error::NotCosimple | Error::Unsupported { .. } => {
                Failure::Kind(msg)
            }
            _ => Failure::Parse(msg),
        }
    }
}

impl Failure {
    fn report(&self) -> ExitCode {
        let (code, msg) = match self {
            Failure::Usage(m) | Failure::Parse(m) => (2, m),
            Failure::Kind(m) => (3, m),
            Failure::Budget(m) => (4, m),
        };
        eprintln!("error: {msg}");
        ExitCode::from(code)
    }
}

fn read(path: &Path) -> Result<format::Doc, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    format::parse(&text, &path.display().to_string())
}

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_VAR}={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Apply { functor, inputs, out } => {
            let docs = inputs.iter().map(|p| read(p)).collect::<Result<Vec<_>, _>>()?;
            let result = apply::apply(&functor, &docs)?;
            std::fs::write(&out, format::emit(&result))
                .map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            law,
            max_size,
            seed,
            samples,
            budget: flag,
        } => {
            let cfg = SuiteConfig {
                max_size,
                seed,
                samples,
                budget: budget(flag)?,
            };
            let reports = suites::run(&law, &cfg)
                .ok_or_else(|| Failure::Usage(format!("unknown law `{law}`; see `catgraph laws`")))??;
            for r in &reports {
                println!("{}", serde_json::to_string(r).expect("reports serialize"));
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            eprintln!("{law}: {} instances, {failed} failed", reports.len());
            Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Laws => {
            for s in suites::SUITES {
                println!("{:<26} {}", s.name, s.about);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Functors => {
            for f in apply::FUNCTORS {
                println!("{f}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => f.report(),
    }
}
