//! `qschur`: products, verification suites and exports.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input, I/O errors or resource limits.

#![forbid(unsafe_code)]

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qcli::product::{product, Operand};
use qcli::suites::{self, RunConfig, Suite};
use qcli::{export, CliError};

#[derive(Parser)]
#[command(
    name = "qschur",
    version,
    about = "Exact computations in queer q-Schur superalgebras"
)]
struct Cli {
    /// Worker threads (default: QSCHUR_THREADS, else all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two basis elements; compares any closed formula with the oracle.
    Product {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: i32,
        /// JSON super-matrix, `identity`, or a shape such as `E 1 lambda=[0,1]`.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Run a verification suite; prints one line per check and writes a JSON report.
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Largest degree; same as --rmax.
        #[arg(long, conflicts_with = "rmax")]
        r: Option<i32>,
        #[arg(long)]
        rmax: Option<i32>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// JSON report path (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write table.json and transition.json for one degree.
    Export {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        r: i32,
        #[arg(long, default_value = "qschur-export")]
        out: PathBuf,
    },
}

fn threads(jobs: Option<usize>) -> Result<(), CliError> {
    let env = std::env::var("QSCHUR_THREADS").ok();
    let jobs = match (jobs, env) {
        (Some(j), _) => Some(j),
        (None, Some(v)) => Some(
            v.parse()
                .map_err(|_| CliError::Parse(format!("QSCHUR_THREADS=`{v}` is not a count")))?,
        ),
        (None, None) => None,
    };
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Limit(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    threads(cli.jobs)?;
    match cli.command {
        Command::Product { n, r, left, right } => {
            let out = product(&Operand::parse(&left)?, &Operand::parse(&right)?, n, r)?;
            println!("{}", out.render());
            Ok(out.matches())
        }
        Command::Verify {
            suite,
            n,
            r,
            rmax,
            seed,
            out,
        } => {
            let rmax = rmax.or(r).unwrap_or(2);
            let cfg = RunConfig::new(suite.parse()?, n, rmax, seed)?;
            let report = suites::run(&cfg);
            for check in &report.checks {
                eprintln!("{check}");
            }
            let json = serde_json::to_string_pretty(&report)?;
            match out {
                Some(path) => std::fs::write(path, json)?,
                None => println!("{json}"),
            }
            if report.has_errors() {
                return Err(CliError::Limit(
                    "some checks could not run; see the report".into(),
                ));
            }
            Ok(report.passed())
        }
        Command::Export { n, r, out } => {
            for path in export::export(n, r, &out)? {
                println!("{}", path.display());
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qschur: {e}");
            ExitCode::from(2)
        }
    }
}
