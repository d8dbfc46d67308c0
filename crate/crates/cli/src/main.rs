//! `fdrlab`: simultaneous one-sample t tests with false discovery rate
//! control, from the command line.
//!
//! Exit codes: 0 success, 2 input or configuration error, 3 numeric
//! failure (degenerate columns, infeasible truncation).

mod commands;
mod config;
mod input;
mod report;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fdrlab::Error;

#[derive(Debug, Parser)]
#[command(name = "fdrlab", version, about = "Large-scale t testing with FDR control")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test every column of a data file and apply the step-up procedure.
    Test(commands::TestArgs),
    /// Run a replicated simulation grid.
    Simulate(commands::SimulateArgs),
    /// Print the cross-validated risk curve of the truncation level.
    Lambda(commands::LambdaArgs),
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Numeric(String),
}

impl Failure {
    pub fn from_lib(e: Error) -> Self {
        // library indices are zero-based; files are read one-based
        let msg = match &e {
            Error::DegenerateColumn(c) => format!("column {} has zero variance", c + 1),
            Error::AllTruncated(c) => format!("column {} is constant after truncation", c + 1),
            Error::DegenerateResample { column, attempts } => {
                format!("column {}: bootstrap resample stayed constant after {attempts} draws", column + 1)
            }
            Error::NonFiniteEntry { row, col } => format!("non-finite entry at row {}, column {}", row + 1, col + 1),
            other => other.to_string(),
        };
        if e.is_numeric() {
            Failure::Numeric(msg)
        } else {
            Failure::Input(msg)
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Numeric(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Numeric(m) => f.write_str(m),
        }
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Test(a) => commands::cmd_test(a),
        Command::Simulate(a) => commands::cmd_simulate(a),
        Command::Lambda(a) => commands::cmd_lambda(a),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.threads {
        None => dispatch(cli.command),
        Some(0) => Err(Failure::Input("--threads must be at least 1".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Failure::Input(format!("thread pool: {e}")))?
            .install(|| dispatch(cli.command)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
