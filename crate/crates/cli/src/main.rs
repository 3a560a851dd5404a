mod args;
mod commands;
mod config;
mod error;
mod json;
mod output;

use std::process::ExitCode;

use anyhow::anyhow;
use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult};

const THREADS_VAR: &str = "EDGEFORGE_THREADS";

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = match raw.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => {
            return Err(CliError::input(anyhow!(
                "{THREADS_VAR} must be a positive integer, got '{raw}'"
            )))
        }
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::from(anyhow!("configuring thread pool: {e}")))
}

fn run(cli: Cli) -> CliResult<()> {
    configure_threads()?;
    match &cli.command {
        Command::Gradient(a) => commands::gradient(a),
        Command::Canny(a) => commands::canny(a),
        Command::Compare(a) => commands::compare(a),
        Command::Kernels(a) => commands::kernels(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
