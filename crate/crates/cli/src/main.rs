mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Bad input is a usage error; anything that fails after the group and
/// element are accepted is a computation error.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Compute(anyhow::Error),
    /// Report to print before exiting with status 1.
    Checks(String),
}

impl From<coxinv_core::Error> for Failure {
    fn from(e: coxinv_core::Error) -> Self {
        use coxinv_core::Error::*;
        match e {
            InvalidMatrix(_) | BadTypeSymbol(_) | BadLetter { .. } | BadWord(_) | BadSubset(_) | Json(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Compute(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Compute(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too, with exit code 0
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match commands::run(&cli) {
        Ok(report) => {
            print!("{report}");
            if !report.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Checks(report)) => {
            println!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
