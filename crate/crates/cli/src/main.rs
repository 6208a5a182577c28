mod args;
mod commands;
mod run;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Config(fdscheme::Error),
    Io(io::Error),
}

impl From<fdscheme::Error> for CliError {
    fn from(e: fdscheme::Error) -> Self {
        CliError::Config(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult = Result<(), CliError>;

fn dispatch(command: &Command, out: &mut impl Write) -> CliResult {
    match command {
        Command::Coeffs(a) => commands::coeffs(a, out),
        Command::Stability(a) => commands::stability(a, out),
        Command::Classify(a) => commands::classify(a, out),
        Command::Audit(a) => commands::audit(a, out),
        Command::Families(a) => commands::families(a, out),
        Command::Run(a) => run::run(a, out),
        Command::Converge(a) => commands::converge(a, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_error = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(u8::from(usage_error));
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match dispatch(&cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Config(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
