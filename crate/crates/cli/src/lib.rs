//! Command-line front end: expansions, Pieri tables and verification suites.

mod args;
mod commands;
mod output;

use std::ffi::OsString;
use std::fmt;

use clap::Parser;

pub use args::Cli;

/// A run that stopped before producing output; always exit status 1.
#[derive(Debug)]
pub struct Failure(String);

impl Failure {
    pub(crate) fn input(msg: impl Into<String>) -> Failure {
        Failure(msg.into())
    }

    pub(crate) fn compute(e: impl fmt::Display) -> Failure {
        Failure(e.to_string())
    }

    pub(crate) fn io(e: impl fmt::Display) -> Failure {
        Failure(format!("output error: {e}"))
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Parses `argv` (program name first), runs the verb and returns the exit
/// status: 0 success, 1 bad input, 2 verification mismatch, 3 Macdonald
/// counterexample.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("superjack: {}", first.trim_start_matches("error: "));
            return 1;
        }
        Err(e) => {
            let _ = e.print();
            return 0;
        }
    };
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("superjack: {f}");
            1
        }
    }
}
