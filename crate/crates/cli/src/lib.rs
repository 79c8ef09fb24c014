//! Command-line front end: `table`, `expand` and `verify`.
//!
//! [`run`] does all the work and returns the exit code with captured
//! output, so the binary is a thin wrapper. Exit codes: 0 success, 1 an
//! identity failed, 2 usage error, 3 a binding hit a pole.

mod args;
mod commands;
mod doc;

use std::ffi::OsString;

use clap::Parser;

pub use args::{Cli, Command, Format, GfKind, TableKind};
pub use doc::VARIABLES;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_POLE: u8 = 3;

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Pole(String),
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: text }
            } else {
                Output { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match commands::dispatch(&cli.command, &echo) {
        Ok((code, stdout)) => Output { code, stdout, stderr: String::new() },
        Err(CliError::Usage(msg)) => Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(CliError::Pole(msg)) => Output { code: EXIT_POLE, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}
