//! Command-line front end for the `tilings` library.
//!
//! Exit codes: 0 success, 1 negative answer (with a certificate on stdout),
//! 2 usage or input error, 3 computational guard exceeded.

mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use commands::{Cli, Outcome};

/// Environment variable read for the default worker count.
pub const THREADS_ENV: &str = "TILINGS_THREADS";

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let threads = cli.threads.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()));
    if let Some(n) = threads {
        tilings::init_threads(n);
    }
    let Outcome { code, stdout } = commands::run(cli);
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(stdout.as_bytes());
    let _ = out.flush();
    ExitCode::from(code)
}
