use std::process::ExitCode;

use clap::Parser;
use mhg::cli::{run, Cli, ERROR_EXIT_CODE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr();
    match run(&cli, &mut out, &mut err) {
        Ok(verdict) => ExitCode::from(verdict.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ERROR_EXIT_CODE as u8)
        }
    }
}
