use std::process::ExitCode;

use clap::Parser;
use ubs_core::cli::{run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let code = match &cli.out {
        Some(path) => match std::fs::write(path, &outcome.output) {
            Ok(()) => outcome.code,
            Err(e) => {
                eprintln!("cannot write {}: {e}", path.display());
                EXIT_INPUT
            }
        },
        None => {
            print!("{}", outcome.output);
            outcome.code
        }
    };
    ExitCode::from(code as u8)
}
