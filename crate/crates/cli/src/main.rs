use std::process::ExitCode;

use algver::config::{Cli, Command};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => ExitCode::from(algver::verify(&args)),
    }
}
