use std::process::ExitCode;

use clap::Parser;
use fuzzcorr_cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match fuzzcorr_cli::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
