mod args;
mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::Exit;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            eprintln!("{line}");
            return ExitCode::from(Exit::Usage as u8);
        }
    };
    let result = match &cli.command {
        Command::Split(args) => commands::split(args, cli.verbose),
        Command::Combine(args) => commands::combine(args, cli.verbose),
        Command::Inspect { file } => commands::inspect(file),
        Command::Analyze(args) => commands::analyze(args),
        Command::Bench { size } => commands::bench(*size),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit as u8)
        }
    }
}
