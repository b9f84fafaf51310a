use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use yangbax_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.command.output().output {
        Some(path) => std::fs::write(path, &outcome.body).map_err(anyhow::Error::from),
        None => std::io::stdout().write_all(outcome.body.as_bytes()).map_err(anyhow::Error::from),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if outcome.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
