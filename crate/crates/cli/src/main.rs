mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Output};

fn run(argv: Vec<String>) -> ExitCode {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let echo: Vec<String> = argv.into_iter().skip(1).collect();
    let result = match &cli.command {
        Command::Gen(a) => commands::gen(echo, a),
        Command::Count(a) => commands::count(echo, a),
        Command::Approx(a) => commands::approx(echo, a),
        Command::Reduce(a) => commands::reduce(echo, a),
        Command::Verify(a) => commands::verify(echo, a),
        Command::Bench(a) => commands::bench(a),
    };
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(Output::Report(r)) => {
            let _ = stdout.write_all(r.render(cli.output).as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Output::Text(t)) => {
            let _ = stdout.write_all(t.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Output::Failed(r, failures)) => {
            let _ = stdout.write_all(r.render(cli.output).as_bytes());
            for f in failures {
                eprintln!("mismatch: {f}");
            }
            ExitCode::from(2)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    run(std::env::args().collect())
}
