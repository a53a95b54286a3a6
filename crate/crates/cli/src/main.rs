use std::process::ExitCode;

use clap::Parser;

use hilbpoly_cli::{run, Cli, JobConfig};

fn main() -> ExitCode {
    let cfg = match JobConfig::from_cli(Cli::parse()) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("hilbpoly: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&cfg) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("hilbpoly: warning: {w}");
            }
            print!("{}", outcome.stdout);
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("hilbpoly: {e}");
            ExitCode::FAILURE
        }
    }
}
