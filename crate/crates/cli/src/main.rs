use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use cfz_cli::cli::Cli;
use cfz_cli::run::run;
use clap::Parser;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("CFZ_LOG")).init();
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn execute(cli: Cli) -> Result<()> {
    let cfg = cli.into_config();
    let (report, csv) = run(&cfg)?;
    let json = serde_json::to_string_pretty(&report)?;
    match &cfg.json {
        Some(path) => fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?,
        None => match writeln!(io::stdout(), "{json}") {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(e.into()),
            _ => {}
        },
    }
    match (&cfg.csv, csv) {
        (Some(path), Some(body)) => {
            fs::write(path, body).with_context(|| format!("writing {}", path.display()))?
        }
        (Some(_), None) => log::warn!("{:?} produces no CSV table", cfg.command),
        _ => {}
    }
    Ok(())
}
