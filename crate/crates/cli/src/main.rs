//! `magnikit`: batch front end for the magnikit library.
//!
//! Exit status is 0 on success, 2 when the computation finished but a
//! checked identity failed, and 1 on any error.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;

fn threads() -> Result<Option<usize>> {
    let Ok(s) = std::env::var("MAGNIKIT_THREADS") else {
        return Ok(None);
    };
    let n: usize = s
        .trim()
        .parse()
        .with_context(|| format!("MAGNIKIT_THREADS=`{s}` is not a count"))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(Some(n))
}

fn run(cli: &Cli) -> Result<bool> {
    let threads = threads()?;
    let report = commands::run(&cli.command, cli.seed)?;
    let job = output::JobSpec::new(cli, &report.caps, threads)?;
    let text = output::render(&job, &report.results, &report.rows, report.ok)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(report.ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("magnikit: a checked identity failed; see the output");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("magnikit: error: {e:#}");
            ExitCode::from(1)
        }
    }
}
