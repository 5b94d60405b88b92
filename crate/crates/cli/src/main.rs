use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use permgrp_cli::{default_cap, render, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print to stdout and succeed; everything else is a usage error.
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let result = default_cap().and_then(|cap| run(&cli, &echo, cap));
    match result {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(render(&report, cli.format).as_bytes());
            let _ = out.flush();
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("permgrp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
