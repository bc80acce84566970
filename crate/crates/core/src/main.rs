use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use upper_motives::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            let out = if cli.json { report.json_string() + "\n" } else { report.text.clone() };
            // A closed pipe is not an error for a report printer.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
