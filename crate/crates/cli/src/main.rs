use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use zastava_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            // a closed pipe is not an error for a report printer
            let _ = writeln!(std::io::stdout(), "{}", out.output);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
