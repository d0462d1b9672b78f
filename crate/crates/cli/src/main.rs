use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use lefschetz_cli::commands::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let result = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let pretty = serde_json::to_string_pretty(&result.json).expect("JSON values serialize");
    if let Some(path) = &cli.report {
        if let Err(e) = std::fs::write(path, format!("{pretty}\n")) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE as u8);
        }
    }
    let text = if cli.json || result.json_by_default {
        pretty
    } else {
        result.summary
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(result.code as u8)
}
