use clap::Parser;

use iroc::cli::{run, Cli};

/// Exit codes: 0 success, 2 input-contract violation (also used by the
/// argument parser itself), 3 numeric failure inside the pipeline.
fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        let mut shown = err.to_string();
        let mut source = std::error::Error::source(&err);
        while let Some(inner) = source {
            let msg = inner.to_string();
            // Variants that interpolate their source into their own message
            // would otherwise print the same text twice.
            if !shown.contains(&msg) {
                eprintln!("  caused by: {msg}");
            }
            shown = msg;
            source = inner.source();
        }
        std::process::exit(if err.is_input_contract() { 2 } else { 3 });
    }
}
