use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gaussfit::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match gaussfit::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
                eprintln!("gaussfit: {e}");
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gaussfit: {e:#}");
            ExitCode::FAILURE
        }
    }
}
