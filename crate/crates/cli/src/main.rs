use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use zeckgame_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let mut stdout = io::stdout().lock();
    let status = run(cli, stdin.lock(), &mut stdout);
    let _ = stdout.flush();
    match status {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
