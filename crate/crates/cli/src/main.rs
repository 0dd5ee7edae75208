use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use requitable::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli, &mut io::stdin().lock());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    ExitCode::from(out.status as u8)
}
