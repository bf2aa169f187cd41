use std::io;
use std::process::ExitCode;

use clap::Parser;
use fdkit::run::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = run(
        &cli,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(status)
}
