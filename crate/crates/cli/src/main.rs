use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    plandscape_cli::run(plandscape_cli::Cli::parse())
}
