use std::process::ExitCode;

use clap::Parser;
use fano_obstruct::cli::{run, Cli};

fn main() -> ExitCode {
    ExitCode::from(run(&Cli::parse()))
}
