use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hopfforge_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(cli.command, &cli.opts);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code)
}
