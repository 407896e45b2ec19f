use std::io::Write;

use clap::Parser;
use twinless_cli::{run, Cli};

fn main() {
    let out = run(Cli::parse());
    std::io::stdout().write_all(out.stdout.as_bytes()).unwrap();
    std::io::stderr().write_all(out.stderr.as_bytes()).unwrap();
    std::process::exit(out.code);
}
