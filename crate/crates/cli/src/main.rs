use std::io::Write;

use clap::Parser;

fn main() {
    let cli = hfsc_cli::Cli::parse();
    let out = hfsc_cli::run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
