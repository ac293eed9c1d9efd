#![allow(dead_code)]

use clap::Parser;
use hfsc_cli::{run, Cli, Output};

pub fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// In-process invocation; clap usage errors map to exit 2 like the binary.
pub fn hfsc(args: &[&str]) -> Output {
    match Cli::try_parse_from(std::iter::once("hfsc").chain(args.iter().copied())) {
        Ok(cli) => run(&cli),
        Err(e) => Output { stdout: String::new(), stderr: e.to_string(), code: 2 },
    }
}

pub fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}\n{}", o.stdout, o.stderr))
}
