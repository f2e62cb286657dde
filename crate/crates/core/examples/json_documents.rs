//! The JSON documents behind the command line, built in-process. Each one
//! carries a schema version, the echoed inputs and a result payload with
//! big integers as decimal strings.
//!
//!     cargo run --release --example json_documents

use clap::Parser;
use etamodeq::cli::{execute, Cli, ModeqPayload};

fn document(args: &[&str]) -> serde_json::Value {
    let cli = Cli::parse_from(std::iter::once("etamodeq").chain(args.iter().copied()));
    let out = execute(&cli, &mut std::io::stderr()).expect("command runs");
    serde_json::to_value(&out.document).expect("serializable")
}

fn main() {
    let expand = document(&["--no-timing", "expand", "--name", "w", "--prec", "8"]);
    println!("{}", serde_json::to_string_pretty(&expand).expect("json"));

    let cusps = document(&["--no-timing", "cusps", "18", "--divisor", "w"]);
    println!("{}", serde_json::to_string(&cusps["result"]["cusps"]).expect("json"));

    let modeq = document(&["--no-timing", "modeq", "3", "--no-cache"]);
    let payload: ModeqPayload = serde_json::from_value(modeq["result"].clone()).expect("payload");
    payload.validate(3).expect("consistent payload");
    println!("level 3: {}", payload.polynomial);
    println!("terms: {}", serde_json::to_string(&payload.terms).expect("json"));
}
