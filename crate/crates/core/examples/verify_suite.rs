//! The full reproduction suite against the embedded golden tables, or a
//! golden file given on the command line.
//!
//!     cargo run --release --example verify_suite
//!     cargo run --release --example verify_suite -- tables path/to/golden.json

use std::path::Path;

use etamodeq::verify::{run_suite, Golden, Subset};

fn main() {
    let mut args = std::env::args().skip(1);
    let subset: Subset = args.next().map(|s| s.parse().expect("subset")).unwrap_or_default();
    let golden = match args.next() {
        Some(path) => Golden::from_path(Path::new(&path)).expect("readable golden file"),
        None => Golden::embedded(),
    };

    let report = run_suite(subset, false, &golden);
    for check in &report.checks {
        println!("{check}");
    }
    println!();
    println!("{} passed, {} failed (golden sha256 {})", report.passed, report.failed, report.golden_sha256);
    println!();
    println!("not reproduced numerically:");
    for a in &report.not_reproduced {
        println!("  {}", a.claim);
        println!("    why: {}", a.reason);
        println!("    proxy: {}", a.proxy);
    }
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
