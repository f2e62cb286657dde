//! Solves the level-n relation F(w(τ), w(nτ)) = 0 and prints it with the
//! solver diagnostics.
//!
//!     cargo run --release --example modular_equation -- 7
//!     cargo run --release --example modular_equation -- 4 exact

use std::time::Instant;

use etamodeq::modeq::{predict_degrees, solve_with, NullspaceMethod};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);
    let method = match args.next().as_deref() {
        Some("exact") => NullspaceMethod::ExactRational,
        _ => NullspaceMethod::Multimodular,
    };

    match predict_degrees(n) {
        Ok((d1, d2)) => println!("level {n}: expect deg_Y = {d1}, deg_X = {d2}"),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    }

    let start = Instant::now();
    let r = match solve_with(n, method) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("solved in {:.2?} with {:?}", start.elapsed(), r.method);
    println!("  {} q-coefficients, kernel dimension {}, {} primes", r.precision_used, r.nullspace_dim, r.primes_used);
    println!("  {} terms, bidegree ({}, {})", r.poly.num_terms(), r.poly.deg_x(), r.poly.deg_y());
    println!("  normalization {:?}", r.normalization);
    println!();
    println!("F_{n}(X, Y) = {}", r.poly);
}
