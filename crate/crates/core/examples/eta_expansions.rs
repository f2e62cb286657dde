//! q-expansions of the order-six continued fraction `X`, the Hauptmodul
//! `w = X(τ) X(3τ)` and Klein's `j`.
//!
//!     cargo run --example eta_expansions -- 15

use etamodeq::eta::{continued_fraction_product, named_j, named_w, named_x};

fn main() {
    let prec: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(15);

    let w = named_w();
    println!("w = {w}");
    println!("  weight {}, modular function: {}", w.weight(), w.is_modular_function());
    println!("  {}", w.expand(prec));

    let x = named_x();
    println!("X = {x}");
    println!("  {}", x.expand(prec));
    println!("  product form agrees: {}", x.expand(prec) == continued_fraction_product(prec));

    let x_series = x.expand(prec + 1);
    let w_from_x = x_series.mul(&x_series.rescale(3)).normalize().truncate(prec);
    println!("X(τ) X(3τ) = w: {}", w_from_x == w.expand(prec));

    println!("j = {}", named_j(4));
}
