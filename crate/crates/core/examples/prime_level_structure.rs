//! Structure of the prime-level equations: the forced coefficient pattern,
//! symmetry, the Kronecker congruence and the factored presentation
//! F = (X^p - Y)(X - Y^p) - p X Y G.
//!
//!     cargo run --release --example prime_level_structure -- 11

use etamodeq::modeq::{
    check_kronecker, check_pattern, check_symmetry, from_kronecker_inner, kronecker_inner,
    predict_coefficient_pattern, psi, solve_modular_equation,
};

fn main() {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);

    let pattern = predict_coefficient_pattern(p).expect("level at least 2");
    println!("level {p}");
    println!("  exponents from the cusp data: {:?}, interchanged {:?}", pattern.exponents, pattern.interchanged);
    println!("  forced nonzero {:?}", pattern.forced_nonzero);
    println!("  forced zero    {} positions", pattern.forced_zero.len());

    let r = solve_modular_equation(p).expect("solvable");
    println!("  pattern holds: {}", check_pattern(&r, &pattern).expect("same level"));
    println!("  degrees ({}, {}), psi({p}) = {}", r.poly.deg_x(), r.poly.deg_y(), psi(p));

    match (check_symmetry(&r), check_kronecker(&r)) {
        (Ok(sym), Ok(kron)) => {
            println!("  symmetric: {sym}");
            println!("  congruent to (X^{p} - Y)(X - Y^{p}) mod {p}: {kron}");
        }
        (Err(e), _) | (_, Err(e)) => {
            println!("  {e}");
            return;
        }
    }

    let g = kronecker_inner(&r.poly, p).expect("congruence holds");
    println!("  G has {} terms; rebuilding F from G: {}", g.num_terms(), from_kronecker_inner(p, &g) == r.poly);
    let top = g.deg_x();
    println!("  C_{{{top},{top}}}(G) = {}", g.coeff(top, top));
    println!();
    println!("G(X, Y) = {g}");
}
