//! Canonical cusps of Gamma0(N) with their widths.
//!
//!     cargo run --example cusps_and_widths -- 54

use etamodeq::arith::psi;
use etamodeq::cusps::{are_equivalent, canonical, cusp_count, cusp_set, width, Cusp};

fn main() {
    let n: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(18);

    let cusps = cusp_set(n);
    println!("Gamma0({n}): {} cusps (count formula gives {})", cusps.len(), cusp_count(n));
    let mut total = 0;
    for &c in &cusps {
        let h = width(n, c);
        total += h;
        println!("  {c:>6}  width {h}");
    }
    println!("sum of widths {total} = index psi({n}) = {}", psi(n));

    // any rational lands on exactly one listed representative
    for (a, c) in [(5, 7), (7, 12), (13, 18), (1, n as i64)] {
        let x = Cusp::new(a, c).expect("reduced fraction");
        let rep = canonical(n, x);
        let hits = cusps.iter().filter(|&&y| are_equivalent(n, x, y)).count();
        println!("  {x} ~ {rep} ({hits} match)");
    }
}
