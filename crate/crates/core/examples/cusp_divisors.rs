//! Orders of eta quotients at the cusps of Gamma0(N), from the Ligozat
//! formula. Pass a quotient as `"N; δ:r, ..."` to inspect your own.
//!
//!     cargo run --example cusp_divisors
//!     cargo run --example cusp_divisors -- "12; 1:4, 3:-4, 4:-4, 12:4"

use etamodeq::eta::{named_w, pole_zero_class, EtaQuotient};

fn show(f: &EtaQuotient) {
    println!("{f}");
    let divisor = match f.divisor() {
        Ok(d) => d,
        Err(e) => {
            println!("  {e}");
            return;
        }
    };
    for o in &divisor {
        println!("  {:>6}  order {}", o.cusp, o.order);
    }
    println!(
        "  poles {}, zeros {}",
        f.total_pole_degree().expect("divisor computed"),
        f.total_zero_degree().expect("divisor computed")
    );
}

fn main() {
    if let Some(arg) = std::env::args().nth(1) {
        match arg.parse::<EtaQuotient>() {
            Ok(f) => show(&f),
            Err(e) => eprintln!("{e}"),
        }
        return;
    }

    let w = named_w();
    show(&w);

    // w(τ) and w(nτ) on Gamma0(18n): the two functions whose relation is the
    // level-n modular equation
    for n in [2, 5] {
        let lifted = w.lift(18 * n).expect("multiple of 18");
        let scaled = w.rescale(n);
        println!();
        show(&lifted);
        show(&scaled);
        let d = lifted.divisor().expect("modular function");
        let classes: Vec<String> = d.iter().map(|o| format!("{}:{:?}", o.cusp, pole_zero_class(o.cusp))).collect();
        println!("  classes by denominator: {}", classes.join(" "));
    }
}
