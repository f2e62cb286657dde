//! The q-series identities between X, w and j, checked coefficient by
//! coefficient. A sabotaged coefficient shows what a failure looks like.
//!
//!     cargo run --release --example identities

use etamodeq::verify::{
    check_j_identity, check_j_prefix, check_w_expansion, check_x_level_three, check_x_product,
    check_x_quartic_with, check_x_w_identities, IDENTITY_PREC,
};

fn main() {
    let mut reports = vec![check_w_expansion(), check_x_product()];
    reports.extend(check_x_w_identities());
    reports.push(check_x_level_three());
    reports.push(check_j_prefix());
    reports.push(check_j_identity());
    for r in &reports {
        println!("{r}");
    }

    println!();
    let broken = check_x_quartic_with(IDENTITY_PREC, &[1, -3, 4]);
    println!("{broken}");
    if let Some(w) = &broken.witness {
        println!("  first nonzero coefficient at {}: {}", w.at, w.actual);
    }
}
