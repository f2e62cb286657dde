//! Truncated q-series: products, inverses, powers and rescaling, all exact.
//!
//!     cargo run --example series_arithmetic -- 12

use etamodeq::series::QSeries;
use num_rational::BigRational;

fn main() {
    let prec: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);

    let euler = QSeries::euler_product(1, prec);
    println!("prod (1 - q^n)        = {euler}");

    // the partition generating function
    let partitions = euler.invert().expect("unit series");
    println!("1 / prod (1 - q^n)    = {partitions}");
    println!("check                 = {}", euler.mul(&partitions));

    let cube = euler.pow(3).expect("power");
    println!("prod (1 - q^n)^3      = {cube}");

    let rescaled = euler.rescale(2);
    println!("prod (1 - q^(2n))     = {rescaled}");

    // fractional exponents: q^(1/24) prod (1 - q^n), read in q^(1/24)
    let eta = euler.with_denom(24).shift(1);
    println!("eta                   = {eta}");
    println!("  exponent denominator {}, valuation {:?}", eta.denom(), eta.valuation_q());

    let half = BigRational::new(1.into(), 2.into());
    let s = QSeries::from_i64s(0, &[1, 1]).scale(&half).truncate(prec);
    println!("(1 + q) / 2           = {s}");
    println!("its inverse           = {}", s.invert().expect("unit series"));
}
