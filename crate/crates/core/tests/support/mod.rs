//! Property oracles shared by the proptest suite and the acceptance runner.
//! Each returns `Err` with a description of the first counterexample.

#![allow(dead_code)]

use etamodeq::arith::psi;
use etamodeq::cusps::{are_equivalent, canonical, cusp_count, cusp_set, width, Cusp};
use etamodeq::eta::named_w;
use etamodeq::series::QSeries;
use etamodeq::verify::check_divisor_consistency;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const RING_CASES: u32 = 200;
pub const DIVISOR_LEVELS: [u64; 7] = [1, 2, 3, 5, 7, 11, 13];

/// Exponent denominator, valuation, and small rational coefficients.
pub fn series() -> impl Strategy<Value = QSeries> {
    (
        prop::sample::select(vec![1u64, 2, 3, 4, 6]),
        -3i64..4,
        prop::collection::vec((-9i64..10, 1i64..4), 0..10),
    )
        .prop_map(|(denom, val, cs)| {
            let cs: Vec<BigRational> = cs.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect();
            QSeries::from_rationals(denom, val, &cs)
        })
}

/// A series with nonzero constant term, so it has an inverse.
pub fn unit_series() -> impl Strategy<Value = QSeries> {
    (1i64..6, prop::collection::vec(-5i64..6, 0..12)).prop_map(|(c0, rest)| {
        let mut cs = vec![c0];
        cs.extend(rest);
        QSeries::from_i64s(0, &cs)
    })
}

/// Equality on the range where both series are known.
pub fn agree(a: &QSeries, b: &QSeries) -> bool {
    let d = a.denom().lcm(&b.denom());
    let (a, b) = (a.with_denom(d), b.with_denom(d));
    let p = a.prec().min(b.prec());
    a.truncate(p) == b.truncate(p)
}

fn check(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    run(cases, (series(), series(), series()), |(a, b, c)| {
        check(agree(&a.add(&b), &b.add(&a)), "a + b = b + a")?;
        check(agree(&a.add(&b).add(&c), &a.add(&b.add(&c))), "(a + b) + c = a + (b + c)")?;
        check(agree(&a.mul(&b), &b.mul(&a)), "ab = ba")?;
        check(agree(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))), "(ab)c = a(bc)")?;
        check(agree(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))), "a(b + c) = ab + ac")?;
        check(agree(&a.sub(&a), &QSeries::zero(a.denom(), a.prec())), "a - a = 0")?;
        check(agree(&a.mul(&QSeries::one(a.prec().max(1) + 4)), &a), "a 1 = a")?;
        Ok(())
    })
}

pub fn inverses(cases: u32) -> Result<(), String> {
    run(cases, unit_series(), |u| {
        let inv = u.invert().map_err(|e| TestCaseError::fail(e.to_string()))?;
        check(agree(&u.mul(&inv), &QSeries::one(u.prec())), "u u^-1 = 1")?;
        check(inv.prec() == u.prec(), "inverse keeps the precision")
    })
}

pub fn rescale_multiplicative(cases: u32) -> Result<(), String> {
    run(cases, (series(), series(), 1u64..5), |(a, b, n)| {
        check(agree(&a.mul(&b).rescale(n), &a.rescale(n).mul(&b.rescale(n))), "(ab)(q^n) = a(q^n) b(q^n)")?;
        check(agree(&a.add(&b).rescale(n), &a.rescale(n).add(&b.rescale(n))), "(a + b)(q^n) = a(q^n) + b(q^n)")
    })
}

/// `prod (1 - q^(s n))` multiplied out factor by factor, below `q^p`.
fn naive_product(s: usize, p: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); p];
    if p > 0 {
        c[0] = BigInt::from(1);
    }
    let mut k = s;
    while k < p {
        for e in (k..p).rev() {
            let t = c[e - k].clone();
            c[e] -= t;
        }
        k += s;
    }
    c
}

pub fn pentagonal_matches_product() -> Result<(), String> {
    for s in 1..=20u64 {
        for p in [1i64, 2, 5, 17, 64, 123, 200] {
            let fast = QSeries::euler_product(s, p);
            let slow = QSeries::from_integers(1, 0, naive_product(s as usize, p as usize));
            if fast != slow {
                return Err(format!("scale {s}, precision {p}: {fast} != {slow}"));
            }
        }
    }
    Ok(())
}

/// Every rational with denominator up to `2N`, and infinity, lands on exactly
/// one listed cusp; the list has the predicted size and widths sum to psi(N).
pub fn cusp_partition(max_level: u64) -> Result<(), String> {
    for n in 1..=max_level {
        let reps = cusp_set(n);
        if reps.len() as u64 != cusp_count(n) {
            return Err(format!("N = {n}: {} listed, {} predicted", reps.len(), cusp_count(n)));
        }
        let total: u64 = reps.iter().map(|&x| width(n, x)).sum();
        if total != psi(n) {
            return Err(format!("N = {n}: widths sum to {total}, psi = {}", psi(n)));
        }
        let mut points = vec![Cusp::infinity()];
        for c in 1..=2 * n as i64 {
            for a in 0..c {
                if a.gcd(&c) == 1 {
                    points.push(Cusp::new(a, c).expect("coprime"));
                }
            }
        }
        for &x in &points {
            let hits: Vec<Cusp> = reps.iter().copied().filter(|&r| are_equivalent(n, x, r)).collect();
            if hits.len() != 1 {
                return Err(format!("N = {n}: {x} is equivalent to {hits:?}"));
            }
            if canonical(n, x) != hits[0] {
                return Err(format!("N = {n}: canonical({x}) disagrees"));
            }
        }
    }
    Ok(())
}

/// Reflexive, symmetric and transitive on a grid of rationals.
pub fn equivalence_relation(levels: &[u64]) -> Result<(), String> {
    for &n in levels {
        let mut pts = vec![Cusp::infinity()];
        for c in 1..=n as i64 {
            for a in -c..=c {
                if a.gcd(&c) == 1 {
                    pts.push(Cusp::new(a, c).expect("coprime"));
                }
            }
        }
        for &x in &pts {
            if !are_equivalent(n, x, x) {
                return Err(format!("N = {n}: {x} not equivalent to itself"));
            }
            for &y in &pts {
                let xy = are_equivalent(n, x, y);
                if xy != are_equivalent(n, y, x) {
                    return Err(format!("N = {n}: asymmetric on {x}, {y}"));
                }
                // transitivity through the class representative
                if xy != (canonical(n, x) == canonical(n, y)) {
                    return Err(format!("N = {n}: {x} ~ {y} disagrees with their representatives"));
                }
            }
        }
    }
    Ok(())
}

/// Degree balance and the pole/zero classes of `w` and `w(nτ)` on
/// Gamma0(18n); both have degree `[Gamma0(18) : Gamma0(18n)]`.
pub fn divisor_consistency() -> Result<(), String> {
    for n in DIVISOR_LEVELS {
        let report = check_divisor_consistency(n);
        if !report.passed() {
            return Err(report.to_string());
        }
        let index = psi(18 * n) / psi(18);
        let lifted = named_w().lift(18 * n).map_err(|e| e.to_string())?;
        let scaled = named_w().rescale(n);
        for (label, f) in [("w", lifted), ("w(nt)", scaled)] {
            let poles = f.total_pole_degree().map_err(|e| e.to_string())?;
            let zeros = f.total_zero_degree().map_err(|e| e.to_string())?;
            if poles != zeros || poles != index {
                return Err(format!("n = {n}, {label}: {poles} poles, {zeros} zeros, index {index}"));
            }
        }
    }
    Ok(())
}
