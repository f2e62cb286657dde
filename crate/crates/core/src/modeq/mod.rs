//! Modular equations `F_n(w(τ), w(nτ)) = 0`.
//!
//! The bidegree comes from the pole degrees of `w(τ)` and `w(nτ)` on
//! Gamma0(18n). The coefficients are the kernel of the linear map sending
//! `(C_{i,j})` to the q-expansion of `sum C_{i,j} W^i V^j`. The kernel is found
//! modulo word-sized primes, lifted by Chinese remaindering and rational
//! reconstruction, and then certified by evaluating the integer polynomial on
//! the exact expansions. Exact Gauss-Jordan over Q is available as a second
//! method.

pub mod linalg;
pub mod poly;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{gcd, is_prime};
use crate::cusps::Cusp;
use crate::eta::{named_w, CuspOrder, EtaError, EtaQuotient};
use crate::series::QSeries;

pub use crate::arith::psi;
pub use poly::{BivarPoly, Normalization, Term};

use linalg::{crt, inv_mod, modular_nullspace, Modulus, primes_below_2_31, rational_nullspace, rational_reconstruction, reduce};

/// Extra rows beyond the valuation bound on the first attempt.
pub const BASE_MARGIN: i64 = 32;
/// Consecutive primes with a larger kernel before the kernel is declared wider than one.
const AMBIGUOUS_STREAK: usize = 3;
/// Upper bound on primes spent before giving up on reconstruction.
const MAX_PRIMES: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModEqError {
    #[error("level must be at least 2, got {0}")]
    InvalidLevel(u64),
    #[error(transparent)]
    Eta(#[from] EtaError),
    #[error("no nonzero polynomial of bidegree ({d2}, {d1}) vanishes at level {level} ({rows} rows, {cols} unknowns)")]
    NullspaceEmpty { level: u64, d1: u64, d2: u64, rows: usize, cols: usize },
    #[error("kernel at level {level} has dimension {dim} at precision {precision} ({cols} unknowns)")]
    NullspaceAmbiguous { level: u64, dim: usize, precision: i64, cols: usize },
    #[error("no kernel vector at level {level} was certified after {primes} primes")]
    ReconstructionFailed { level: u64, primes: usize },
    #[error("level {0} is not a prime at least 5")]
    NotPrimeLevel(u64),
    #[error("symmetry is only claimed for levels prime to 6, got {0}")]
    LevelNotCoprimeTo6(u64),
    #[error("pattern for level {pattern} applied to an equation of level {result}")]
    LevelMismatch { result: u64, pattern: u64 },
}

/// Strategy for the kernel computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NullspaceMethod {
    /// Elimination mod primes, then reconstruction and exact certification.
    #[default]
    Multimodular,
    /// Gauss-Jordan elimination over Q.
    ExactRational,
}

/// A solved modular equation with its diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModEqResult {
    pub level: u64,
    /// Pole degree of `w(τ)` on Gamma0(18n); bounds the power of `Y`.
    pub d1: u64,
    /// Pole degree of `w(nτ)` on Gamma0(18n); bounds the power of `X`.
    pub d2: u64,
    pub poly: BivarPoly,
    /// Number of q-coefficients the residual was certified to vanish on.
    pub precision_used: i64,
    pub nullspace_dim: usize,
    pub normalization: Normalization,
    /// Primes consumed by the multimodular route (0 for the exact route).
    pub primes_used: usize,
    pub method: NullspaceMethod,
}

/// Coefficient positions forced zero or nonzero by the cusp data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffPattern {
    pub level: u64,
    pub forced_zero: BTreeSet<(u32, u32)>,
    pub forced_nonzero: BTreeSet<(u32, u32)>,
    /// `(a, b)` for `f1 = w(τ)`, `f2 = w(nτ)`.
    pub exponents: (u32, u32),
    /// `(a', b')` with the two functions interchanged.
    pub interchanged: (u32, u32),
}

/// The pair `w(τ)`, `w(nτ)` as eta quotients of level `18n`.
pub fn level_pair(n: u64) -> Result<(EtaQuotient, EtaQuotient), ModEqError> {
    if n < 2 {
        return Err(ModEqError::InvalidLevel(n));
    }
    let w = named_w();
    Ok((w.lift(18 * n)?, w.rescale(n)))
}

/// `(d1, d2)`: total pole degrees of `w(τ)` and `w(nτ)` on Gamma0(18n).
pub fn predict_degrees(n: u64) -> Result<(u64, u64), ModEqError> {
    let (f1, f2) = level_pair(n)?;
    Ok((f1.total_pole_degree()?, f2.total_pole_degree()?))
}

/// Rows used for a given margin.
pub fn precision_for(n: u64, d1: u64, d2: u64, margin: i64) -> i64 {
    (d2 + n * d1 + (d1 + 1) * (d2 + 1)) as i64 + margin
}

pub fn solve_modular_equation(n: u64) -> Result<ModEqResult, ModEqError> {
    solve_with(n, NullspaceMethod::default())
}

/// Solves at the base margin and retries once with double the margin when
/// the kernel is wider than one.
pub fn solve_with(n: u64, method: NullspaceMethod) -> Result<ModEqResult, ModEqError> {
    match solve_at_margin(n, method, BASE_MARGIN) {
        Err(ModEqError::NullspaceAmbiguous { .. }) => solve_at_margin(n, method, 2 * BASE_MARGIN),
        other => other,
    }
}

/// Column index of `X^i Y^j`.
fn column(i: u64, j: u64, d1: u64) -> usize {
    (i * (d1 + 1) + j) as usize
}

fn solve_at_margin(n: u64, method: NullspaceMethod, margin: i64) -> Result<ModEqResult, ModEqError> {
    let (d1, d2) = predict_degrees(n)?;
    let prec = precision_for(n, d1, d2, margin);
    let w = named_w().expand(prec);
    debug_assert_eq!(w.denom(), 1);
    let v = w.rescale(n).truncate(prec);
    let cols = ((d1 + 1) * (d2 + 1)) as usize;
    let (vector, primes_used) = match method {
        NullspaceMethod::Multimodular => multimodular_kernel(n, d1, d2, &w, prec)?,
        NullspaceMethod::ExactRational => {
            let rows = exact_rows(n, d1, d2, &w, prec);
            let kernel = rational_nullspace(&rows, cols);
            match kernel.len() {
                0 => return Err(ModEqError::NullspaceEmpty { level: n, d1, d2, rows: rows.len(), cols }),
                1 => (kernel.into_iter().next().expect("one vector"), 0),
                dim => return Err(ModEqError::NullspaceAmbiguous { level: n, dim, precision: prec, cols }),
            }
        }
    };
    let (poly, normalization) = normalize(&vector, d1);
    // the multimodular route has already evaluated this polynomial
    if method == NullspaceMethod::ExactRational && !poly.evaluate(&w, &v).is_zero() {
        return Err(ModEqError::ReconstructionFailed { level: n, primes: primes_used });
    }
    Ok(ModEqResult {
        level: n,
        d1,
        d2,
        poly,
        precision_used: prec,
        nullspace_dim: 1,
        normalization,
        primes_used,
        method,
    })
}

/// Integer coefficients of `w` at `q^0 .. q^(prec-1)`.
fn dense_coefficients(w: &QSeries, prec: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); prec as usize];
    for (e, c) in w.terms() {
        if (0..prec).contains(&e) {
            out[e as usize] = c.to_integer();
        }
    }
    out
}

/// `sum_t a[t] b[m - n t]`: the product of `a(q^n)` and `b(q)`, truncated.
fn sparse_product<T: Copy>(a: &[T], b: &[T], n: usize, len: usize, zero: T, fma: impl Fn(T, T, T) -> T) -> Vec<T> {
    let mut out = vec![zero; len];
    for (t, &x) in a.iter().enumerate() {
        let base = t * n;
        if base >= len {
            break;
        }
        for (m, &y) in b[..len - base].iter().enumerate() {
            out[base + m] = fma(out[base + m], x, y);
        }
    }
    out
}

fn truncated_powers<T>(w: &[T], k: u64, one: Vec<T>, mul: impl Fn(&[T], &[T]) -> Vec<T>) -> Vec<Vec<T>> {
    let mut pows = vec![one];
    for e in 1..=k as usize {
        let next = mul(&pows[e - 1], w);
        pows.push(next);
    }
    pows
}

/// Exact matrix rows: row `m` holds the coefficient of `q^m` in each column.
fn exact_rows(n: u64, d1: u64, d2: u64, w: &QSeries, prec: i64) -> Vec<Vec<BigRational>> {
    let len = prec as usize;
    let wc = dense_coefficients(w, prec);
    let mut one = vec![BigInt::zero(); len];
    one[0] = BigInt::one();
    let big_mul = |a: &[BigInt], b: &[BigInt], step: usize| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); len];
        for (t, x) in a.iter().enumerate() {
            let base = t * step;
            if base >= len {
                break;
            }
            if x.is_zero() {
                continue;
            }
            for (m, y) in b[..len - base].iter().enumerate() {
                if !y.is_zero() {
                    out[base + m] += x * y;
                }
            }
        }
        out
    };
    let pows = truncated_powers(&wc, d1.max(d2), one, |a, b| big_mul(a, b, 1));
    let columns: Vec<((u64, u64), Vec<BigInt>)> = (0..=d2)
        .flat_map(|i| (0..=d1).map(move |j| (i, j)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, j)| ((i, j), big_mul(&pows[j as usize], &pows[i as usize], n as usize)))
        .collect();
    let ncols = columns.len();
    let mut rows = vec![vec![BigRational::zero(); ncols]; len];
    for ((i, j), col) in columns {
        let c = column(i, j, d1);
        for (m, x) in col.into_iter().enumerate() {
            rows[m][c] = BigRational::from_integer(x);
        }
    }
    rows
}

/// The matrix modulo `p`, in rows.
fn modular_rows(n: u64, d1: u64, d2: u64, wc: &[BigInt], p: u64) -> Vec<Vec<u64>> {
    let len = wc.len();
    let w: Vec<u64> = wc.iter().map(|c| reduce(c, p)).collect();
    let mut one = vec![0u64; len];
    one[0] = 1;
    let md = Modulus::new(p);
    let fma = |acc: u64, x: u64, y: u64| md.fma(acc, x, y);
    let pows = truncated_powers(&w, d1.max(d2), one, |a, b| sparse_product(a, b, 1, len, 0, fma));
    let columns: Vec<Vec<u64>> = (0..=d2)
        .flat_map(|i| (0..=d1).map(move |j| (i, j)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, j)| sparse_product(&pows[j as usize], &pows[i as usize], n as usize, len, 0, fma))
        .collect();
    let ncols = columns.len();
    let mut rows = vec![vec![0u64; ncols]; len];
    for (c, col) in columns.into_iter().enumerate() {
        for (m, x) in col.into_iter().enumerate() {
            rows[m][c] = x;
        }
    }
    rows
}

/// Kernel vector scaled so that its first nonzero entry is 1, by CRT over
/// primes until the reconstruction is stable and the integer polynomial
/// annihilates the expansions.
fn multimodular_kernel(n: u64, d1: u64, d2: u64, w: &QSeries, prec: i64) -> Result<(Vec<BigRational>, usize), ModEqError> {
    let cols = ((d1 + 1) * (d2 + 1)) as usize;
    let wc = dense_coefficients(w, prec);
    let v = w.rescale(n).truncate(prec);
    let mut pivot: Option<usize> = None;
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); cols];
    let mut modulus = BigInt::one();
    let mut previous: Option<Vec<BigRational>> = None;
    let mut wide_streak = 0;
    let mut used = 0;
    for (tried, p) in primes_below_2_31().enumerate() {
        if tried >= MAX_PRIMES {
            break;
        }
        let kernel = modular_nullspace(modular_rows(n, d1, d2, &wc, p), cols, p);
        match kernel.nullity {
            0 => return Err(ModEqError::NullspaceEmpty { level: n, d1, d2, rows: prec as usize, cols }),
            1 => wide_streak = 0,
            dim => {
                wide_streak += 1;
                if wide_streak >= AMBIGUOUS_STREAK {
                    return Err(ModEqError::NullspaceAmbiguous { level: n, dim, precision: prec, cols });
                }
                continue;
            }
        }
        let vec = kernel.vector.expect("nullity one");
        let piv = *pivot.get_or_insert_with(|| vec.iter().position(|&x| x != 0).expect("nonzero kernel vector"));
        if vec[piv] == 0 {
            continue;
        }
        let scale = inv_mod(vec[piv], p);
        for (r, &x) in residues.iter_mut().zip(&vec) {
            *r = crt(r, &modulus, x * scale % p, p);
        }
        modulus *= p;
        used += 1;
        let candidate: Option<Vec<BigRational>> =
            residues.iter().map(|r| rational_reconstruction(r, &modulus)).collect();
        let Some(candidate) = candidate else { continue };
        if previous.as_ref() == Some(&candidate) {
            let (poly, _) = normalize(&candidate, d1);
            if poly.evaluate(w, &v).is_zero() {
                return Ok((candidate, used));
            }
        }
        previous = Some(candidate);
    }
    Err(ModEqError::ReconstructionFailed { level: n, primes: used })
}

/// Clears denominators, divides out the content and makes `C_{degX, j0}` positive.
fn normalize(vector: &[BigRational], d1: u64) -> (BivarPoly, Normalization) {
    let first = vector.iter().find(|x| !x.is_zero()).expect("nonzero kernel vector").clone();
    let scaled: Vec<BigRational> = vector.iter().map(|x| x / &first).collect();
    let denominator = scaled.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut raw = BivarPoly::zero();
    for (idx, x) in scaled.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (i, j) = (idx as u64 / (d1 + 1), idx as u64 % (d1 + 1));
        raw.add_term(i as u32, j as u32, (x * BigRational::from_integer(denominator.clone())).to_integer());
    }
    let (poly, content, sign) = raw.primitive();
    let pivot = poly.pivot().expect("nonzero polynomial");
    let normalization = Normalization { denominator: denominator.to_string(), content: content.to_string(), sign, pivot };
    (poly, normalization)
}

/// Poles and zeros of `f` among the cusps of its level.
fn split_divisor(f: &EtaQuotient) -> Result<(Vec<CuspOrder>, Vec<CuspOrder>), ModEqError> {
    let div = f.divisor()?;
    let poles = div.iter().filter(|o| o.order.is_negative()).cloned().collect();
    let zeros = div.into_iter().filter(|o| o.order.is_positive()).collect();
    Ok((poles, zeros))
}

fn cusps_of(orders: &[CuspOrder]) -> BTreeSet<Cusp> {
    orders.iter().map(|o| o.cusp).collect()
}

/// Sum of `ord f` over the cusps of `orders` that lie in `within`.
fn order_sum(orders: &[CuspOrder], within: &BTreeSet<Cusp>) -> i64 {
    orders.iter().filter(|o| within.contains(&o.cusp)).map(|o| o.order.to_integer()).sum()
}

/// Forced entries for `F(f1, f2) = 0` with `deg_X F = d2`, `deg_Y F = d1`,
/// given the divisors of `f1` and `f2` at the same level.
fn one_orientation(
    f1: &EtaQuotient,
    f2: &EtaQuotient,
    d1: u64,
    d2: u64,
) -> Result<(u32, u32, Vec<(u32, u32)>, Vec<(u32, u32)>), ModEqError> {
    let (p1, z1) = split_divisor(f1)?;
    let (p2, z2) = split_divisor(f2)?;
    let (s1_inf, s1_0) = (cusps_of(&p1), cusps_of(&z1));
    let (s2_inf, s2_0) = (cusps_of(&p2), cusps_of(&z2));
    let a = -order_sum(&p1, &s2_0);
    let b = order_sum(&z1, &s2_0);
    let (a, b, d1, d2) = (a as u32, b as u32, d1 as u32, d2 as u32);
    let covered: BTreeSet<Cusp> = s2_inf.union(&s2_0).copied().collect();
    let mut nonzero = vec![(d2, a), (0, b)];
    let mut zero = Vec::new();
    if s1_inf.is_subset(&covered) {
        zero.extend((0..=d1).filter(|&j| j != a).map(|j| (d2, j)));
    }
    if s1_0.is_subset(&covered) {
        zero.extend((0..=d1).filter(|&j| j != b).map(|j| (0, j)));
    }
    nonzero.dedup();
    Ok((a, b, nonzero, zero))
}

/// Positions forced by the cusp data for `w(τ)`, `w(nτ)` and for the
/// interchanged pair.
pub fn predict_coefficient_pattern(n: u64) -> Result<CoeffPattern, ModEqError> {
    let (f1, f2) = level_pair(n)?;
    let (d1, d2) = (f1.total_pole_degree()?, f2.total_pole_degree()?);
    let (a, b, nz, z) = one_orientation(&f1, &f2, d1, d2)?;
    let (a2, b2, nz2, z2) = one_orientation(&f2, &f1, d2, d1)?;
    let flip = |v: Vec<(u32, u32)>| v.into_iter().map(|(i, j)| (j, i)).collect::<Vec<_>>();
    let forced_nonzero: BTreeSet<_> = nz.into_iter().chain(flip(nz2)).collect();
    let forced_zero: BTreeSet<_> = z.into_iter().chain(flip(z2)).collect();
    debug_assert!(forced_zero.is_disjoint(&forced_nonzero));
    Ok(CoeffPattern { level: n, forced_zero, forced_nonzero, exponents: (a, b), interchanged: (a2, b2) })
}

/// Every forced zero absent and every forced nonzero present.
pub fn check_pattern(result: &ModEqResult, pattern: &CoeffPattern) -> Result<bool, ModEqError> {
    if result.level != pattern.level {
        return Err(ModEqError::LevelMismatch { result: result.level, pattern: pattern.level });
    }
    Ok(pattern_holds(&result.poly, pattern))
}

/// [`check_pattern`] on a bare polynomial.
pub fn pattern_holds(poly: &BivarPoly, pattern: &CoeffPattern) -> bool {
    pattern.forced_zero.iter().all(|&(i, j)| poly.coeff(i, j).is_zero())
        && pattern.forced_nonzero.iter().all(|&(i, j)| !poly.coeff(i, j).is_zero())
}

/// `F ≡ (X^p - Y)(X - Y^p) (mod p)` coefficientwise.
pub fn check_kronecker(result: &ModEqResult) -> Result<bool, ModEqError> {
    kronecker_holds(&result.poly, result.level)
}

pub fn kronecker_holds(poly: &BivarPoly, p: u64) -> Result<bool, ModEqError> {
    if p < 5 || !is_prime(p) {
        return Err(ModEqError::NotPrimeLevel(p));
    }
    let diff = poly.sub(&BivarPoly::kronecker_frame(p as u32));
    Ok(diff.is_zero_mod(&BigInt::from(p)))
}

/// `C_{i,j} = C_{j,i}` for all `i, j`.
pub fn check_symmetry(result: &ModEqResult) -> Result<bool, ModEqError> {
    symmetry_holds(&result.poly, result.level)
}

pub fn symmetry_holds(poly: &BivarPoly, level: u64) -> Result<bool, ModEqError> {
    if gcd(level as i64, 6) != 1 {
        return Err(ModEqError::LevelNotCoprimeTo6(level));
    }
    Ok(poly.is_symmetric())
}

/// Writes `F = (X^p - Y)(X - Y^p) - p X Y G` and returns `G`, when the
/// difference is divisible by `p X Y`.
pub fn kronecker_inner(poly: &BivarPoly, p: u64) -> Option<BivarPoly> {
    let diff = BivarPoly::kronecker_frame(p as u32).sub(poly);
    let pb = BigInt::from(p);
    let mut inner = BivarPoly::zero();
    for (&(i, j), c) in diff.terms() {
        if i == 0 || j == 0 {
            return None;
        }
        let (q, r) = c.div_rem(&pb);
        if !r.is_zero() {
            return None;
        }
        inner.add_term(i - 1, j - 1, q);
    }
    Some(inner)
}

/// `(X^p - Y)(X - Y^p) - p X Y G`.
pub fn from_kronecker_inner(p: u64, inner: &BivarPoly) -> BivarPoly {
    let pxy = BivarPoly::monomial(1, 1, p as i64);
    BivarPoly::kronecker_frame(p as u32).sub(&pxy.mul(inner))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_for_small_levels() {
        assert_eq!(predict_degrees(2).unwrap(), (2, 2));
        assert_eq!(predict_degrees(3).unwrap(), (3, 3));
        for p in [5, 7, 11, 13] {
            assert_eq!(predict_degrees(p).unwrap(), (p + 1, p + 1));
        }
        assert!(matches!(predict_degrees(1), Err(ModEqError::InvalidLevel(1))));
    }

    #[test]
    fn level_two_equation() {
        let r = solve_modular_equation(2).unwrap();
        assert_eq!(r.poly.to_compact(), "X^2 - Y + 2XY - 3X^2Y + Y^2");
        assert_eq!(r.nullspace_dim, 1);
        assert_eq!((r.poly.deg_x() as u64, r.poly.deg_y() as u64), (r.d2, r.d1));
    }

    #[test]
    fn level_three_equation() {
        let r = solve_modular_equation(3).unwrap();
        assert_eq!(
            r.poly.to_compact(),
            "X^3 - Y + 3XY - 3X^2Y + 3Y^2 - 9XY^2 + 9X^2Y^2 - 3Y^3 + 9XY^3 - 9X^2Y^3"
        );
    }

    #[test]
    fn methods_agree() {
        for n in [2, 3, 5] {
            let a = solve_with(n, NullspaceMethod::Multimodular).unwrap();
            let b = solve_with(n, NullspaceMethod::ExactRational).unwrap();
            assert_eq!(a.poly, b.poly, "level {n}");
            assert_eq!(a.normalization, b.normalization, "level {n}");
        }
    }

    #[test]
    fn patterns_for_two_and_three() {
        let p2 = predict_coefficient_pattern(2).unwrap();
        for k in [(2, 0), (0, 1), (0, 2)] {
            assert!(p2.forced_nonzero.contains(&k), "{k:?}");
        }
        for k in [(1, 2), (2, 2), (1, 0), (0, 0)] {
            assert!(p2.forced_zero.contains(&k), "{k:?}");
        }
        let p3 = predict_coefficient_pattern(3).unwrap();
        for k in [(3, 1), (3, 2), (3, 3), (0, 0), (1, 0), (2, 0)] {
            assert!(p3.forced_zero.contains(&k), "{k:?}");
        }
        for k in [(3, 0), (0, 1), (0, 3)] {
            assert!(p3.forced_nonzero.contains(&k), "{k:?}");
        }
    }

    #[test]
    fn pattern_for_primes() {
        for p in [5u32, 7] {
            let pat = predict_coefficient_pattern(p as u64).unwrap();
            assert!(pat.forced_nonzero.contains(&(p + 1, 0)));
            assert!(pat.forced_nonzero.contains(&(0, p + 1)));
            for j in 1..=p + 1 {
                assert!(pat.forced_zero.contains(&(p + 1, j)));
                assert!(pat.forced_zero.contains(&(j, p + 1)));
            }
            for j in 0..=p {
                assert!(pat.forced_zero.contains(&(0, j)));
                assert!(pat.forced_zero.contains(&(j, 0)));
            }
        }
    }

    #[test]
    fn structural_checks_at_five() {
        let r = solve_modular_equation(5).unwrap();
        assert!(check_pattern(&r, &predict_coefficient_pattern(5).unwrap()).unwrap());
        assert!(check_kronecker(&r).unwrap());
        assert!(check_symmetry(&r).unwrap());
        let inner = kronecker_inner(&r.poly, 5).unwrap();
        assert_eq!(from_kronecker_inner(5, &inner), r.poly);
        assert_eq!(r.poly.deg_x() as u64, psi(5));
    }

    #[test]
    fn refusals() {
        let r = solve_modular_equation(2).unwrap();
        assert!(matches!(check_symmetry(&r), Err(ModEqError::LevelNotCoprimeTo6(2))));
        assert!(matches!(check_kronecker(&r), Err(ModEqError::NotPrimeLevel(2))));
        let pat = predict_coefficient_pattern(3).unwrap();
        assert!(matches!(check_pattern(&r, &pat), Err(ModEqError::LevelMismatch { .. })));
    }

    #[test]
    fn broken_inputs_fail_checks() {
        let frame = BivarPoly::kronecker_frame(5);
        assert!(kronecker_holds(&frame, 5).unwrap());
        assert!(!kronecker_holds(&frame.add(&BivarPoly::monomial(0, 0, 1)), 5).unwrap());
        let r = solve_modular_equation(2).unwrap();
        let pat = predict_coefficient_pattern(2).unwrap();
        assert!(!pattern_holds(&r.poly.add(&BivarPoly::monomial(0, 0, 1)), &pat));
    }
}
