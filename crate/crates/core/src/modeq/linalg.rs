//! Nullspaces of integer matrices.
//!
//! Two independent routes: exact Gauss-Jordan over the rationals, and
//! elimination modulo word-sized primes followed by Chinese remaindering and
//! rational reconstruction. The modular route only proposes a vector; callers
//! certify it exactly.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

/// Rows below which modular elimination stays on one thread.
const PARALLEL_ROWS: usize = 256;

/// Basis of the right nullspace of `rows` (each row has `ncols` entries),
/// by Gauss-Jordan elimination over Q. Pivots are chosen by smallest
/// combined numerator and denominator bit length.
pub fn rational_nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let cost = |x: &BigRational| x.numer().bits() + x.denom().bits();
        let best = (r..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| cost(&m[i][col]));
        let Some(best) = best else { continue };
        m.swap(r, best);
        let inv = m[r][col].recip();
        for x in m[r][col..].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x = &*x - &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes below 2^31 in descending order, so that products fit a `u64`.
pub fn primes_below_2_31() -> impl Iterator<Item = u64> {
    (1u64..(1 << 31)).rev().step_by(2).filter(|&n| is_prime_u64(n))
}

/// Modular inverse for prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Reduces a big integer into `[0, p)`.
pub fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Barrett reduction by a fixed modulus below 2^31, for inputs below 2^63.
#[derive(Debug, Clone, Copy)]
pub struct Modulus {
    p: u64,
    m: u64,
}

impl Modulus {
    pub fn new(p: u64) -> Self {
        assert!((2..1 << 31).contains(&p));
        Modulus { p, m: (u128::from(u64::MAX) / u128::from(p)) as u64 }
    }

    pub fn get(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        let q = ((u128::from(x) * u128::from(self.m)) >> 64) as u64;
        let r = x - q * self.p;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }

    /// `(acc + x y) mod p` for residues `acc, x, y`.
    #[inline]
    pub fn fma(self, acc: u64, x: u64, y: u64) -> u64 {
        self.reduce(acc + x * y)
    }
}

/// Result of eliminating one matrix modulo a prime.
#[derive(Debug, Clone)]
pub struct ModularKernel {
    pub prime: u64,
    pub nullity: usize,
    /// The kernel vector when the nullity is exactly one.
    pub vector: Option<Vec<u64>>,
}

/// Kernel of a dense row-major matrix over `F_p` (`p < 2^31`), by forward
/// elimination and back substitution.
pub fn modular_nullspace(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> ModularKernel {
    let md = Modulus::new(p);
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let update = |row: &mut Vec<u64>| {
            let f = row[col];
            if f == 0 {
                return;
            }
            let nf = p - f;
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = md.fma(*x, nf, y);
            }
        };
        if tail.len() >= PARALLEL_ROWS {
            tail.par_iter_mut().for_each(update);
        } else {
            tail.iter_mut().for_each(update);
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let nullity = ncols - pivots.len();
    let vector = (nullity == 1).then(|| {
        let free = (0..ncols).find(|c| !pivots.contains(c)).expect("one free column");
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        // back substitution through the echelon form
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = 0u64;
            for c in pc + 1..ncols {
                acc = md.fma(acc, rows[row][c], v[c]);
            }
            v[pc] = (p - acc) % p;
        }
        v
    });
    ModularKernel { prime: p, nullity, vector }
}

/// Combines residues `a mod m` and `b mod p` into one residue mod `m p`.
pub fn crt(a: &BigInt, m: &BigInt, b: u64, p: u64) -> BigInt {
    let pb = BigInt::from(p);
    let a_mod_p = reduce(a, p);
    let m_mod_p = reduce(m, p);
    // a + m t = b (mod p)
    let t = mul_mod((b + p - a_mod_p) % p, inv_mod(m_mod_p, p), p);
    let x = a + m * BigInt::from(t);
    x.mod_floor(&(m * pb))
}

/// Finds `n/d` with `n = d x (mod m)` and `|n|, d <= sqrt(m/2)`, if one exists.
pub fn rational_reconstruction(x: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    let (n, d) = if t1.sign() == Sign::Minus { (-r1, -t1) } else { (r1, t1) };
    Some(BigRational::new(n, d))
}
