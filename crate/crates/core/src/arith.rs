//! Small integer helpers shared by the cusp, eta and modular-equation code.

use num_integer::Integer;

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors of zero are undefined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorisation as `(prime, exponent)` pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// `n * prod_{p | n} (1 + 1/p)`: the index of Gamma0(n) in SL2(Z).
pub fn psi(n: u64) -> u64 {
    assert!(n > 0, "psi(0) is undefined");
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p + 1))
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inverse_mod(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let e = a.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// Sum of cubes of divisors for every `n < len`, by sieve (index 0 is 0).
pub fn sigma3_table(len: usize) -> Vec<u128> {
    let mut table = vec![0u128; len];
    for d in 1..len {
        let cube = (d as u128).pow(3);
        let mut m = d;
        while m < len {
            table[m] += cube;
            m += d;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(18), vec![1, 2, 3, 6, 9, 18]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(1), 1);
        assert_eq!(psi(5), 6);
        assert_eq!(psi(18), 36);
        assert_eq!(psi(25), 30);
    }

    #[test]
    fn totient_and_primes() {
        assert_eq!(totient(18), 6);
        assert_eq!(totient(1), 1);
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(25));
    }

    #[test]
    fn sigma3_small() {
        let t = sigma3_table(5);
        assert_eq!(t[1..], [1, 9, 28, 73]);
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(inverse_mod(5, 18), Some(11));
        assert_eq!(inverse_mod(-1, 18), Some(17));
        assert_eq!(inverse_mod(3, 18), None);
    }
}
