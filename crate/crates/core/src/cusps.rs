//! Cusps of Gamma0(N): enumeration of inequivalent representatives,
//! equivalence testing, canonical reduction and widths.
//!
//! Two cusps `a/c` and `a'/c'` are equivalent on Gamma0(N) exactly when
//! `(a', c') = (s^-1 a + n c, s c) (mod N)` for a unit `s` and an integer `n`.
//! The set of representatives takes, for every divisor `c` of `N`, one
//! numerator per unit class mod `gcd(c, N/c)`: the smallest positive `a`
//! prime to `c` in that class.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{divisors, gcd, inverse_mod, totient};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CuspError {
    #[error("{a}/{c} is not in lowest terms")]
    NotCoprime { a: i64, c: i64 },
    #[error("cannot parse cusp {0:?}")]
    Parse(String),
}

/// A point of `Q ∪ {∞}` written `a/c` in lowest terms with `c >= 0`;
/// infinity is stored as `1/0` and zero as `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Cusp {
    a: i64,
    c: i64,
}

impl Cusp {
    pub fn new(a: i64, c: i64) -> Result<Self, CuspError> {
        if gcd(a, c) != 1 {
            return Err(CuspError::NotCoprime { a, c });
        }
        let (a, c) = if c < 0 { (-a, -c) } else { (a, c) };
        if c == 0 {
            return Ok(Self::infinity());
        }
        Ok(Cusp { a, c })
    }

    pub const fn infinity() -> Self {
        Cusp { a: 1, c: 0 }
    }

    pub const fn zero() -> Self {
        Cusp { a: 0, c: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.a
    }

    pub fn denominator(&self) -> i64 {
        self.c
    }

    pub fn is_infinity(&self) -> bool {
        self.c == 0
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.c) {
            (_, 0) => f.pad("inf"),
            (a, 1) => f.pad(&a.to_string()),
            (a, c) => f.pad(&format!("{a}/{c}")),
        }
    }
}

impl FromStr for Cusp {
    type Err = CuspError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if matches!(t, "inf" | "oo" | "∞" | "infinity") {
            return Ok(Cusp::infinity());
        }
        let bad = || CuspError::Parse(s.to_string());
        let (a, c) = match t.split_once('/') {
            Some((a, c)) => (a.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?),
            None => (t.parse().map_err(|_| bad())?, 1),
        };
        Cusp::new(a, c)
    }
}

impl TryFrom<String> for Cusp {
    type Error = CuspError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Cusp> for String {
    fn from(c: Cusp) -> String {
        c.to_string()
    }
}

/// Number of inequivalent cusps: `sum_{c | N} phi(gcd(c, N/c))`.
pub fn cusp_count(n: u64) -> u64 {
    divisors(n).into_iter().map(|c| totient(gcd(c as i64, (n / c) as i64) as u64)).sum()
}

/// One representative per cusp class of Gamma0(N): infinity, then zero, then
/// the remaining denominators in ascending order.
pub fn cusp_set(n: u64) -> Vec<Cusp> {
    assert!(n >= 1, "level must be positive");
    let ni = n as i64;
    let mut out = vec![Cusp::infinity()];
    if n == 1 {
        return out;
    }
    out.push(Cusp::zero());
    for c in divisors(n) {
        if c == 1 || c == n {
            continue;
        }
        let g = gcd(c as i64, ni / c as i64);
        let mut seen = vec![false; g as usize];
        for a in 1..=ni {
            if gcd(a, c as i64) != 1 || gcd(a, g) != 1 {
                continue;
            }
            let r = (a % g) as usize;
            if !seen[r] {
                seen[r] = true;
                out.push(Cusp { a, c: c as i64 });
            }
        }
    }
    out
}

/// Gamma0(N)-equivalence of two cusps.
pub fn are_equivalent(n: u64, x: Cusp, y: Cusp) -> bool {
    let ni = n as i64;
    if ni == 1 {
        return true;
    }
    let g = gcd(x.c, ni);
    (1..ni).filter(|&s| gcd(s, ni) == 1).any(|s| {
        if (y.c - s * x.c).rem_euclid(ni) != 0 {
            return false;
        }
        let s_inv = inverse_mod(s, ni).expect("s is a unit");
        // a' - s^-1 a must be a multiple of c modulo N
        (y.a - (s_inv * x.a).rem_euclid(ni)).rem_euclid(g) == 0
    })
}

/// The member of [`cusp_set`] equivalent to `x`.
pub fn canonical(n: u64, x: Cusp) -> Cusp {
    cusp_set(n)
        .into_iter()
        .find(|&r| are_equivalent(n, x, r))
        .expect("every cusp is equivalent to a listed representative")
}

/// Width `N / gcd(c^2, N)` of the cusp `a/c`.
pub fn width(n: u64, x: Cusp) -> u64 {
    let c = x.c.unsigned_abs() as u128;
    let g = num_integer::gcd((c * c) % n as u128, n as u128);
    n / g as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp(s: &str) -> Cusp {
        s.parse().unwrap()
    }

    fn names(v: &[Cusp]) -> Vec<String> {
        v.iter().map(|c| c.to_string()).collect()
    }

    /// Literal search over units s and shifts n mod N.
    fn equivalent_by_search(n: i64, x: Cusp, y: Cusp) -> bool {
        if n == 1 {
            return true;
        }
        (1..n).filter(|&s| gcd(s, n) == 1).any(|s| {
            let s_inv = inverse_mod(s, n).unwrap();
            (0..n).any(|t| {
                (y.a - (s_inv * x.a + t * x.c)).rem_euclid(n) == 0 && (y.c - s * x.c).rem_euclid(n) == 0
            })
        })
    }

    #[test]
    fn level_18_matches_listed_set() {
        assert_eq!(names(&cusp_set(18)), ["inf", "0", "1/2", "1/3", "2/3", "1/6", "5/6", "1/9"]);
    }

    #[test]
    fn level_36_matches_listed_set() {
        let expected = ["inf", "0", "1/2", "1/3", "2/3", "1/4", "1/6", "5/6", "1/9", "1/12", "5/12", "1/18"];
        assert_eq!(names(&cusp_set(36)), expected);
    }

    #[test]
    fn level_54_matches_listed_set() {
        let expected = ["inf", "0", "1/2", "1/3", "2/3", "1/6", "5/6", "1/9", "2/9", "1/18", "5/18", "1/27"];
        assert_eq!(names(&cusp_set(54)), expected);
        // the printed list uses 5/9 for the second class with denominator 9
        assert!(are_equivalent(54, cusp("5/9"), cusp("2/9")));
    }

    #[test]
    fn level_one_has_one_cusp() {
        assert_eq!(cusp_set(1), vec![Cusp::infinity()]);
    }

    #[test]
    fn level_18p_classwise_matches_listed_set() {
        for p in [5i64, 7, 11, 13] {
            let n = 18 * p as u64;
            let ap = if p == 5 { 11 } else { 5 };
            let listed = [
                (1, 0), (0, 1), (1, 2), (1, 3), (2, 3), (1, 6), (5, 6), (1, 9), (1, 18),
                (1, p), (1, 2 * p), (1, 3 * p), (2, 3 * p), (1, 6 * p), (ap, 6 * p), (1, 9 * p),
            ];
            let set = cusp_set(n);
            assert_eq!(set.len(), 16);
            for (a, c) in listed {
                let x = Cusp::new(a, c).unwrap();
                let hits = set.iter().filter(|&&r| are_equivalent(n, x, r)).count();
                assert_eq!(hits, 1, "{x} at level {n}");
            }
        }
        assert!(cusp_set(90).contains(&Cusp::new(11, 30).unwrap()));
    }

    #[test]
    fn equivalence_examples() {
        assert!(!are_equivalent(18, cusp("1/2"), cusp("5/6")));
        assert!(are_equivalent(18, cusp("5/6"), cusp("5/6")));
        assert!(are_equivalent(18, cusp("7/2"), cusp("1/2")));
        assert!(equivalent_by_search(18, cusp("7/2"), cusp("1/2")));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical(18, cusp("1/20")), cusp("1/2"));
        assert_eq!(canonical(18, Cusp::infinity()), Cusp::infinity());
        assert_eq!(canonical(18, cusp("1/18")), Cusp::infinity());
        assert_eq!(canonical(18, cusp("1/4")), cusp("1/2"));
    }

    #[test]
    fn width_examples() {
        assert_eq!(width(18, Cusp::infinity()), 1);
        assert_eq!(width(18, Cusp::zero()), 18);
        assert_eq!(width(18, cusp("1/2")), 9);
    }

    #[test]
    fn closed_form_matches_literal_search() {
        for n in [1i64, 2, 6, 12, 18, 20, 36] {
            for c1 in 0..=n {
                for a1 in -n..=n {
                    let Ok(x) = Cusp::new(a1, c1) else { continue };
                    for y in cusp_set(n as u64) {
                        assert_eq!(are_equivalent(n as u64, x, y), equivalent_by_search(n, x, y), "{x} ~ {y} mod {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn cusp_count_formula() {
        for n in 1..=200 {
            assert_eq!(cusp_set(n).len() as u64, cusp_count(n), "N={n}");
        }
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(cusp("inf"), Cusp::infinity());
        assert_eq!(cusp("-1/0"), Cusp::infinity());
        assert_eq!(cusp("0"), Cusp::zero());
        assert_eq!(cusp("1/-2").to_string(), "-1/2");
        assert!(matches!("2/4".parse::<Cusp>(), Err(CuspError::NotCoprime { .. })));
        assert!(matches!("x".parse::<Cusp>(), Err(CuspError::Parse(_))));
    }
}
