use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::series::QSeries;

/// Bivariate polynomial `sum C_{i,j} X^i Y^j` with big-integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

/// How a raw nullspace vector was turned into the stored primitive polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalization {
    /// Common denominator cleared from the rational vector.
    pub denominator: String,
    /// Content divided out after clearing denominators.
    pub content: String,
    /// `-1` when the sign was flipped to make the pivot positive.
    pub sign: i8,
    /// `(degX, j0)`: the coefficient forced positive.
    pub pivot: (u32, u32),
}

/// One stored coefficient, serialised as `[i, j, "decimal"]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term(pub u32, pub u32, pub String);

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        Self::from_terms([(i, j, c.into())])
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        let e = self.coeffs.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn deg_x(&self) -> u32 {
        self.coeffs.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.coeffs.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Nonzero terms `((i, j), C_{i,j})` ordered by `i`, then `j`.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn to_terms(&self) -> Vec<Term> {
        let mut v: Vec<Term> = self.coeffs.iter().map(|(&(i, j), c)| Term(i, j, c.to_string())).collect();
        v.sort_by_key(|t| (t.1, t.0));
        v
    }

    pub fn from_term_list(terms: &[Term]) -> Result<Self, num_bigint::ParseBigIntError> {
        let mut p = Self::zero();
        for Term(i, j, c) in terms {
            p.add_term(*i, *j, c.parse()?);
        }
        Ok(p)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.coeffs {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivarPoly { coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.coeffs {
            for (&(i2, j2), c2) in &other.coeffs {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    /// `F(Y, X)`.
    pub fn transpose(&self) -> Self {
        BivarPoly { coeffs: self.coeffs.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Least `j` with `C_{degX, j} != 0`.
    pub fn pivot(&self) -> Option<(u32, u32)> {
        let dx = self.deg_x();
        self.coeffs.keys().filter(|k| k.0 == dx).copied().min()
    }

    /// Divides out the content and makes `C_{degX, j0}` positive.
    pub fn primitive(&self) -> (Self, BigInt, i8) {
        let content = self.content();
        if content.is_zero() {
            return (Self::zero(), content, 1);
        }
        let pivot = self.pivot().expect("nonzero polynomial");
        let sign: i8 = if self.coeffs[&pivot].is_negative() { -1 } else { 1 };
        let factor = &content * BigInt::from(sign);
        let coeffs = self.coeffs.iter().map(|(&k, c)| (k, c / &factor)).collect();
        (BivarPoly { coeffs }, content, sign)
    }

    /// True when every coefficient is divisible by `p`.
    pub fn is_zero_mod(&self, p: &BigInt) -> bool {
        self.coeffs.values().all(|c| (c % p).is_zero())
    }

    /// `(X^p - Y)(X - Y^p)`.
    pub fn kronecker_frame(p: u32) -> Self {
        let a = BivarPoly::from_terms([(p, 0, BigInt::one()), (0, 1, BigInt::from(-1))]);
        let b = BivarPoly::from_terms([(1, 0, BigInt::one()), (0, p, BigInt::from(-1))]);
        a.mul(&b)
    }

    /// `F(x, y)` as a q-series.
    pub fn evaluate(&self, x: &QSeries, y: &QSeries) -> QSeries {
        let dx = self.deg_x() as usize;
        let dy = self.deg_y();
        let mut xpows = vec![x.pow(0).expect("x^0")];
        for k in 1..=dx {
            xpows.push(xpows[k - 1].mul(x));
        }
        let row = |j: u32| -> Option<QSeries> {
            let mut acc: Option<QSeries> = None;
            for (&(i, jj), c) in &self.coeffs {
                if jj != j {
                    continue;
                }
                let t = xpows[i as usize].scale(&c.clone().into());
                acc = Some(match acc {
                    Some(a) => a.add(&t),
                    None => t,
                });
            }
            acc
        };
        // Horner in y over the rows of fixed j
        let mut acc: Option<QSeries> = None;
        for j in (0..=dy).rev() {
            if let Some(a) = acc.take() {
                acc = Some(a.mul(y));
            }
            if let Some(r) = row(j) {
                acc = Some(match acc {
                    Some(a) => a.add(&r),
                    None => r,
                });
            }
        }
        acc.unwrap_or_else(|| QSeries::zero(x.denom(), x.prec().min(y.prec())))
    }

    /// Compact form: `X^2 - Y + 2XY - 3X^2Y + Y^2`, ordered by the power
    /// of `Y`, then of `X`; exponents of two or more digits are braced.
    pub fn to_compact(&self) -> String {
        self.render(|base, e| match e {
            1 => base.to_string(),
            e if e < 10 => format!("{base}^{e}"),
            e => format!("{base}^{{{e}}}"),
        }, "")
    }

    /// Plain form with explicit operators: `2*X*Y^2`.
    pub fn to_plain(&self) -> String {
        self.render(|base, e| if e == 1 { base.to_string() } else { format!("{base}^{e}") }, "*")
    }

    fn render(&self, pow: impl Fn(&str, u32) -> String, times: &str) -> String {
        let mut keys: Vec<_> = self.coeffs.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (j, i));
        if keys.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.coeffs[&(i, j)];
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(abs.to_string());
            }
            if i > 0 {
                factors.push(pow("X", i));
            }
            if j > 0 {
                factors.push(pow("Y", j));
            }
            out.push_str(&factors.join(times));
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}
