//! Exact truncated Laurent series in fractional powers of `q`.
//!
//! A [`QSeries`] stores the coefficients of `q^(val/h), ..., q^((prec-1)/h)`
//! densely, as integer numerators over one shared positive denominator. All
//! arithmetic is exact. Precision is tracked pessimistically and never
//! extended: reading at or past `prec` is an error, not a silent zero.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot invert the zero series")]
    ZeroSeries,
    #[error("coefficient of q^({exponent}/{denom}) requested but the series is only known below q^({prec}/{denom})")]
    BeyondPrecision { exponent: i64, prec: i64, denom: u64 },
}

/// Output length above which products are split across threads.
const PARALLEL_THRESHOLD: usize = 192;

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    denom: u64,
    val: i64,
    prec: i64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl QSeries {
    /// Builds a series from raw parts, stripping leading zeros and reducing
    /// the shared denominator. `num[k]` is the numerator of `q^((val+k)/denom)`.
    fn build(denom: u64, val: i64, prec: i64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(denom > 0);
        debug_assert_eq!(num.len() as i64, (prec - val).max(0));
        let lead = num.iter().position(|c| !c.is_zero());
        let Some(lead) = lead else {
            return Self::zero(denom, prec);
        };
        num.drain(..lead);
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                if !c.is_zero() {
                    g = g.gcd(c);
                }
            }
            if !g.is_one() {
                num.iter_mut().for_each(|c| *c = &*c / &g);
                den /= &g;
            }
        }
        QSeries { denom, val: val + lead as i64, prec, num, den }
    }

    /// The zero series known up to (but excluding) `q^(prec/denom)`.
    pub fn zero(denom: u64, prec: i64) -> Self {
        assert!(denom > 0, "exponent denominator must be positive");
        QSeries { denom, val: prec, prec, num: Vec::new(), den: BigInt::one() }
    }

    /// The constant `1` known up to `q^prec`.
    pub fn one(prec: i64) -> Self {
        Self::monomial(BigRational::one(), 0, 1, prec)
    }

    /// `coeff * q^(exp/denom)`, known below `q^(prec/denom)`.
    pub fn monomial(coeff: BigRational, exp: i64, denom: u64, prec: i64) -> Self {
        if exp >= prec {
            return Self::zero(denom, prec);
        }
        let mut num = vec![BigInt::zero(); (prec - exp) as usize];
        num[0] = coeff.numer().clone();
        Self::build(denom, exp, prec, num, coeff.denom().clone())
    }

    /// Series with integer coefficients `coeffs[k]` at `q^((val+k)/denom)`;
    /// the precision is `val + coeffs.len()`.
    pub fn from_integers(denom: u64, val: i64, coeffs: Vec<BigInt>) -> Self {
        let prec = val + coeffs.len() as i64;
        Self::build(denom, val, prec, coeffs, BigInt::one())
    }

    /// Series with rational coefficients `coeffs[k]` at `q^((val+k)/denom)`.
    pub fn from_rationals(denom: u64, val: i64, coeffs: &[BigRational]) -> Self {
        let prec = val + coeffs.len() as i64;
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::build(denom, val, prec, num, den)
    }

    /// Convenience constructor from small integers, `h = 1`.
    pub fn from_i64s(val: i64, coeffs: &[i64]) -> Self {
        Self::from_integers(1, val, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Exponent denominator `h`: exponents are multiples of `1/h`.
    pub fn denom(&self) -> u64 {
        self.denom
    }

    /// Exclusive truncation bound, in units of `1/h`.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// Truncation bound as a rational power of `q`.
    pub fn prec_q(&self) -> Ratio<i64> {
        Ratio::new(self.prec, self.denom as i64)
    }

    /// Valuation in units of `1/h`; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Valuation as a rational power of `q`.
    pub fn valuation_q(&self) -> Option<Ratio<i64>> {
        self.valuation().map(|v| Ratio::new(v, self.denom as i64))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Coefficient of `q^(exp/h)`.
    pub fn coeff(&self, exp: i64) -> Result<BigRational, SeriesError> {
        if exp >= self.prec {
            return Err(SeriesError::BeyondPrecision { exponent: exp, prec: self.prec, denom: self.denom });
        }
        if exp < self.val {
            return Ok(BigRational::zero());
        }
        let n = &self.num[(exp - self.val) as usize];
        Ok(BigRational::new(n.clone(), self.den.clone()))
    }

    /// Coefficient of `q^exp` for a rational exponent.
    pub fn coeff_at(&self, exp: Ratio<i64>) -> Result<BigRational, SeriesError> {
        let scaled = exp * Ratio::from_integer(self.denom as i64);
        if !scaled.is_integer() {
            let limit = Ratio::new(self.prec, self.denom as i64);
            if exp >= limit {
                return Err(SeriesError::BeyondPrecision {
                    exponent: scaled.ceil().to_integer(),
                    prec: self.prec,
                    denom: self.denom,
                });
            }
            return Ok(BigRational::zero());
        }
        self.coeff(scaled.to_integer())
    }

    /// Leading coefficient; `None` for the zero series.
    pub fn leading_coeff(&self) -> Option<BigRational> {
        self.num.first().map(|n| BigRational::new(n.clone(), self.den.clone()))
    }

    /// Dense coefficients from the valuation up to the precision bound.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num.iter().map(|n| BigRational::new(n.clone(), self.den.clone())).collect()
    }

    /// `(exponent, coefficient)` pairs for the nonzero terms, exponent in units of `1/h`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, BigRational)> + '_ {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.val + k as i64, BigRational::new(c.clone(), self.den.clone())))
    }

    /// Dense integer coefficients if every coefficient is an integer.
    pub fn integer_coefficients(&self) -> Option<&[BigInt]> {
        self.den.is_one().then_some(&self.num[..])
    }

    /// Re-express with exponent denominator `denom`, a multiple of the current one.
    pub fn with_denom(&self, denom: u64) -> Self {
        assert!(denom.is_multiple_of(self.denom), "new denominator {denom} is not a multiple of {}", self.denom);
        let f = denom / self.denom;
        if f == 1 {
            return self.clone();
        }
        let step = f as i64;
        if self.is_zero() {
            return Self::zero(denom, self.prec * step);
        }
        let len = ((self.prec - self.val) * step) as usize;
        let mut num = vec![BigInt::zero(); len];
        for (k, c) in self.num.iter().enumerate() {
            num[k * f as usize] = c.clone();
        }
        QSeries { denom, val: self.val * step, prec: self.prec * step, num, den: self.den.clone() }
    }

    /// Smallest exponent denominator that represents the same known terms.
    pub fn normalize(&self) -> Self {
        let mut g = self.denom;
        for (k, c) in self.num.iter().enumerate() {
            if g == 1 {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(&((self.val + k as i64).unsigned_abs()));
            }
        }
        if g == 1 {
            return self.clone();
        }
        let gi = g as i64;
        let prec = Integer::div_ceil(&self.prec, &gi);
        let denom = self.denom / g;
        if self.is_zero() {
            return Self::zero(denom, prec);
        }
        let val = self.val / gi;
        let num = (val..prec)
            .map(|e| {
                let idx = (e * gi - self.val) as usize;
                self.num.get(idx).cloned().unwrap_or_default()
            })
            .collect();
        QSeries { denom, val, prec, num, den: self.den.clone() }
    }

    /// Drops every term at or above `q^(prec/h)`; a larger bound is a no-op.
    pub fn truncate(&self, prec: i64) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        if prec <= self.val {
            return Self::zero(self.denom, prec);
        }
        let num = self.num[..(prec - self.val) as usize].to_vec();
        Self::build(self.denom, self.val, prec, num, self.den.clone())
    }

    /// Truncates to a bound given as a rational power of `q`.
    pub fn truncate_q(&self, prec: Ratio<i64>) -> Self {
        let units = (prec * Ratio::from_integer(self.denom as i64)).ceil().to_integer();
        self.truncate(units)
    }

    fn unify(a: &QSeries, b: &QSeries) -> (QSeries, QSeries) {
        if a.denom == b.denom {
            return (a.clone(), b.clone());
        }
        let l = a.denom.lcm(&b.denom);
        (a.with_denom(l), b.with_denom(l))
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        if self.denom != other.denom {
            let (a, b) = Self::unify(self, other);
            return a.add(&b);
        }
        let prec = self.prec.min(other.prec);
        let val = self.val.min(other.val).min(prec);
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let mut num = vec![BigInt::zero(); (prec - val) as usize];
        for (src, f) in [(self, &fa), (other, &fb)] {
            for (k, c) in src.num.iter().enumerate() {
                let e = src.val + k as i64;
                if e >= prec {
                    break;
                }
                num[(e - val) as usize] += c * f;
            }
        }
        Self::build(self.denom, val, prec, num, den)
    }

    pub fn neg(&self) -> QSeries {
        QSeries { num: self.num.iter().map(|c| -c).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRational) -> QSeries {
        if c.is_zero() {
            return Self::zero(self.denom, self.prec);
        }
        let num = self.num.iter().map(|x| x * c.numer()).collect();
        Self::build(self.denom, self.val, self.prec, num, &self.den * c.denom())
    }

    pub fn scale_int(&self, c: i64) -> QSeries {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Multiplies by `q^(shift/h)`.
    pub fn shift(&self, shift: i64) -> QSeries {
        QSeries { val: self.val + shift, prec: self.prec + shift, ..self.clone() }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        if self.denom != other.denom {
            let (a, b) = Self::unify(self, other);
            return a.mul(&b);
        }
        let prec = (self.prec + other.val).min(other.prec + self.val);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.denom, prec);
        }
        let val = self.val + other.val;
        let len = (prec - val) as usize;
        let (a, b) = (&self.num, &other.num);
        // scatter the nonzero terms of a sparse factor, e.g. f(q^n)
        let sparse = |x: &[BigInt]| x.iter().filter(|c| !c.is_zero()).count() * 4 < x.len();
        if sparse(a) || sparse(b) {
            let (dense, thin) = if sparse(b) { (a, b) } else { (b, a) };
            let mut num = vec![BigInt::zero(); len];
            for (j, y) in thin.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                if j >= len {
                    break;
                }
                for (out, x) in num[j..].iter_mut().zip(dense) {
                    *out += x * y;
                }
            }
            return Self::build(self.denom, val, prec, num, &self.den * &other.den);
        }
        let coeff = |k: usize| {
            let lo = k.saturating_sub(b.len() - 1);
            let hi = k.min(a.len() - 1);
            let mut acc = BigInt::zero();
            for i in lo..=hi {
                acc += &a[i] * &b[k - i];
            }
            acc
        };
        let num: Vec<BigInt> = if len >= PARALLEL_THRESHOLD {
            (0..len).into_par_iter().map(coeff).collect()
        } else {
            (0..len).map(coeff).collect()
        };
        Self::build(self.denom, val, prec, num, &self.den * &other.den)
    }

    /// Multiplicative inverse; the result has valuation `-val` and the same
    /// number of known terms.
    pub fn invert(&self) -> Result<QSeries, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::ZeroSeries);
        }
        let len = self.num.len();
        let a0 = &self.num[0];
        // d[n] = a0^(n+1) * c[n] where c is the inverse of the numerator series;
        // d[n] = -sum_{k=1..n} a[k] a0^(k-1) d[n-k] keeps everything integral.
        let mut weighted = vec![BigInt::zero(); len];
        let mut pow = BigInt::one();
        for k in 1..len {
            weighted[k] = &self.num[k] * &pow;
            pow *= a0;
        }
        let mut d: Vec<BigInt> = Vec::with_capacity(len);
        d.push(BigInt::one());
        for n in 1..len {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !weighted[k].is_zero() {
                    acc += &weighted[k] * &d[n - k];
                }
            }
            d.push(-acc);
        }
        // c[n] = d[n] / a0^(n+1) = d[n] * a0^(len-1-n) / a0^len, times the old denominator.
        let mut num = vec![BigInt::zero(); len];
        let mut p = BigInt::one();
        for n in (0..len).rev() {
            num[n] = &d[n] * &p * &self.den;
            p *= a0;
        }
        let val = -self.val;
        Ok(Self::build(self.denom, val, val + len as i64, num, p))
    }

    /// Integer power; negative exponents go through [`QSeries::invert`].
    pub fn pow(&self, k: i64) -> Result<QSeries, SeriesError> {
        if k < 0 {
            return self.invert()?.pow(-k);
        }
        let rel = self.prec - self.val;
        let mut result = QSeries::monomial(BigRational::one(), 0, self.denom, rel.max(0));
        if k == 0 {
            return Ok(result);
        }
        let mut base = self.clone();
        let mut e = k as u64;
        let mut first = true;
        while e > 0 {
            if e & 1 == 1 {
                result = if first { base.clone() } else { result.mul(&base) };
                first = false;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// Substitutes `q -> q^n`, turning `f(tau)` into `f(n tau)`.
    pub fn rescale(&self, n: u64) -> QSeries {
        assert!(n > 0, "rescale factor must be positive");
        if n == 1 {
            return self.clone();
        }
        let step = n as i64;
        if self.is_zero() {
            return Self::zero(self.denom, self.prec * step);
        }
        let len = ((self.prec - self.val) * step) as usize;
        let mut num = vec![BigInt::zero(); len];
        for (k, c) in self.num.iter().enumerate() {
            num[k * n as usize] = c.clone();
        }
        QSeries { denom: self.denom, val: self.val * step, prec: self.prec * step, num, den: self.den.clone() }
    }

    /// `prod_{n>=1} (1 - q^(scale*n))` below `q^prec`, from the pentagonal
    /// number theorem. Exponent denominator 1.
    pub fn euler_product(scale: u64, prec: i64) -> QSeries {
        assert!(scale > 0, "scale must be positive");
        if prec <= 0 {
            return Self::zero(1, prec);
        }
        let mut num = vec![BigInt::zero(); prec as usize];
        let s = scale as i64;
        // k and -k give the generalised pentagonal numbers k(3k-1)/2 and k(3k+1)/2
        let mut k: i64 = 0;
        loop {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let e1 = s * (k * (3 * k - 1) / 2);
            if e1 >= prec {
                break;
            }
            num[e1 as usize] += sign;
            if k > 0 {
                let e2 = s * (k * (3 * k + 1) / 2);
                if e2 < prec {
                    num[e2 as usize] += sign;
                }
            }
            k += 1;
        }
        Self::build(1, 0, prec, num, BigInt::one())
    }

    /// Adds the exact constant `c` (a no-op when `q^0` is past the precision).
    pub fn add_constant(&self, c: &BigRational) -> QSeries {
        if c.is_zero() || self.prec <= 0 {
            return self.clone();
        }
        let val = self.val.min(0);
        let den = self.den.lcm(c.denom());
        let f = &den / &self.den;
        let mut num = vec![BigInt::zero(); (self.prec - val) as usize];
        for (k, x) in self.num.iter().enumerate() {
            num[(self.val - val) as usize + k] = x * &f;
        }
        num[(-val) as usize] += c.numer() * (&den / c.denom());
        Self::build(self.denom, val, self.prec, num, den)
    }

    /// Evaluates an integer polynomial (coefficients by ascending degree) at this series.
    pub fn eval_poly(&self, coeffs: &[i64]) -> QSeries {
        let constant = |c: i64| BigRational::from_integer(c.into());
        match coeffs {
            [] => QSeries::zero(self.denom, self.prec.max(0)),
            [c] => QSeries::monomial(constant(*c), 0, self.denom, self.prec.max(1)),
            [.., lead] => {
                let mut acc = self.scale_int(*lead);
                for &c in coeffs[1..coeffs.len() - 1].iter().rev() {
                    acc = acc.add_constant(&constant(c)).mul(self);
                }
                acc.add_constant(&constant(coeffs[0]))
            }
        }
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries(h={}, {})", self.denom, self)
    }
}

fn fmt_exponent(e: i64, h: u64) -> String {
    let r = Ratio::new(e, h as i64);
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let (neg, abs) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let exp = fmt_exponent(e, self.denom);
            match (abs.is_one(), exp.as_str()) {
                (_, "0") => write!(f, "{abs}")?,
                (true, "1") => write!(f, "q")?,
                (true, _) => write!(f, "q^{exp}")?,
                (false, "1") => write!(f, "{abs}*q")?,
                (false, _) => write!(f, "{abs}*q^{exp}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", fmt_exponent(self.prec, self.denom))
    }
}

impl std::ops::Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl std::ops::Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl std::ops::Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl std::ops::Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.integer_coefficients()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    /// Direct product of (1 - q^(s n)) for s n < prec.
    fn direct_product(scale: u64, prec: i64) -> Vec<i64> {
        let mut c = vec![0i64; prec as usize];
        c[0] = 1;
        let mut m = scale as usize;
        while (m as i64) < prec {
            for e in (m..prec as usize).rev() {
                c[e] -= c[e - m];
            }
            m += scale as usize;
        }
        c
    }

    #[test]
    fn add_cancels() {
        let a = QSeries::from_i64s(1, &[1, -1, 0]);
        let b = QSeries::from_i64s(2, &[1, 0]);
        let s = &a + &b;
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(ints(&s), vec![1, 0, 0]);
    }

    #[test]
    fn add_zero_is_identity() {
        let f = QSeries::from_i64s(0, &[3, 1, 4, 1, 5]);
        let z = QSeries::zero(1, 10);
        assert_eq!(&f + &z, f);
    }

    #[test]
    fn add_constants() {
        let a = QSeries::from_i64s(0, &[1, 1, 0, 0]);
        let b = QSeries::from_i64s(0, &[1, -1, 0, 0]);
        assert_eq!(ints(&(&a + &b)), vec![2, 0, 0, 0]);
    }

    #[test]
    fn geometric_inverse_product() {
        let a = QSeries::from_i64s(0, &[1, -1, 0, 0, 0, 0]);
        let b = QSeries::from_i64s(0, &[1; 6]);
        let p = &a * &b;
        assert_eq!(ints(&p), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn fractional_exponents_add() {
        let a = QSeries::monomial(BigRational::one(), 1, 4, 20);
        let b = QSeries::monomial(BigRational::one(), 3, 4, 20);
        let p = (&a * &b).normalize();
        assert_eq!(p.denom(), 1);
        assert_eq!(p.valuation(), Some(1));
        assert_eq!(p.coeff(1).unwrap(), BigRational::one());
    }

    #[test]
    fn euler_square_matches_direct() {
        let e = QSeries::euler_product(1, 10);
        let sq = &e * &e;
        let d = direct_product(1, 10);
        let mut expect = vec![0i64; 10];
        for i in 0..10 {
            for j in 0..10 - i {
                expect[i + j] += d[i] * d[j];
            }
        }
        assert_eq!(ints(&sq), expect);
        assert_eq!(&ints(&sq)[..7], &[1, -2, -1, 2, 1, 2, -2]);
    }

    #[test]
    fn invert_geometric() {
        let a = QSeries::from_i64s(0, &[1, -1, 0, 0, 0]);
        assert_eq!(ints(&a.invert().unwrap()), vec![1; 5]);
    }

    #[test]
    fn invert_monomial() {
        let q = QSeries::monomial(BigRational::one(), 1, 1, 10);
        let inv = q.invert().unwrap();
        assert_eq!(inv.valuation(), Some(-1));
        assert_eq!(inv.prec(), 8);
    }

    #[test]
    fn invert_zero_fails() {
        assert_eq!(QSeries::zero(1, 5).invert(), Err(SeriesError::ZeroSeries));
    }

    #[test]
    fn invert_non_unit_leading() {
        let a = QSeries::from_i64s(0, &[2, 3, -1, 7, 0, 5]);
        let prod = &a * &a.invert().unwrap();
        assert_eq!(prod, QSeries::one(6));
    }

    #[test]
    fn pow_cases() {
        let f = QSeries::from_i64s(0, &[1, 2, 3]);
        assert_eq!(f.pow(0).unwrap(), QSeries::one(3));
        let q = QSeries::monomial(BigRational::one(), 1, 1, 10);
        let q5 = q.pow(5).unwrap();
        assert_eq!(q5.valuation(), Some(5));
        let one_minus_q = QSeries::from_i64s(0, &[1, -1, 0, 0]);
        assert_eq!(one_minus_q.pow(24).unwrap().coeff(2).unwrap(), BigRational::from_integer(276.into()));
        assert_eq!(QSeries::zero(1, 4).pow(-1), Err(SeriesError::ZeroSeries));
    }

    #[test]
    fn rescale_substitutes() {
        let f = QSeries::from_i64s(1, &[1, -1]);
        let r = f.rescale(3);
        assert_eq!(r.valuation(), Some(3));
        assert_eq!(r.prec(), 9);
        assert_eq!(r.coeff(6).unwrap(), BigRational::from_integer((-1).into()));
        assert_eq!(f.rescale(1), f);
    }

    #[test]
    fn euler_product_examples() {
        assert_eq!(ints(&QSeries::euler_product(1, 13)), direct_product(1, 13));
        assert_eq!(ints(&QSeries::euler_product(1, 13)), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        assert_eq!(ints(&QSeries::euler_product(6, 7)), vec![1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(ints(&QSeries::euler_product(1, 1)), vec![1]);
    }

    #[test]
    fn euler_product_matches_direct_product() {
        for s in 1..=20u64 {
            for p in [1i64, 2, 7, 50, 123, 200] {
                assert_eq!(ints(&QSeries::euler_product(s, p)), direct_product(s, p), "s={s} P={p}");
            }
        }
    }

    #[test]
    fn reading_past_precision_is_an_error() {
        let f = QSeries::from_i64s(0, &[1, 1]);
        assert!(matches!(f.coeff(2), Err(SeriesError::BeyondPrecision { .. })));
        assert_eq!(f.coeff(-3).unwrap(), BigRational::zero());
        let z = QSeries::zero(1, 3);
        assert!(z.coeff(3).is_err());
        assert_eq!(z.coeff(2).unwrap(), BigRational::zero());
    }

    #[test]
    fn normalize_reduces_denominator() {
        let f = QSeries::from_i64s(0, &[1, 0, 0, 0, 2, 0, 0, 0, 3]).with_denom(1);
        let g = f.clone().with_denom(4);
        assert_eq!(g.denom(), 4);
        assert_eq!(g.normalize(), f);
        let h = QSeries::from_integers(4, 1, vec![1.into(), 0.into(), 0.into(), 0.into(), 1.into()]);
        assert_eq!(h.normalize().denom(), 4);
    }

    #[test]
    fn rational_coefficients_survive() {
        let half = BigRational::new(1.into(), 2.into());
        let f = QSeries::from_rationals(1, 0, &[half.clone(), BigRational::one(), half.clone()]);
        let g = &f + &f;
        assert_eq!(g.coeff(0).unwrap(), BigRational::one());
        assert_eq!(g.coeff(1).unwrap(), BigRational::from_integer(2.into()));
        let inv = f.invert().unwrap();
        assert_eq!(&f * &inv, QSeries::one(3));
    }

    #[test]
    fn display_form() {
        let f = QSeries::from_i64s(1, &[1, -1, 1, -2]);
        assert_eq!(f.to_string(), "q - q^2 + q^3 - 2*q^4 + O(q^5)");
    }

    #[test]
    fn eval_poly_horner() {
        let x = QSeries::from_i64s(1, &[1, 0, 0, 0, 0]);
        // 1 - 3x + 3x^2 at x = q
        let p = x.eval_poly(&[1, -3, 3]);
        assert_eq!(ints(&p), vec![1, -3, 3, 0, 0, 0]);
    }
}
