//! Eta quotients `prod_{δ | N} η(δτ)^{r_δ}` on Gamma0(N).
//!
//! Covers the weight and modularity conditions, exact q-expansion, the
//! Ligozat order at each cusp, and the named functions used throughout the
//! crate: `w(τ) = X(τ)X(3τ)`, the order-six continued fraction `X(τ)` and
//! Klein's `j(τ)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{gcd, sigma3_table};
use crate::cusps::{canonical, cusp_set, Cusp};
use crate::series::QSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaError {
    #[error("{delta} does not divide the level {level}")]
    NotDivisor { delta: u64, level: u64 },
    #[error("level must be positive")]
    ZeroLevel,
    #[error("cannot lift a quotient of level {from} to level {to}: {to} is not a multiple of {from}")]
    BadLift { from: u64, to: u64 },
    #[error("cusp {cusp} does not reduce to a denominator dividing {level}")]
    CuspNotReduced { cusp: Cusp, level: u64 },
    #[error("the quotient {0} is not a modular function on its level")]
    NotModular(String),
    #[error("order {order} at cusp {cusp} is not an integer")]
    NonIntegralOrder { cusp: Cusp, order: Ratio<i64> },
    #[error("malformed quotient specification {0:?}")]
    BadSpec(String),
}

/// An eta quotient of a fixed level. Zero exponents are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaQuotient {
    level: u64,
    exponents: BTreeMap<u64, i64>,
}

/// The Ligozat order of an eta quotient at one cusp.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspOrder {
    pub cusp: Cusp,
    #[serde(with = "ratio_string")]
    pub order: Ratio<i64>,
}

mod ratio_string {
    use num_rational::Ratio;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Behaviour of `w` at a cusp, read off from its denominator alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PoleZeroClass {
    Pole,
    Zero,
    Regular,
}

impl EtaQuotient {
    pub fn new(level: u64, exponents: impl IntoIterator<Item = (u64, i64)>) -> Result<Self, EtaError> {
        if level == 0 {
            return Err(EtaError::ZeroLevel);
        }
        let mut map = BTreeMap::new();
        for (delta, r) in exponents {
            if delta == 0 || !level.is_multiple_of(delta) {
                return Err(EtaError::NotDivisor { delta, level });
            }
            *map.entry(delta).or_insert(0) += r;
        }
        map.retain(|_, r| *r != 0);
        Ok(EtaQuotient { level, exponents: map })
    }

    /// The constant function 1 viewed at `level`.
    pub fn trivial(level: u64) -> Self {
        EtaQuotient { level, exponents: BTreeMap::new() }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn exponent(&self, delta: u64) -> i64 {
        self.exponents.get(&delta).copied().unwrap_or(0)
    }

    /// `k = (1/2) sum r_δ`.
    pub fn weight(&self) -> Ratio<i64> {
        Ratio::new(self.exponents.values().sum(), 2)
    }

    /// `sum δ r_δ`, i.e. 24 times the order at infinity.
    fn delta_sum(&self) -> i64 {
        self.exponents.iter().map(|(&d, &r)| d as i64 * r).sum()
    }

    /// `sum (N/δ) r_δ`.
    fn codelta_sum(&self) -> i64 {
        self.exponents.iter().map(|(&d, &r)| (self.level / d) as i64 * r).sum()
    }

    /// Weight zero and both mod-24 congruences. The multiplier character is
    /// not evaluated.
    pub fn is_modular_function(&self) -> bool {
        self.weight().is_zero() && self.delta_sum() % 24 == 0 && self.codelta_sum() % 24 == 0
    }

    /// The same function regarded at a multiple of the level.
    pub fn lift(&self, level: u64) -> Result<Self, EtaError> {
        if level == 0 || !level.is_multiple_of(self.level) {
            return Err(EtaError::BadLift { from: self.level, to: level });
        }
        Ok(EtaQuotient { level, exponents: self.exponents.clone() })
    }

    /// `f(nτ)`: every `δ` becomes `nδ` and the level becomes `nN`.
    pub fn rescale(&self, n: u64) -> Self {
        assert!(n > 0, "rescale factor must be positive");
        EtaQuotient {
            level: self.level * n,
            exponents: self.exponents.iter().map(|(&d, &r)| (d * n, r)).collect(),
        }
    }

    /// Product of two quotients, at the lcm of their levels.
    pub fn mul(&self, other: &Self) -> Self {
        let level = num_integer::lcm(self.level, other.level);
        let mut exponents = self.exponents.clone();
        for (&d, &r) in &other.exponents {
            *exponents.entry(d).or_insert(0) += r;
        }
        exponents.retain(|_, r| *r != 0);
        EtaQuotient { level, exponents }
    }

    /// Reciprocal quotient.
    pub fn inverse(&self) -> Self {
        EtaQuotient { level: self.level, exponents: self.exponents.iter().map(|(&d, &r)| (d, -r)).collect() }
    }

    /// q-expansion known below `q^prec`. The exponent denominator is the
    /// smallest `h` dividing 24 that accommodates the `q^(sum δ r_δ / 24)` prefactor.
    pub fn expand(&self, prec: i64) -> QSeries {
        assert!(prec >= 1, "precision must be at least 1");
        let m = self.delta_sum();
        let g = gcd(m, 24);
        let h = (24 / g) as u64;
        let shift = m / g;
        // terms k of the product land at k + m/24 < prec
        let k_prec = num_integer::Integer::div_ceil(&(24 * prec - m), &24);
        if k_prec <= 0 {
            return QSeries::zero(h, prec * h as i64);
        }
        let mut numer = QSeries::one(k_prec);
        let mut denom = QSeries::one(k_prec);
        for (&d, &r) in &self.exponents {
            let e = QSeries::euler_product(d, k_prec).pow(r.abs()).expect("nonnegative power");
            if r > 0 {
                numer = numer.mul(&e);
            } else {
                denom = denom.mul(&e);
            }
        }
        let product = numer.mul(&denom.invert().expect("euler products have constant term 1"));
        product.with_denom(h).shift(shift).truncate(prec * h as i64)
    }

    /// Ligozat order at the cusp `x`, after reducing `x` to its representative
    /// at this level. Measured in the local parameter at that cusp.
    pub fn order_at_cusp(&self, x: Cusp) -> Result<Ratio<i64>, EtaError> {
        let n = self.level as i64;
        let rep = canonical(self.level, x);
        let d = if rep.is_infinity() { n } else { rep.denominator() };
        if d <= 0 || n % d != 0 || gcd(rep.numerator(), d) != 1 {
            return Err(EtaError::CuspNotReduced { cusp: x, level: self.level });
        }
        let sum: Ratio<i64> = self
            .exponents
            .iter()
            .map(|(&delta, &r)| {
                let g = gcd(d, delta as i64);
                Ratio::new(g * g * r, delta as i64)
            })
            .sum();
        Ok(Ratio::new(n, 24 * d * gcd(d, n / d)) * sum)
    }

    fn require_modular(&self) -> Result<(), EtaError> {
        if self.is_modular_function() {
            Ok(())
        } else {
            Err(EtaError::NotModular(self.to_string()))
        }
    }

    /// Orders at every representative of [`cusp_set`], in that order.
    pub fn divisor(&self) -> Result<Vec<CuspOrder>, EtaError> {
        self.require_modular()?;
        cusp_set(self.level)
            .into_iter()
            .map(|cusp| {
                let order = self.order_at_cusp(cusp)?;
                if !order.is_integer() {
                    return Err(EtaError::NonIntegralOrder { cusp, order });
                }
                Ok(CuspOrder { cusp, order })
            })
            .collect()
    }

    /// `-sum` of the negative orders over the cusps.
    pub fn total_pole_degree(&self) -> Result<u64, EtaError> {
        Ok(self
            .divisor()?
            .iter()
            .filter(|o| o.order.is_negative())
            .map(|o| (-o.order.to_integer()) as u64)
            .sum())
    }

    /// Sum of the positive orders over the cusps.
    pub fn total_zero_degree(&self) -> Result<u64, EtaError> {
        Ok(self
            .divisor()?
            .iter()
            .filter(|o| o.order.is_positive())
            .map(|o| o.order.to_integer() as u64)
            .sum())
    }
}

impl fmt::Display for EtaQuotient {
    /// Prints the `"N; δ:r, ..."` form accepted by [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.level)?;
        if self.exponents.is_empty() {
            return write!(f, " 1:0");
        }
        let parts: Vec<String> = self.exponents.iter().map(|(d, r)| format!("{d}:{r}")).collect();
        write!(f, " {}", parts.join(", "))
    }
}

impl FromStr for EtaQuotient {
    type Err = EtaError;

    /// Parses `"N; δ1:r1, δ2:r2, ..."`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EtaError::BadSpec(s.to_string());
        let (level, rest) = s.split_once(';').ok_or_else(bad)?;
        let level: u64 = level.trim().parse().map_err(|_| bad())?;
        let mut pairs = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (d, r) = item.split_once(':').ok_or_else(bad)?;
            pairs.push((d.trim().parse().map_err(|_| bad())?, r.trim().parse().map_err(|_| bad())?));
        }
        EtaQuotient::new(level, pairs)
    }
}

/// Whether `w` has a pole, a zero, or neither at `a/c`: a pole iff
/// `c = ±2 (mod 6)`, a zero iff `18 | c`.
pub fn pole_zero_class(x: Cusp) -> PoleZeroClass {
    let c = x.denominator();
    match c.rem_euclid(6) {
        2 | 4 => PoleZeroClass::Pole,
        _ if c % 18 == 0 => PoleZeroClass::Zero,
        _ => PoleZeroClass::Regular,
    }
}

/// `w(τ) = η(τ)η(18τ)^2 / (η(2τ)^2 η(9τ))` at level 18.
pub fn named_w() -> EtaQuotient {
    EtaQuotient::new(18, [(1, 1), (2, -2), (9, -1), (18, 2)]).expect("divisors of 18")
}

/// `X(τ) = η(τ)η(6τ)^2 / (η(2τ)^2 η(3τ))` at level 6.
pub fn named_x() -> EtaQuotient {
    EtaQuotient::new(6, [(1, 1), (2, -2), (3, -1), (6, 2)]).expect("divisors of 6")
}

/// `Δ(τ) = η(τ)^24`.
pub fn discriminant() -> EtaQuotient {
    EtaQuotient::new(1, [(1, 24)]).expect("level one")
}

/// `E4 = 1 + 240 sum σ3(n) q^n` below `q^prec`.
pub fn eisenstein_e4(prec: i64) -> QSeries {
    assert!(prec >= 1);
    let sigma = sigma3_table(prec as usize);
    let coeffs = sigma
        .iter()
        .enumerate()
        .map(|(n, &s)| if n == 0 { BigInt::from(1) } else { BigInt::from(s) * 240 })
        .collect();
    QSeries::from_integers(1, 0, coeffs)
}

/// `j = E4^3 / Δ` below `q^prec`.
pub fn named_j(prec: i64) -> QSeries {
    assert!(prec >= 0, "precision must be nonnegative");
    let e4 = eisenstein_e4(prec + 1);
    let delta = discriminant().expand(prec + 2);
    let j = e4.pow(3).expect("nonnegative power").mul(&delta.invert().expect("Δ is nonzero"));
    j.truncate(prec)
}

/// `X(τ)` as the direct truncated product
/// `q^(1/4) prod (1-q^(6n-1))(1-q^(6n-5)) / ((1-q^(6n-2))(1-q^(6n-4)))`,
/// independent of the eta-quotient route.
pub fn continued_fraction_product(prec: i64) -> QSeries {
    assert!(prec >= 1);
    // the product part, in whole powers of q
    let len = prec as usize;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::from(1);
    let mut factor = |m: usize, invert: bool| {
        if m >= len {
            return;
        }
        if invert {
            // multiply by 1/(1-q^m) = 1 + q^m + q^2m + ...
            for e in m..len {
                let prev = c[e - m].clone();
                c[e] += prev;
            }
        } else {
            for e in (m..len).rev() {
                let prev = c[e - m].clone();
                c[e] -= prev;
            }
        }
    };
    let mut n = 1;
    while 6 * n - 5 < len {
        factor(6 * n - 1, false);
        factor(6 * n - 5, false);
        factor(6 * n - 2, true);
        factor(6 * n - 4, true);
        n += 1;
    }
    QSeries::from_integers(1, 0, c).with_denom(4).shift(1).truncate(4 * prec)
}
