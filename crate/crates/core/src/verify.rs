//! Reproduction checks for the printed expansions, divisor tables, series
//! identities and modular-equation tables.
//!
//! Every check returns a [`CheckReport`]. A failing report always names the
//! first offending exponent or coefficient, and says whether the identity
//! itself failed or the series were not known far enough to decide.

use std::fmt;
use std::path::Path;

use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arith::psi;
use crate::cusps::{are_equivalent, cusp_set, Cusp};
use crate::eta::{continued_fraction_product, named_j, named_w, named_x, pole_zero_class, EtaQuotient, PoleZeroClass};
use crate::modeq::{
    check_kronecker, check_pattern, check_symmetry, from_kronecker_inner, level_pair, predict_coefficient_pattern,
    solve_modular_equation, BivarPoly, ModEqResult, Term,
};
use crate::series::QSeries;

const GOLDEN_JSON: &str = include_str!("../data/golden_tables.json");

/// Precision of the eta and continued-fraction identities.
pub const IDENTITY_PREC: i64 = 200;
/// Precision of the rational expression for `j`.
pub const J_PREC: i64 = 100;

/// Coefficients of `w` at `q^1 .. q^7`.
pub const W_PREFIX: [i64; 7] = [1, -1, 1, -2, 3, -4, 5];
/// Orders of `w` at `inf, 0, 1/2, 1/3, 2/3, 1/6, 5/6, 1/9` on Gamma0(18).
pub const W_ORDERS_18: [i64; 8] = [1, 0, -1, 0, 0, 0, 0, 0];
/// `P(X)` in the rational expression for `j`, from `X^9` down to the constant.
pub const J_P: [i64; 10] = [1, 225, -1080, 3348, -8262, 16038, -23328, 26244, -19683, 6561];
/// `j = q^-1 + 744 + 196884 q + 21493760 q^2 + ...`
pub const J_PREFIX: [i64; 4] = [1, 744, 196_884, 21_493_760];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Why a check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// A coefficient that should vanish or match does not.
    IdentityFails,
    /// The inputs were not known to the requested precision.
    PrecisionInsufficient,
    /// The computation itself raised an error.
    Error,
}

/// First discrepancy found by a failing check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Where it happened: `q^7`, `C_{3,1}`, a cusp.
    pub at: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub detail: String,
    /// Number of q-coefficients (or table entries) examined.
    pub precision: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<FailureKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, precision: i64, detail: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            status: Status::Pass,
            detail: detail.into(),
            precision,
            failure: None,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, precision: i64, kind: FailureKind, witness: Witness) -> Self {
        let detail = format!("at {}: expected {}, got {}", witness.at, witness.expected, witness.actual);
        CheckReport {
            name: name.into(),
            status: Status::Fail,
            detail,
            precision,
            failure: Some(kind),
            witness: Some(witness),
        }
    }

    fn error(name: impl Into<String>, message: impl fmt::Display) -> Self {
        let witness = Witness { at: "computation".into(), expected: "success".into(), actual: message.to_string() };
        Self::fail(name, 0, FailureKind::Error, witness)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn q_label(exp: i64, denom: u64) -> String {
    let r = Ratio::new(exp, denom as i64);
    if r.is_integer() {
        format!("q^{r}")
    } else {
        format!("q^({r})")
    }
}

/// Passes iff `s` is the zero series known to at least `q^prec`.
pub fn vanishes_to(name: &str, s: &QSeries, prec: i64) -> CheckReport {
    let h = s.denom() as i64;
    let known = s.prec();
    if known < prec * h {
        let witness = Witness {
            at: q_label(known, s.denom()),
            expected: format!("series known below {}", q_label(prec * h, s.denom())),
            actual: format!("known only below {}", q_label(known, s.denom())),
        };
        return CheckReport::fail(name, prec, FailureKind::PrecisionInsufficient, witness);
    }
    match s.truncate(prec * h).terms().next() {
        None => CheckReport::pass(name, prec, format!("vanishes below q^{prec}")),
        Some((e, c)) => {
            let witness = Witness { at: q_label(e, s.denom()), expected: "0".into(), actual: c.to_string() };
            CheckReport::fail(name, prec, FailureKind::IdentityFails, witness)
        }
    }
}

/// Compares `s` at `q^(first + k)` with `expected[k]` for every exponent it knows.
fn prefix_matches(name: &str, s: &QSeries, first: i64, expected: &[i64]) -> CheckReport {
    let mut checked = 0;
    for (k, &e) in expected.iter().enumerate() {
        let exp = first + k as i64;
        let Ok(c) = s.coeff_at(Ratio::from_integer(exp)) else { break };
        checked += 1;
        if c != BigRational::from_integer(e.into()) {
            let witness = Witness { at: q_label(exp, 1), expected: e.to_string(), actual: c.to_string() };
            return CheckReport::fail(name, checked, FailureKind::IdentityFails, witness);
        }
    }
    if checked == 0 {
        let witness = Witness {
            at: q_label(first, 1),
            expected: "a known coefficient".into(),
            actual: format!("known only below {}", q_label(s.prec(), s.denom())),
        };
        return CheckReport::fail(name, 0, FailureKind::PrecisionInsufficient, witness);
    }
    CheckReport::pass(name, checked, format!("{checked} of {} printed coefficients match", expected.len()))
}

/// The printed expansion of `w` to `q^7`.
pub fn check_w_expansion() -> CheckReport {
    check_w_expansion_with(&named_w(), 8)
}

/// The printed prefix against the expansion of `f` below `q^prec`.
pub fn check_w_expansion_with(f: &EtaQuotient, prec: i64) -> CheckReport {
    prefix_matches("w expansion", &f.expand(prec), 1, &W_PREFIX)
}

/// The orders of `w` at the cusps of Gamma0(18).
pub fn check_w_orders() -> CheckReport {
    check_w_orders_with(&cusp_set(18), &W_ORDERS_18)
}

/// Orders of `w` at the given cusps against `expected`.
pub fn check_w_orders_with(cusps: &[Cusp], expected: &[i64]) -> CheckReport {
    let name = "w orders on Gamma0(18)";
    let w = named_w();
    for (&x, &e) in cusps.iter().zip(expected) {
        let got = match w.order_at_cusp(x) {
            Ok(o) => o,
            Err(err) => return CheckReport::error(name, err),
        };
        if got != e.into() {
            let witness = Witness { at: format!("cusp {x}"), expected: e.to_string(), actual: got.to_string() };
            return CheckReport::fail(name, cusps.len() as i64, FailureKind::IdentityFails, witness);
        }
    }
    CheckReport::pass(name, cusps.len() as i64, format!("orders {expected:?} at {} cusps", cusps.len()))
}

/// `c0 + c1 f + c2 f^2 + ...`
fn poly_in(f: &QSeries, coeffs: &[i64]) -> QSeries {
    f.eval_poly(coeffs)
}

/// `X^4 = w (1 - 3w + 3w^2)`, i.e. both sides minus each other vanish.
pub fn check_x_quartic() -> CheckReport {
    check_x_quartic_with(IDENTITY_PREC, &[1, -3, 3])
}

/// `X^4 - w (c0 + c1 w + c2 w^2)` below `q^prec`.
pub fn check_x_quartic_with(prec: i64, c: &[i64]) -> CheckReport {
    let x = named_x().expand(prec + 1);
    let w = named_w().expand(prec + 1);
    let lhs = x.pow(4).expect("power").normalize();
    let rhs = w.mul(&poly_in(&w, c));
    vanishes_to("X^4 = w(1 - 3w + 3w^2)", &lhs.sub(&rhs), prec)
}

/// `X(3τ)^4 (1 - 3w + 3w^2) = w^3`, the quotient identity with the
/// denominator cleared.
pub fn check_x3_quartic() -> CheckReport {
    check_x3_quartic_with(IDENTITY_PREC, &[1, -3, 3])
}

pub fn check_x3_quartic_with(prec: i64, c: &[i64]) -> CheckReport {
    let x3 = named_x().expand(prec + 1).rescale(3);
    let w = named_w().expand(prec + 1);
    let lhs = x3.pow(4).expect("power").normalize().mul(&poly_in(&w, c));
    let rhs = w.pow(3).expect("power");
    vanishes_to("X(3t)^4 (1 - 3w + 3w^2) = w^3", &lhs.sub(&rhs), prec)
}

/// Both identities relating `X` and `w`.
pub fn check_x_w_identities() -> Vec<CheckReport> {
    vec![check_x_quartic(), check_x3_quartic()]
}

/// `X^3 - X(3τ) + 3 X X(3τ)^2 - 3 X^2 X(3τ)^3 = 0`.
pub fn check_x_level_three() -> CheckReport {
    check_x_level_three_with(IDENTITY_PREC, [1, -1, 3, -3])
}

/// The level-three relation for `X` with the four signed coefficients `c`.
pub fn check_x_level_three_with(prec: i64, c: [i64; 4]) -> CheckReport {
    let x = named_x().expand(prec + 1);
    let x3 = x.rescale(3);
    let terms = [
        x.pow(3).expect("power"),
        x3.clone(),
        x.mul(&x3.pow(2).expect("power")),
        x.pow(2).expect("power").mul(&x3.pow(3).expect("power")),
    ];
    let mut sum = QSeries::zero(x.denom(), (prec + 1) * x.denom() as i64);
    for (t, &k) in terms.iter().zip(&c) {
        sum = sum.add(&t.scale_int(k));
    }
    vanishes_to("X^3 - X(3t) + 3X X(3t)^2 - 3X^2 X(3t)^3 = 0", &sum, prec)
}

/// The expansion of `j` begins `q^-1 + 744 + 196884 q + 21493760 q^2`.
pub fn check_j_prefix() -> CheckReport {
    prefix_matches("j expansion", &named_j(3), -1, &J_PREFIX)
}

/// `j` as a rational function of `f = 1/w`, cross-multiplied.
pub fn check_j_identity() -> CheckReport {
    check_j_identity_with(J_PREC, &J_P)
}

/// `j (f-1)^2 f^9 (f-3)^18 (f^2-3f+3) (f^2+3)^2 - (f^3+3f^2-9f+9)^3 P(f)^3`
/// below `q^prec`, with `P` given from the leading coefficient down.
pub fn check_j_identity_with(prec: i64, p: &[i64]) -> CheckReport {
    // each factor with a pole at q = 0 costs one term of precision
    let slack = 48;
    let f = named_w().expand(prec + slack).invert().expect("w is nonzero");
    let j = named_j(prec + slack);
    // coefficients from the leading one down, as printed
    let pw = |coeffs: &[i64], k: i64| {
        let ascending: Vec<i64> = coeffs.iter().rev().copied().collect();
        f.eval_poly(&ascending).pow(k).expect("power")
    };
    let lhs = [
        pw(&[1, -1], 2),
        f.pow(9).expect("power"),
        pw(&[1, -3], 18),
        pw(&[1, -3, 3], 1),
        pw(&[1, 0, 3], 2),
    ]
    .iter()
    .fold(j, |acc, s| acc.mul(s));
    let rhs = pw(&[1, 3, -9, 9], 3).mul(&pw(p, 3));
    vanishes_to("j as a rational function of 1/w", &lhs.sub(&rhs), prec)
}

/// `X` as an eta quotient against the direct product.
pub fn check_x_product() -> CheckReport {
    let prec = IDENTITY_PREC;
    let diff = named_x().expand(prec).sub(&continued_fraction_product(prec));
    vanishes_to("X eta quotient = continued fraction product", &diff, prec)
}

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("cannot read golden tables: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed golden tables: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad coefficient in golden tables: {0}")]
    Coefficient(#[from] num_bigint::ParseBigIntError),
}

/// One transcribed equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "presentation", rename_all = "snake_case")]
pub enum GoldenEntry {
    /// Every coefficient of `F`.
    Flat { level: u64, terms: Vec<Term> },
    /// Only `G` in `F = (X^p - Y)(X - Y^p) - p X Y G`.
    KroneckerFrame { level: u64, inner: Vec<Term> },
}

impl GoldenEntry {
    pub fn level(&self) -> u64 {
        match self {
            GoldenEntry::Flat { level, .. } | GoldenEntry::KroneckerFrame { level, .. } => *level,
        }
    }

    /// The full coefficient grid of `F`. Factored entries are expanded here and
    /// nowhere else.
    pub fn flat(&self) -> Result<BivarPoly, GoldenError> {
        Ok(match self {
            GoldenEntry::Flat { terms, .. } => BivarPoly::from_term_list(terms)?,
            GoldenEntry::KroneckerFrame { level, inner } => from_kronecker_inner(*level, &BivarPoly::from_term_list(inner)?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTables {
    pub description: String,
    pub levels: Vec<GoldenEntry>,
}

/// Parsed golden tables with the SHA-256 of their source text.
#[derive(Debug, Clone)]
pub struct Golden {
    pub tables: GoldenTables,
    pub sha256: String,
}

impl Golden {
    pub fn parse(text: &str) -> Result<Self, GoldenError> {
        let tables = serde_json::from_str(text)?;
        Ok(Golden { tables, sha256: hex::encode(Sha256::digest(text.as_bytes())) })
    }

    /// The copy compiled into the crate.
    pub fn embedded() -> Self {
        Self::parse(GOLDEN_JSON).expect("embedded golden tables parse")
    }

    pub fn from_path(path: &Path) -> Result<Self, GoldenError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

/// First coefficient where `actual` differs from `expected`, ordered by `(j, i)`.
pub fn first_difference(expected: &BivarPoly, actual: &BivarPoly) -> Option<Witness> {
    let mut keys: Vec<(u32, u32)> = expected.terms().chain(actual.terms()).map(|(&k, _)| k).collect();
    keys.sort_by_key(|&(i, j)| (j, i));
    keys.dedup();
    keys.into_iter().find_map(|(i, j)| {
        let (e, a) = (expected.coeff(i, j), actual.coeff(i, j));
        (e != a).then(|| Witness { at: format!("C_{{{i},{j}}}"), expected: e.to_string(), actual: a.to_string() })
    })
}

/// Compares a solved equation with a transcribed one.
pub fn compare_with_golden(result: &ModEqResult, entry: &GoldenEntry, sha256: &str) -> CheckReport {
    let name = format!("modular equation of level {}", result.level);
    let expected = match entry.flat() {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, e),
    };
    let terms = expected.num_terms() as i64;
    match first_difference(&expected, &result.poly) {
        None => CheckReport::pass(
            name,
            terms,
            format!("{terms} coefficients match, bidegree ({}, {}), golden sha256 {}", result.d2, result.d1, &sha256[..16]),
        ),
        Some(w) => CheckReport::fail(name, terms, FailureKind::IdentityFails, w),
    }
}

fn bool_report(name: String, ok: bool, precision: i64, pass: String, expected: &str, actual: &str) -> CheckReport {
    if ok {
        CheckReport::pass(name, precision, pass)
    } else {
        let witness = Witness { at: "equation".into(), expected: expected.into(), actual: actual.into() };
        CheckReport::fail(name, precision, FailureKind::IdentityFails, witness)
    }
}

/// Pattern, congruence, symmetry and degree checks on a solved equation.
pub fn structure_reports(result: &ModEqResult) -> Vec<CheckReport> {
    let n = result.level;
    let terms = result.poly.num_terms() as i64;
    let mut out = Vec::new();
    let pattern = predict_coefficient_pattern(n).and_then(|p| Ok((check_pattern(result, &p)?, p)));
    out.push(match pattern {
        Ok((ok, p)) => {
            let witness = p
                .forced_zero
                .iter()
                .find(|&&(i, j)| !result.poly.coeff(i, j).is_zero())
                .map(|&(i, j)| format!("C_{{{i},{j}}} = {}", result.poly.coeff(i, j)))
                .or_else(|| {
                    p.forced_nonzero.iter().find(|&&(i, j)| result.poly.coeff(i, j).is_zero()).map(|&(i, j)| format!("C_{{{i},{j}}} = 0"))
                })
                .unwrap_or_default();
            bool_report(
                format!("coefficient pattern at level {n}"),
                ok,
                (p.forced_zero.len() + p.forced_nonzero.len()) as i64,
                format!("{} forced zeros and {} forced nonzeros hold", p.forced_zero.len(), p.forced_nonzero.len()),
                "pattern holds",
                &witness,
            )
        }
        Err(e) => CheckReport::error(format!("coefficient pattern at level {n}"), e),
    });
    if n >= 5 && crate::arith::is_prime(n) {
        out.push(match check_kronecker(result) {
            Ok(ok) => bool_report(
                format!("Kronecker congruence at level {n}"),
                ok,
                terms,
                format!("F = (X^{n} - Y)(X - Y^{n}) mod {n}"),
                "congruence",
                "a coefficient differs mod p",
            ),
            Err(e) => CheckReport::error(format!("Kronecker congruence at level {n}"), e),
        });
        out.push(match check_symmetry(result) {
            Ok(ok) => bool_report(
                format!("symmetry at level {n}"),
                ok,
                terms,
                "F(X, Y) = F(Y, X)".into(),
                "symmetric",
                "asymmetric",
            ),
            Err(e) => CheckReport::error(format!("symmetry at level {n}"), e),
        });
        let (dx, dy, want) = (result.poly.deg_x() as u64, result.poly.deg_y() as u64, psi(n));
        out.push(bool_report(
            format!("degree psi({n}) at level {n}"),
            dx == want && dy == want,
            1,
            format!("degX = degY = psi({n}) = {want}, all coefficients integral"),
            &format!("({want}, {want})"),
            &format!("({dx}, {dy})"),
        ));
    }
    out
}

/// Solves every level in `golden` and compares, followed by the structural checks.
pub fn check_tables_against(golden: &Golden, fail_fast: bool) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for entry in &golden.tables.levels {
        let n = entry.level();
        match solve_modular_equation(n) {
            Ok(result) => {
                let compared = compare_with_golden(&result, entry, &golden.sha256);
                let stop = fail_fast && !compared.passed();
                out.push(compared);
                if stop {
                    break;
                }
                out.extend(structure_reports(&result));
            }
            Err(e) => out.push(CheckReport::error(format!("modular equation of level {n}"), e)),
        }
        if fail_fast && out.iter().any(|r| !r.passed()) {
            break;
        }
    }
    out
}

/// Every printed table, against the embedded transcription.
pub fn check_all_tables() -> Vec<CheckReport> {
    let mut out = vec![check_w_orders()];
    out.extend(check_tables_against(&Golden::embedded(), false));
    out
}

/// The printed cusp lists, up to equivalence, and the cusp counts.
pub fn check_cusp_lists() -> Vec<CheckReport> {
    let mut lists: Vec<(u64, Vec<Cusp>)> = vec![
        (18, parse_cusps(&["inf", "0", "1/2", "1/3", "2/3", "1/6", "5/6", "1/9"])),
        (36, parse_cusps(&["inf", "0", "1/2", "1/3", "2/3", "1/4", "1/6", "5/6", "1/9", "1/12", "5/12", "1/18"])),
        (54, parse_cusps(&["inf", "0", "1/2", "1/3", "2/3", "1/6", "5/6", "1/9", "5/9", "1/18", "5/18", "1/27"])),
    ];
    for p in [5i64, 7, 11, 13] {
        let ap = if p == 5 { 11 } else { 5 };
        let pairs = [
            (1, 0), (0, 1), (1, 2), (1, 3), (2, 3), (1, 6), (5, 6), (1, 9), (1, 18),
            (1, p), (1, 2 * p), (1, 3 * p), (2, 3 * p), (1, 6 * p), (ap, 6 * p), (1, 9 * p),
        ];
        lists.push((18 * p as u64, pairs.iter().map(|&(a, c)| Cusp::new(a, c).expect("reduced")).collect()));
    }
    lists.into_iter().map(|(n, listed)| cusp_list_report(n, &listed)).collect()
}

fn parse_cusps(names: &[&str]) -> Vec<Cusp> {
    names.iter().map(|s| s.parse().expect("cusp literal")).collect()
}

/// Every listed cusp matches exactly one computed class and the counts agree.
pub fn cusp_list_report(n: u64, listed: &[Cusp]) -> CheckReport {
    let name = format!("cusps of Gamma0({n})");
    let set = cusp_set(n);
    if set.len() != listed.len() {
        let witness = Witness { at: "count".into(), expected: listed.len().to_string(), actual: set.len().to_string() };
        return CheckReport::fail(name, listed.len() as i64, FailureKind::IdentityFails, witness);
    }
    for &x in listed {
        let hits = set.iter().filter(|&&r| are_equivalent(n, x, r)).count();
        if hits != 1 {
            let witness = Witness { at: format!("cusp {x}"), expected: "1 class".into(), actual: format!("{hits} classes") };
            return CheckReport::fail(name, listed.len() as i64, FailureKind::IdentityFails, witness);
        }
    }
    CheckReport::pass(name, listed.len() as i64, format!("{} classes, one per listed cusp", set.len()))
}

/// On Gamma0(18n): `w` and `w(nτ)` have equal pole and zero degrees, and the
/// sign of each order of `w` agrees with the rule read off from the denominator.
pub fn check_divisor_consistency(n: u64) -> CheckReport {
    let shifted = if n == 1 { "w(t)".to_string() } else { format!("w({n}t)") };
    let name = format!("divisors of w and {shifted} on Gamma0({})", 18 * n);
    let pair = if n == 1 { Ok((named_w(), named_w())) } else { level_pair(n) };
    let (f1, f2) = match pair {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, e),
    };
    let run = || -> Result<Option<Witness>, crate::eta::EtaError> {
        for f in [&f1, &f2] {
            let (poles, zeros) = (f.total_pole_degree()?, f.total_zero_degree()?);
            if poles != zeros {
                return Ok(Some(Witness { at: f.to_string(), expected: format!("{poles} zeros"), actual: format!("{zeros} zeros") }));
            }
        }
        for o in f1.divisor()? {
            let class = match o.order.numer().signum() {
                -1 => PoleZeroClass::Pole,
                1 => PoleZeroClass::Zero,
                _ => PoleZeroClass::Regular,
            };
            if class != pole_zero_class(o.cusp) {
                return Ok(Some(Witness {
                    at: format!("cusp {}", o.cusp),
                    expected: format!("{:?}", pole_zero_class(o.cusp)),
                    actual: format!("order {}", o.order),
                }));
            }
        }
        Ok(None)
    };
    let cusps = cusp_set(18 * n).len() as i64;
    match run() {
        Ok(None) => CheckReport::pass(name, cusps, format!("degree balance and pole/zero classes hold at {cusps} cusps")),
        Ok(Some(w)) => CheckReport::fail(name, cusps, FailureKind::IdentityFails, w),
        Err(e) => CheckReport::error(name, e),
    }
}

/// A claim with no finite check, and what is checked in its place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Acknowledgement {
    pub claim: String,
    pub reason: String,
    pub proxy: String,
}

/// Claims that are not reproduced numerically.
pub fn acknowledgements() -> Vec<Acknowledgement> {
    let ack = |claim: &str, reason: &str, proxy: &str| Acknowledgement {
        claim: claim.into(),
        reason: reason.into(),
        proxy: proxy.into(),
    };
    vec![
        ack(
            "w(t) and w(nt) generate the field of modular functions on Gamma0(18n)",
            "a statement about a function field; no finite computation decides it",
            "divisor computation: pole and zero sets of w and w(nt) on Gamma0(18n) and the predicted bidegree",
        ),
        ack(
            "the level-n equation is irreducible over C(X) and over C(Y)",
            "no finite certificate is produced",
            "the kernel at the predicted bidegree has dimension exactly 1",
        ),
        ack(
            "values of w(t/3) at imaginary quadratic points generate the ray class field modulo 6",
            "class field theory; no desk-scale numeric reproduction is specified",
            "none",
        ),
    ]
}

/// Which checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Subset {
    #[default]
    All,
    Tables,
    Identities,
    Cusps,
}

impl std::str::FromStr for Subset {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Subset::All),
            "tables" => Ok(Subset::Tables),
            "identities" => Ok(Subset::Identities),
            "cusps" => Ok(Subset::Cusps),
            other => Err(format!("unknown subset {other:?}; expected all, tables, identities or cusps")),
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subset::All => "all",
            Subset::Tables => "tables",
            Subset::Identities => "identities",
            Subset::Cusps => "cusps",
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub subset: Subset,
    pub checks: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
    pub golden_sha256: String,
    pub not_reproduced: Vec<Acknowledgement>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

type Check = fn() -> Vec<CheckReport>;

fn one(r: CheckReport) -> Vec<CheckReport> {
    vec![r]
}

fn identity_checks() -> Vec<Check> {
    vec![
        || one(check_w_expansion()),
        || one(check_x_product()),
        check_x_w_identities,
        || one(check_x_level_three()),
        || one(check_j_prefix()),
        || one(check_j_identity()),
    ]
}

fn cusp_checks() -> Vec<Check> {
    vec![check_cusp_lists, || [1, 2, 3, 5, 7, 11, 13].into_iter().map(check_divisor_consistency).collect()]
}

/// Runs a subset. Checks run in parallel unless `fail_fast` is set; reports
/// keep the declared order either way.
pub fn run_suite(subset: Subset, fail_fast: bool, golden: &Golden) -> SuiteReport {
    let mut groups: Vec<Check> = Vec::new();
    if matches!(subset, Subset::All | Subset::Cusps) {
        groups.extend(cusp_checks());
    }
    if matches!(subset, Subset::All | Subset::Identities) {
        groups.extend(identity_checks());
    }
    let tables = matches!(subset, Subset::All | Subset::Tables);
    if tables {
        groups.push(|| one(check_w_orders()));
    }
    let mut checks: Vec<CheckReport> = Vec::new();
    if fail_fast {
        for g in groups {
            checks.extend(g());
            if checks.iter().any(|r| !r.passed()) {
                return finish(subset, checks, golden);
            }
        }
    } else {
        let results: Vec<Vec<CheckReport>> = groups.par_iter().map(|g| g()).collect();
        checks.extend(results.into_iter().flatten());
    }
    if tables {
        checks.extend(check_tables_against(golden, fail_fast));
    }
    finish(subset, checks, golden)
}

fn finish(subset: Subset, checks: Vec<CheckReport>, golden: &Golden) -> SuiteReport {
    let passed = checks.iter().filter(|r| r.passed()).count();
    SuiteReport {
        subset,
        failed: checks.len() - passed,
        passed,
        checks,
        golden_sha256: golden.sha256.clone(),
        not_reproduced: acknowledgements(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn w_prefix_and_short_prefix() {
        assert!(check_w_expansion().passed());
        let short = check_w_expansion_with(&named_w(), 3);
        assert!(short.passed());
        assert_eq!(short.precision, 2);
    }

    #[test]
    fn w_sabotaged_fails_at_q1() {
        let bad = EtaQuotient::new(18, [(1, 2), (2, -2), (9, -1), (18, 2)]).unwrap();
        let r = check_w_expansion_with(&bad, 8);
        assert!(!r.passed());
        assert_eq!(r.witness.unwrap().at, "q^1");
    }

    #[test]
    fn w_orders_and_substituted_cusp() {
        assert!(check_w_orders().passed());
        let mut cusps = cusp_set(18);
        cusps[2] = "1/4".parse().unwrap();
        assert!(check_w_orders_with(&cusps, &W_ORDERS_18).passed());
        let mut wrong = W_ORDERS_18;
        wrong[2] = -2;
        let r = check_w_orders_with(&cusp_set(18), &wrong);
        assert_eq!(r.witness.unwrap().at, "cusp 1/2");
    }

    #[test]
    fn x_w_identities_and_negative_control() {
        assert!(check_x_w_identities().iter().all(|r| r.passed()));
        let r = check_x_quartic_with(50, &[1, -3, 2]);
        assert_eq!(r.failure, Some(FailureKind::IdentityFails));
        assert!(r.witness.is_some());
    }

    #[test]
    fn x_level_three_and_sign_flip() {
        assert!(check_x_level_three().passed());
        assert!(check_x_level_three_with(10, [1, -1, 3, -3]).passed());
        assert!(!check_x_level_three_with(50, [1, -1, -3, -3]).passed());
    }

    #[test]
    fn j_identity_and_prefix() {
        assert!(check_j_prefix().passed());
        assert!(check_j_identity().passed());
        let mut p = J_P;
        p[1] = 224;
        assert_eq!(check_j_identity_with(40, &p).failure, Some(FailureKind::IdentityFails));
    }

    #[test]
    fn short_series_report_precision() {
        let s = QSeries::zero(1, 10);
        assert_eq!(vanishes_to("t", &s, 20).failure, Some(FailureKind::PrecisionInsufficient));
        assert!(vanishes_to("t", &s, 10).passed());
    }

    #[test]
    fn golden_entries_expand() {
        let g = Golden::embedded();
        assert_eq!(g.tables.levels.len(), 6);
        let eleven = g.tables.levels.iter().find(|e| e.level() == 11).unwrap();
        let GoldenEntry::KroneckerFrame { inner, .. } = eleven else { panic!("factored") };
        let inner = BivarPoly::from_term_list(inner).unwrap();
        assert_eq!(inner.coeff(10, 10), BigInt::from(5368));
        assert!(eleven.flat().unwrap().is_symmetric());
    }

    #[test]
    fn cusp_lists_and_divisors() {
        assert!(check_cusp_lists().iter().all(|r| r.passed()));
        for n in [1, 2, 3, 5] {
            assert!(check_divisor_consistency(n).passed(), "{n}");
        }
    }
}
