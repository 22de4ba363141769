//! Laurent polynomials in a formal variable `q` with exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::QError;

/// Finite sum `Σ c_e q^e` with `c_e ∈ ℚ`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c · q^e`
    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// `(−q)^e`
    pub fn neg_q_pow(e: i64) -> Self {
        let s = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(BigRational::from_integer(BigInt::from(s)), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Substitute `q ↦ q^k`. `k = 0` collapses everything to the value at `q = 1`.
    pub fn dilate(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (e * k, v.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, QError> {
        if q0.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return Err(QError::ZeroBase);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rational_pow(q0, *e);
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, q0: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * q0.powi(*e as i32))
            .sum()
    }

    pub fn eval_complex(&self, q0: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| q0.powi(*e as i32) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }

    /// JSON-friendly view: exponent → `"num/den"`.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(e, c)| (e.to_string(), format_rational(c)))
            .collect()
    }

    pub fn from_string_map(map: &BTreeMap<String, String>) -> Result<Self, QError> {
        let mut out = Self::zero();
        for (k, v) in map {
            let e: i64 = k
                .trim()
                .parse()
                .map_err(|_| QError::Parse(format!("bad exponent `{k}`")))?;
            out.add_term(e, parse_rational(v)?);
        }
        Ok(out)
    }
}

/// `x^e` for integer `e`; `x` must be nonzero when `e < 0`.
pub fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"a/b"`, integers, and plain decimals such as `"0.6"` or `"-1.25e-3"`.
pub fn parse_rational(s: &str) -> Result<BigRational, QError> {
    let s = s.trim();
    let bad = || QError::Parse(format!("not a rational number: `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: BigInt = format!("{int_part}{frac_part}0").parse::<BigInt>().map_err(|_| bad())? / 10;
    let scale = exp - frac_part.len() as i64;
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut r = BigRational::from_integer(all) * rational_pow(&ten, scale);
    if neg {
        r = -r;
    }
    Ok(r)
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match *e {
                0 => {}
                1 => write!(f, "{}q", if show_coeff { "*" } else { "" })?,
                e => write!(f, "{}q^{e}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_string_map().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(deserializer)?;
        LaurentScalar::from_string_map(&map).map_err(D::Error::custom)
    }
}

impl Zero for LaurentScalar {
    fn zero() -> Self {
        LaurentScalar::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentScalar::is_zero(self)
    }
}

impl One for LaurentScalar {
    fn one() -> Self {
        LaurentScalar::one()
    }
}

impl Add<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -self.clone()
    }
}

impl Mul<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: LaurentScalar) -> LaurentScalar {
        &self * &rhs
    }
}

impl MulAssign<&LaurentScalar> for LaurentScalar {
    fn mul_assign(&mut self, rhs: &LaurentScalar) {
        *self = &*self * rhs;
    }
}
