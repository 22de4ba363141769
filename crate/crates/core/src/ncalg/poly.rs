use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::reduce::Reducer;
use crate::error::QError;
use crate::qscalar::LaurentScalar;

/// Generator x_{row,col}, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    row: u8,
    col: u8,
}

impl Gen {
    pub fn new(row: usize, col: usize) -> Self {
        assert!((1..=3).contains(&row) && (1..=3).contains(&col), "generator index out of range");
        Self { row: row as u8, col: col as u8 }
    }

    /// Row-major position 0..9.
    pub fn from_index(idx: u8) -> Self {
        Self { row: idx / 3 + 1, col: idx % 3 + 1 }
    }

    pub fn index(self) -> u8 {
        3 * (self.row - 1) + (self.col - 1)
    }

    pub fn row(self) -> usize {
        self.row as usize
    }

    pub fn col(self) -> usize {
        self.col as usize
    }

    pub fn all() -> impl Iterator<Item = Gen> {
        (0..9).map(Gen::from_index)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}{}", self.row, self.col)
    }
}

impl FromStr for Gen {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let b = s.trim().as_bytes();
        match b {
            [b'x', r @ b'1'..=b'3', c @ b'1'..=b'3'] => {
                Ok(Gen::new((r - b'0') as usize, (c - b'0') as usize))
            }
            _ => Err(QError::UnknownGenerator(s.to_string())),
        }
    }
}

/// Parse a whitespace-separated word `x11 x12 ...`.
pub fn parse_word(s: &str) -> Result<Vec<Gen>, QError> {
    s.split_whitespace().map(str::parse).collect()
}

/// Ordered monomial x₁₁^{a₁₁} x₁₂^{a₁₂} … x₃₃^{a₃₃}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [u32; 9]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(g: Gen) -> Self {
        let mut e = [0; 9];
        e[g.index() as usize] = 1;
        Self(e)
    }

    pub fn exponent(&self, g: Gen) -> u32 {
        self.0[g.index() as usize]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The letters in row-major order.
    pub fn word(&self) -> Vec<u8> {
        (0..9u8)
            .flat_map(|i| std::iter::repeat_n(i, self.0[i as usize] as usize))
            .collect()
    }

    /// Exponent multiset of a word, ignoring order.
    pub fn from_letters(word: &[u8]) -> Self {
        let mut e = [0; 9];
        for &g in word {
            e[g as usize] += 1;
        }
        Self(e)
    }

    /// Key used in JSON output: 9 digits, or dot-separated if any exponent exceeds 9.
    pub fn key(&self) -> String {
        if self.0.iter().all(|&e| e < 10) {
            self.0.iter().map(|e| e.to_string()).collect()
        } else {
            self.0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(".")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for g in Gen::all() {
            let e = self.exponent(g);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{g}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Element of M_q(3) in normal-ordered form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Monomial, LaurentScalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), LaurentScalar::one())
    }

    pub fn scalar(c: LaurentScalar) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn generator(g: Gen) -> Self {
        Self::monomial(Monomial::generator(g), LaurentScalar::one())
    }

    pub fn monomial(m: Monomial, c: LaurentScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> LaurentScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Degrees of all monomials present.
    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(Monomial::degree)
    }

    pub fn add_term(&mut self, m: Monomial, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &LaurentScalar) {
        for (m, d) in &other.terms {
            self.add_term(*m, c * d);
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Product reduced to normal order.
    pub fn mul_with(&self, rhs: &NCPoly, reducer: &mut Reducer) -> NCPoly {
        let mut out = NCPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut word = m1.word();
                word.extend(m2.word());
                out.add_scaled(&reducer.reduce(&word), &(c1 * c2));
            }
        }
        out
    }

    /// Coefficients evaluated at a real q₀.
    pub fn eval_coeffs(&self, q0: f64) -> Vec<(Monomial, f64)> {
        self.terms.iter().map(|(m, c)| (*m, c.eval_f64(q0))).collect()
    }
}

/// Product of two normal-ordered elements, reduced to normal order.
pub fn multiply(lhs: &NCPoly, rhs: &NCPoly) -> NCPoly {
    lhs.mul_with(rhs, &mut Reducer::default())
}

/// Normal form of the product of the given generators, in order.
pub fn normal_order_word(word: &[Gen]) -> NCPoly {
    let letters: Vec<u8> = word.iter().map(|g| g.index()).collect();
    Reducer::default().reduce(&letters)
}

impl std::ops::Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentScalar::one());
        out
    }
}

impl std::ops::Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-LaurentScalar::one());
        out
    }
}

impl std::ops::Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        multiply(self, rhs)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else if m.degree() == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NCPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let keyed: BTreeMap<String, &LaurentScalar> =
            self.terms.iter().map(|(m, c)| (m.key(), c)).collect();
        let mut map = s.serialize_map(Some(keyed.len()))?;
        for (k, v) in keyed {
            map.serialize_entry(&k, v)?;
        }
        map.end()
    }
}

/// Element of M_q(3) ⊗ M_q(3), normal-ordered per leg.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorNCPoly {
    terms: BTreeMap<(Monomial, Monomial), LaurentScalar>,
}

impl TensorNCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(Monomial::one(), Monomial::one(), LaurentScalar::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add_scaled(&mut self, other: &TensorNCPoly, c: &LaurentScalar) {
        for ((a, b), d) in &other.terms {
            self.add_term(*a, *b, c * d);
        }
    }

    /// a ⊗ b for normal-ordered a, b.
    pub fn tensor(a: &NCPoly, b: &NCPoly) -> Self {
        let mut t = Self::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                t.add_term(*ma, *mb, ca * cb);
            }
        }
        t
    }

    /// Legwise product.
    pub fn mul_with(&self, rhs: &TensorNCPoly, reducer: &mut Reducer) -> TensorNCPoly {
        let mut out = TensorNCPoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                let left = reducer.reduce(&[a1.word(), a2.word()].concat());
                let right = reducer.reduce(&[b1.word(), b2.word()].concat());
                let mut prod = TensorNCPoly::tensor(&left, &right);
                prod = prod.scaled(&(c1 * c2));
                out.add_scaled(&prod, &LaurentScalar::one());
            }
        }
        out
    }

    fn scaled(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Apply a linear map to each leg and recombine.
    pub fn map_legs<F, G>(&self, f: F, g: G) -> TensorNCPoly
    where
        F: Fn(&Monomial) -> NCPoly,
        G: Fn(&Monomial) -> NCPoly,
    {
        let mut out = TensorNCPoly::zero();
        for ((a, b), c) in &self.terms {
            out.add_scaled(&TensorNCPoly::tensor(&f(a), &g(b)), c);
        }
        out
    }
}

impl fmt::Debug for TensorNCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{a}⊗{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_generators() {
        assert_eq!("x23".parse::<Gen>().unwrap(), Gen::new(2, 3));
        assert!("x41".parse::<Gen>().is_err());
        assert!("y11".parse::<Gen>().is_err());
        let w = parse_word("x11  x32\tx13").unwrap();
        assert_eq!(w, vec![Gen::new(1, 1), Gen::new(3, 2), Gen::new(1, 3)]);
    }

    #[test]
    fn monomial_keys() {
        let m = Monomial([1, 0, 2, 0, 0, 0, 0, 0, 1]);
        assert_eq!(m.key(), "102000001");
        assert_eq!(m.to_string(), "x11*x13^2*x33");
        assert_eq!(m.word(), vec![0, 2, 2, 8]);
        assert_eq!(Monomial::from_letters(&[8, 2, 0, 2]), m);
    }

    #[test]
    fn json_shape() {
        let p = NCPoly::monomial(Monomial::generator(Gen::new(1, 2)), LaurentScalar::q_pow(-1));
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"010000000":{"-1":"1/1"}}"#);
    }
}
