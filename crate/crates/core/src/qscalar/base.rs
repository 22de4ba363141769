use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::rational_to_f64;
use super::laurent::parse_rational;
use crate::error::{QError, QResult};

/// A rational deformation parameter q₀ in the open interval (0, 1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QBase {
    exact: BigRational,
}

impl QBase {
    pub fn new(exact: BigRational) -> QResult<Self> {
        if exact <= BigRational::zero() || exact >= BigRational::one() {
            return Err(QError::BaseOutOfRange(rational_to_f64(&exact)));
        }
        Ok(Self { exact })
    }

    pub fn from_ratio(num: i64, den: i64) -> QResult<Self> {
        if den == 0 {
            return Err(QError::Parse("zero denominator".into()));
        }
        Self::new(BigRational::new(num.into(), den.into()))
    }

    pub fn exact(&self) -> &BigRational {
        &self.exact
    }

    pub fn value(&self) -> f64 {
        rational_to_f64(&self.exact)
    }

    /// q₀², the base of the polynomials attached to the representations.
    pub fn squared(&self) -> BigRational {
        &self.exact * &self.exact
    }
}

impl FromStr for QBase {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(parse_rational(s)?)
    }
}

impl fmt::Display for QBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exact)
    }
}

impl fmt::Debug for QBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QBase({})", self.exact)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_range() {
        let q: QBase = "0.6".parse().unwrap();
        assert_eq!(q, QBase::from_ratio(3, 5).unwrap());
        assert_eq!(q.value(), 0.6);
        assert!(matches!("1".parse::<QBase>(), Err(QError::BaseOutOfRange(_))));
        assert!(matches!("-1/2".parse::<QBase>(), Err(QError::BaseOutOfRange(_))));
    }
}
