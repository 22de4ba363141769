//! Small exact-arithmetic helpers shared by the closed forms.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{QError, QResult};
use crate::qscalar::{q_pochhammer, rational_pow, rational_to_f64};

pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// (−1)^e
pub(crate) fn sign(e: i64) -> BigRational {
    if e.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

pub(crate) fn pow(x: &BigRational, e: i64) -> BigRational {
    rational_pow(x, e)
}

pub(crate) fn poch(a: &BigRational, b: &BigRational, n: u32) -> BigRational {
    q_pochhammer(a, b, n as usize)
}

pub(crate) fn div(num: BigRational, den: BigRational, what: &str) -> QResult<BigRational> {
    if den.is_zero() {
        return Err(QError::Singular(what.to_string()));
    }
    Ok(num / den)
}

/// Principal square root of an exact rational.
pub(crate) fn csqrt(r: &BigRational) -> Complex64 {
    let v = rational_to_f64(r);
    if v >= 0.0 {
        Complex64::new(v.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-v).sqrt())
    }
}

pub(crate) fn cplx(r: &BigRational) -> Complex64 {
    Complex64::new(rational_to_f64(r), 0.0)
}

/// Gaussian multinomial (b;b)_N / ∏(b;b)_{k_i} for parts summing to N.
pub(crate) fn multinomial(parts: &[u32], b: &BigRational) -> BigRational {
    let total: u32 = parts.iter().sum();
    parts
        .iter()
        .fold(poch(b, b, total), |acc, &k| acc / poch(b, b, k))
}
