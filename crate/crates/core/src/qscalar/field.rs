//! Scalar fields the q-series routines are generic over.
//!
//! `BigRational` is the exact path (q₀ rational, all parameters integer powers of
//! q₀); `f64` and `Complex64` are the floating paths.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::laurent::rational_pow;

pub trait QField:
    Clone
    + Zero
    + One
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;

    /// Integer power; negative exponents invert.
    fn powi(&self, e: i64) -> Self;

    fn to_complex(&self) -> Complex64;

    /// Magnitude as a float, used for truncation thresholds.
    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }
}

impl QField for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn powi(&self, e: i64) -> Self {
        rational_pow(self, e)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }
}

impl QField for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn powi(&self, e: i64) -> Self {
        f64::powi(*self, e as i32)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

impl QField for Complex64 {
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn powi(&self, e: i64) -> Self {
        Complex64::powi(self, e as i32)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// Float value of a big rational, robust to numerators and denominators
/// that individually overflow `f64`.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() && (v != 0.0 || r.is_zero()) {
            return v;
        }
    }
    let n = r.numer();
    let d = r.denom();
    let shift = n.bits() as i64 - d.bits() as i64;
    // bring the quotient near 1, then rescale by 2^shift
    let scaled = if shift > 0 {
        BigRational::new(n.clone(), d << (shift as usize))
    } else {
        BigRational::new(n << ((-shift) as usize), d.clone())
    };
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
}

/// Principal square root of a real radicand, as a complex number.
pub fn principal_sqrt<F: QField>(radicand: &F) -> Complex64 {
    radicand.to_complex().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_powers() {
        let h = BigRational::new(1.into(), 2.into());
        assert_eq!(h.powi(-3), BigRational::from_i64(8));
        assert_eq!(h.powi(0), BigRational::one());
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = BigRational::from_integer(BigInt::from(10).pow(400));
        let r = BigRational::new(BigInt::from(10).pow(401) * 3, BigInt::from(10).pow(400) * 7);
        assert!((rational_to_f64(&r) - 30.0 / 7.0).abs() < 1e-14);
        assert!(rational_to_f64(&big).is_infinite());
        let tiny = big.recip();
        assert_eq!(rational_to_f64(&tiny), 0.0);
    }

    #[test]
    fn negative_radicand_is_imaginary() {
        let s = principal_sqrt(&-4.0f64);
        assert!((s - Complex64::new(0.0, 2.0)).norm() < 1e-15);
    }
}
