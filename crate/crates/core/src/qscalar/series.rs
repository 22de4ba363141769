use num_complex::Complex64;
use num_traits::{One, Zero};

use super::field::QField;
use super::laurent::LaurentScalar;
use crate::error::{QError, QResult};

/// Deviation threshold |a q^k| below which an infinite product stops.
pub const INF_PRODUCT_CUTOFF: f64 = 1e-18;

const INF_PRODUCT_MAX_FACTORS: usize = 1 << 20;

/// Finite q-Pochhammer symbol (a;q)_n over any scalar field.
pub fn q_pochhammer<F: QField>(a: &F, q: &F, n: usize) -> F {
    let mut acc = F::one();
    let mut aq = a.clone();
    for _ in 0..n {
        acc = acc * (F::one() - aq.clone());
        aq = aq * q.clone();
    }
    acc
}

/// (q^s; q^step)_n as an exact Laurent polynomial.
pub fn q_pochhammer_exact(s: i64, step: i64, n: usize) -> LaurentScalar {
    (0..n as i64).fold(LaurentScalar::one(), |acc, k| {
        acc * (LaurentScalar::one() - LaurentScalar::q_pow(s + k * step))
    })
}

/// (a;q)_∞ for |q| < 1, truncated once |a q^k| < [`INF_PRODUCT_CUTOFF`].
pub fn q_pochhammer_inf(a: Complex64, q: f64) -> QResult<Complex64> {
    if q.abs() >= 1.0 {
        return Err(QError::Divergent(q.abs()));
    }
    let mut acc = Complex64::one();
    let mut aq = a;
    for _ in 0..INF_PRODUCT_MAX_FACTORS {
        if aq.norm() < INF_PRODUCT_CUTOFF {
            break;
        }
        acc *= Complex64::one() - aq;
        aq *= q;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PochBase {
    /// a = q^s
    Power(i64),
    Value(Complex64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLength {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QPochSpec {
    pub base: PochBase,
    pub length: PochLength,
}

/// The value substituted for q: kept formal, or a real number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QValue {
    Formal,
    Numeric(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(LaurentScalar),
    Numeric(Complex64),
}

impl Scalar {
    pub fn to_complex(&self, q0: f64) -> Complex64 {
        match self {
            Scalar::Exact(l) => l.eval_complex(Complex64::new(q0, 0.0)),
            Scalar::Numeric(z) => *z,
        }
    }
}

impl QPochSpec {
    pub fn new(base: PochBase, length: PochLength) -> Self {
        Self { base, length }
    }

    pub fn evaluate(&self, q: QValue) -> QResult<Scalar> {
        match (self.base, self.length, q) {
            (PochBase::Power(s), PochLength::Finite(n), QValue::Formal) => {
                Ok(Scalar::Exact(q_pochhammer_exact(s, 1, n)))
            }
            (_, PochLength::Infinite, QValue::Formal) => Err(QError::InfiniteExact),
            (PochBase::Value(_), _, QValue::Formal) => Err(QError::OutOfRange(
                "numeric base requires a numeric q".into(),
            )),
            (base, length, QValue::Numeric(q0)) => {
                let a = match base {
                    PochBase::Power(s) => Complex64::new(q0.powi(s as i32), 0.0),
                    PochBase::Value(a) => a,
                };
                let v = match length {
                    PochLength::Finite(n) => q_pochhammer(&a, &Complex64::new(q0, 0.0), n),
                    PochLength::Infinite => q_pochhammer_inf(a, q0)?,
                };
                Ok(Scalar::Numeric(v))
            }
        }
    }
}

/// Gaussian binomial [n k]_q as an exact Laurent polynomial (zero outside 0..=n).
pub fn q_binomial(n: u32, k: i64) -> LaurentScalar {
    if k < 0 || k > n as i64 {
        return LaurentScalar::zero();
    }
    pascal_row(n, &LaurentScalar::one(), |k| LaurentScalar::q_pow(k as i64))
        .swap_remove(k as usize)
}

/// [n k]_q evaluated in a field; no division, so q = 1 is allowed.
pub fn q_binomial_value<F: QField>(n: u32, k: i64, q: &F) -> F {
    if k < 0 || k > n as i64 {
        return F::zero();
    }
    pascal_row(n, &F::one(), |k| q.powi(k as i64)).swap_remove(k as usize)
}

fn pascal_row<T, P>(n: u32, one: &T, qk: P) -> Vec<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T>,
    P: Fn(usize) -> T,
{
    let mut row = vec![one.clone()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let left = if k >= 1 { row[k - 1].clone() } else { T::zero() };
            let right = if k < m { qk(k) * row[k].clone() } else { T::zero() };
            next.push(left + right);
        }
        row = next;
    }
    row
}

fn check_marginal(n: u32, m: [u32; 3]) -> QResult<()> {
    if m.iter().sum::<u32>() != n {
        return Err(QError::MarginalMismatch(format!(
            "{}+{}+{} != {n}",
            m[0], m[1], m[2]
        )));
    }
    Ok(())
}

/// q-multinomial (q;q)_N / ∏(q;q)_{m_i}, exact.
pub fn q_multinomial(n: u32, m: [u32; 3]) -> QResult<LaurentScalar> {
    check_marginal(n, m)?;
    Ok(q_binomial(n, m[0] as i64) * q_binomial(n - m[0], m[1] as i64))
}

pub fn q_multinomial_value<F: QField>(n: u32, m: [u32; 3], q: &F) -> QResult<F> {
    check_marginal(n, m)?;
    Ok(q_binomial_value(n, m[0] as i64, q) * q_binomial_value(n - m[0], m[1] as i64, q))
}

/// Upper parameter of a ₂φ₁ that may be zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperParam {
    Power(i64),
    Zero,
}

/// Terminating ₂φ₁(q^α, b; q^γ; q; z) with α = −n ≤ 0.
///
/// The sum also stops early when b = q^β with β ≤ 0.
pub fn phi21_terminating<F: QField>(
    alpha_exp: i64,
    beta: UpperParam,
    gamma_exp: i64,
    q: &F,
    z: &F,
) -> QResult<F> {
    if alpha_exp > 0 {
        return Err(QError::NonTerminating(alpha_exp));
    }
    let mut last = (-alpha_exp) as usize;
    if let UpperParam::Power(b) = beta {
        if b <= 0 {
            last = last.min((-b) as usize);
        }
    }
    if gamma_exp <= 0 && ((-gamma_exp) as usize) < last {
        return Err(QError::VanishingDenominator((-gamma_exp) as usize + 1));
    }
    let mut sum = F::one();
    let mut term = F::one();
    for j in 0..last as i64 {
        let num_a = F::one() - q.powi(alpha_exp + j);
        let num_b = match beta {
            UpperParam::Power(b) => F::one() - q.powi(b + j),
            UpperParam::Zero => F::one(),
        };
        let den = (F::one() - q.powi(gamma_exp + j)) * (F::one() - q.powi(j + 1));
        term = term * num_a * num_b * z.clone() / den;
        sum = sum + term.clone();
    }
    Ok(sum)
}
