//! Tratnik-type bivariate quantum q-Krawtchouk polynomials and the π₂₁ shift scalars.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::exact::{cplx, csqrt, div, multinomial, poch, pow, sign};
use super::uni::{kraw1, uni_shift_scalar};
use crate::error::{QError, QResult};
use crate::qscalar::QBase;

fn check_simplex(what: &str, a: u32, b: u32, big_n: u32) -> QResult<()> {
    if a + b > big_n {
        return Err(QError::OutOfRange(format!("{what} = ({a},{b}) outside the simplex of size {big_n}")));
    }
    Ok(())
}

/// K_{n,m}(x, y; q^{u_exp}, q^{v_exp}, N, q²) = k_n(x; q^{−2v_exp}, x+y, q²) · k_m(x+y−n; q^{−2u_exp}, N−n, q²).
///
/// Zero when n > x + y.
#[allow(clippy::too_many_arguments)]
pub fn kraw2_tratnik(
    n: u32,
    m: u32,
    x: u32,
    y: u32,
    u_exp: i64,
    v_exp: i64,
    big_n: u32,
    q: &BigRational,
) -> QResult<BigRational> {
    check_simplex("degree", n, m, big_n)?;
    check_simplex("point", x, y, big_n)?;
    if n > x + y {
        return Ok(BigRational::zero());
    }
    let b = q * q;
    let first = kraw1(n, x, &pow(q, -2 * v_exp), x + y, &b)?;
    let second = kraw1(m, x + y - n, &pow(q, -2 * u_exp), big_n - n, &b)?;
    Ok(first * second)
}

/// W_{n₁,n₂}(u, v)², exact.
pub fn kraw2_weight_squared(n1: u32, n2: u32, u: i64, v: i64, big_n: u32, q: &BigRational) -> QResult<BigRational> {
    check_simplex("point", n1, n2, big_n)?;
    let b = q * q;
    let (a, c, nn) = (n1 as i64, n2 as i64, big_n as i64);
    Ok(sign(nn - a)
        * pow(q, 2 * v * (a + c))
        * pow(q, a * (a - 1))
        * multinomial(&[n1, n2, big_n - n1 - n2], &b)
        * poch(&pow(q, -2 * v), &b, n2)
        * poch(&pow(q, -2 * u), &b, big_n - n1 - n2)
        * pow(q, 2 * nn * (u + 1))
        * pow(q, -nn * (nn + 1)))
}

pub fn kraw2_weight(n1: u32, n2: u32, u: i64, v: i64, big_n: u32, q: &BigRational) -> QResult<Complex64> {
    Ok(csqrt(&kraw2_weight_squared(n1, n2, u, v, big_n, q)?))
}

/// N_{m₁,m₂}(u, v).
pub fn kraw2_norm(m1: u32, m2: u32, u: i64, v: i64, big_n: u32, q: &BigRational) -> QResult<Complex64> {
    check_simplex("degree", m1, m2, big_n)?;
    let b = q * q;
    let (a, c, nn) = (m1 as i64, m2 as i64, big_n as i64);
    let pre = pow(q, -a * (a - 1) - c * (c - 1))
        * pow(q, -a * (u + 1))
        * poch(&b, &b, big_n - m1 - m2)
        / poch(&b, &b, big_n);
    let rad = div(
        sign(a + c)
            * multinomial(&[m1, m2, big_n - m1 - m2], &b)
            * pow(q, 2 * nn * (a + c) + 4 * a + 2 * c - 2 * a * c - a * (a - 1) - c * (c - 1)),
        poch(&pow(q, -2 * u), &b, m2) * poch(&pow(q, -2 * v), &b, m1),
        "(q^-2u;q²)_m₂ (q^-2v;q²)_m₁",
    )?;
    Ok(cplx(&pre) * csqrt(&rad))
}

/// (−1)^{m₁−n₂} W_n(u,v) N_m(u,v) K_m(n; q^{u+1}, q^{v+1}, N, q²) at display parameters (u, v).
pub fn tratnik_scalar(m: [u32; 2], n: [u32; 2], big_n: u32, u: i64, v: i64, q: &BigRational) -> QResult<Complex64> {
    let k = kraw2_tratnik(m[0], m[1], n[0], n[1], u + 1, v + 1, big_n, q)?;
    if k.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let w = kraw2_weight(n[0], n[1], u, v, big_n, q)?;
    let norm = kraw2_norm(m[0], m[1], u, v, big_n, q)?;
    Ok(cplx(&(sign(m[0] as i64 - n[1] as i64) * k)) * w * norm)
}

/// Target state of π₂₁(t_{m,n}) |u, v⟩.
pub fn bi_shift_target(m: [u32; 2], n: [u32; 2], big_n: u32, u: i64, v: i64) -> (i64, i64) {
    (
        u - m[1] as i64 + big_n as i64 - n[0] as i64 - n[1] as i64,
        v + n[1] as i64 - m[0] as i64,
    )
}

/// Scalar t^{(21)}_{m,n}(u, v) of π₂₁(t_{m,n}) |u, v⟩, states u, v ≥ 0.
///
/// Evaluated at u ← u + N − n₁ − n₂, v ← v + n₂ in the closed form; zero when the
/// target state leaves the lattice or m₁ > n₁ + n₂.
pub fn bi_shift_scalar(m: [u32; 2], n: [u32; 2], big_n: u32, u: i64, v: i64, q: &QBase) -> QResult<Complex64> {
    check_simplex("m", m[0], m[1], big_n)?;
    check_simplex("n", n[0], n[1], big_n)?;
    let (tu, tv) = bi_shift_target(m, n, big_n, u, v);
    if m[0] > n[0] + n[1] || tu < 0 || tv < 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let uu = u + big_n as i64 - n[0] as i64 - n[1] as i64;
    let vv = v + n[1] as i64;
    tratnik_scalar(m, n, big_n, uu, vv, q.exact())
}

/// The same scalar as a product of two univariate shift scalars.
pub fn bi_shift_factorized(m: [u32; 2], n: [u32; 2], big_n: u32, u: i64, v: i64, q: &QBase) -> QResult<Complex64> {
    if m[0] > n[0] + n[1] {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let t2 = uni_shift_scalar(m[1], n[0] + n[1] - m[0], big_n - m[0], u, q)?;
    let t1 = uni_shift_scalar(m[0], n[0], n[0] + n[1], v, q)?;
    Ok(t2 * t1)
}

/// All (a, b) with a + b ≤ N, lexicographic.
pub fn simplex(big_n: u32) -> Vec<[u32; 2]> {
    (0..=big_n).flat_map(|a| (0..=big_n - a).map(move |b| [a, b])).collect()
}

/// Σ_n W_n² K_m(n) K_{m'}(n) N_m N_{m'}, which should equal δ_{m,m'}.
pub fn kraw2_orthogonality(m: [u32; 2], m2: [u32; 2], big_n: u32, u: i64, v: i64, q: &BigRational) -> QResult<Complex64> {
    let mut sum = BigRational::zero();
    for n in simplex(big_n) {
        let k1 = kraw2_tratnik(m[0], m[1], n[0], n[1], u + 1, v + 1, big_n, q)?;
        let k2 = kraw2_tratnik(m2[0], m2[1], n[0], n[1], u + 1, v + 1, big_n, q)?;
        sum += kraw2_weight_squared(n[0], n[1], u, v, big_n, q)? * k1 * k2;
    }
    let norms = kraw2_norm(m[0], m[1], u, v, big_n, q)? * kraw2_norm(m2[0], m2[1], u, v, big_n, q)?;
    Ok(cplx(&sum) * norms)
}

/// Σ_{|k|=N} t^{(21)}_{k,n} t^{(21)}_{k,p} at common display parameters (u, v); should equal δ_{n,p}.
pub fn kraw2_dual_orthogonality(n: [u32; 2], p: [u32; 2], big_n: u32, u: i64, v: i64, q: &BigRational) -> QResult<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for k in simplex(big_n) {
        sum += tratnik_scalar(k, n, big_n, u, v, q)? * tratnik_scalar(k, p, big_n, u, v, q)?;
    }
    Ok(sum)
}
