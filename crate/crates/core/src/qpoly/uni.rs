//! Univariate quantum q-Krawtchouk polynomials and the π₁/π₂ shift scalars.

use num_complex::Complex64;
use num_rational::BigRational;

use super::exact::{cplx, csqrt, div, int, multinomial, poch, pow, sign};
use crate::error::{QError, QResult};
use crate::qscalar::{phi21_terminating, QBase, UpperParam};

fn check_degree(what: &str, n: u32, big_n: u32) -> QResult<()> {
    if n > big_n {
        return Err(QError::OutOfRange(format!("{what} = {n} exceeds lattice size {big_n}")));
    }
    Ok(())
}

/// k_n(x; p, N, b) = (−1)^n (b^{−N}; b)_n b^{n(n−1)/2} ₂φ₁(b^{−n}, b^{−x}; b^{−N}; b; p b^{n+1}).
pub fn kraw1(n: u32, x: u32, p: &BigRational, big_n: u32, b: &BigRational) -> QResult<BigRational> {
    check_degree("degree", n, big_n)?;
    let (n, x, nn) = (n as i64, x as i64, big_n as i64);
    let pre = sign(n) * poch(&pow(b, -nn), b, n as u32) * pow(b, n * (n - 1) / 2);
    let z = p * pow(b, n + 1);
    let series = phi21_terminating(-n, UpperParam::Power(-x), -nn, b, &z)?;
    Ok(pre * series)
}

/// w_x(p)², an exact rational of either sign.
pub fn kraw1_weight_squared(x: u32, p: &BigRational, big_n: u32, b: &BigRational) -> QResult<BigRational> {
    check_degree("point", x, big_n)?;
    let (xi, nn) = (x as i64, big_n as i64);
    let num = sign(nn - xi)
        * pow(b, xi * (xi - 1) / 2)
        * multinomial(&[x, big_n - x], b)
        * poch(&(p * b), b, big_n - x)
        * pow(p, -nn)
        * pow(b, -nn * (nn + 1) / 2);
    div(num, poch(b, b, big_n), "(b;b)_N")
}

/// w_x(p) on the principal branch.
pub fn kraw1_weight(x: u32, p: &BigRational, big_n: u32, b: &BigRational) -> QResult<Complex64> {
    Ok(csqrt(&kraw1_weight_squared(x, p, big_n, b)?))
}

/// Θ_n(p) = b^{−n(n−1)/2} / (b^{−N}; b)_n · [(−1)^n b^{n(n+1)/2−Nn} [N n]_b (b;b)_N / (bp;b)_n]^{1/2}.
pub fn kraw1_norm(n: u32, p: &BigRational, big_n: u32, b: &BigRational) -> QResult<Complex64> {
    check_degree("degree", n, big_n)?;
    let (ni, nn) = (n as i64, big_n as i64);
    let pre = div(pow(b, -ni * (ni - 1) / 2), poch(&pow(b, -nn), b, n), "(b^-N;b)_n")?;
    let rad = div(
        sign(ni) * pow(b, ni * (ni + 1) / 2 - nn * ni) * multinomial(&[n, big_n - n], b) * poch(b, b, big_n),
        poch(&(b * p), b, n),
        "(bp;b)_n",
    )?;
    Ok(cplx(&pre) * csqrt(&rad))
}

/// Scalar t_{m,n,T}(k) of π_i(t_{m,n}) |k⟩ ∝ |k + T − m − n⟩.
///
/// Evaluated at k ← k + T − n in the closed form, base q², lattice size T.
pub fn uni_shift_scalar(m: u32, n: u32, t: u32, k: i64, q: &QBase) -> QResult<Complex64> {
    check_degree("m", m, t)?;
    check_degree("n", n, t)?;
    if k + i64::from(t) - i64::from(m) - i64::from(n) < 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let b = q.squared();
    let kk = k + t as i64 - n as i64;
    let p = pow(&b, -(kk + 1));
    let poly = kraw1(m, n, &p, t, &b)?;
    let w = kraw1_weight(n, &p, t, &b)?;
    let theta = kraw1_norm(m, &p, t, &b)?;
    Ok(cplx(&(sign(n as i64 - m as i64) * poly)) * w * theta)
}

/// Σ_x w_x² k_n(x) k_{n'}(x) Θ_n Θ_{n'}, which should equal δ_{n,n'}.
pub fn kraw1_orthogonality(n: u32, n2: u32, p: &BigRational, big_n: u32, b: &BigRational) -> QResult<Complex64> {
    let theta = kraw1_norm(n, p, big_n, b)? * kraw1_norm(n2, p, big_n, b)?;
    let mut sum = BigRational::from(int(0));
    for x in 0..=big_n {
        sum += kraw1_weight_squared(x, p, big_n, b)? * kraw1(n, x, p, big_n, b)? * kraw1(n2, x, p, big_n, b)?;
    }
    Ok(cplx(&sum) * theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::q_pochhammer;
    use num_traits::{One, ToPrimitive};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn degree_zero_and_origin() {
        let b = r(9, 25);
        let p = pow(&b, -3);
        for x in 0..=3 {
            assert!(kraw1(0, x, &p, 3, &b).unwrap().is_one());
        }
        for n in 0..=3i64 {
            let expect = sign(n) * poch(&pow(&b, -3), &b, n as u32) * pow(&b, n * (n - 1) / 2);
            assert_eq!(kraw1(n as u32, 0, &p, 3, &b).unwrap(), expect);
        }
        assert!(matches!(kraw1(4, 0, &p, 3, &b), Err(QError::OutOfRange(_))));
    }

    #[test]
    fn generic_value_by_direct_summation() {
        // n=2, x=1, p=b^-2, N=3, b=0.36
        let b = 0.36f64;
        let p = b.powi(-2);
        let term = |j: usize| {
            q_pochhammer(&b.powi(-2), &b, j) * q_pochhammer(&b.powi(-1), &b, j)
                / (q_pochhammer(&b.powi(-3), &b, j) * q_pochhammer(&b, &b, j))
                * (p * b.powi(3)).powi(j as i32)
        };
        let direct = q_pochhammer(&b.powi(-3), &b, 2) * b * (term(0) + term(1) + term(2));
        let br = r(9, 25);
        let got = kraw1(2, 1, &pow(&br, -2), 3, &br).unwrap().to_f64().unwrap();
        assert!((got - direct).abs() < 1e-9 * direct.abs());
    }

    #[test]
    fn empty_lattice() {
        let b = r(1, 4);
        let p = pow(&b, -1);
        assert_eq!(kraw1_weight(0, &p, 0, &b).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(kraw1_norm(0, &p, 0, &b).unwrap(), Complex64::new(1.0, 0.0));
        let q = QBase::from_ratio(1, 2).unwrap();
        assert_eq!(uni_shift_scalar(0, 0, 0, 5, &q).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn weight_matches_transcription() {
        // x=1, p=b^-2, N=2 written out by hand in floats
        let b = 0.25f64;
        let p = b.powi(-2);
        let qb = |n: usize| q_pochhammer(&b, &b, n);
        let val = -(qb(2) / (qb(1) * qb(1))) * q_pochhammer(&(p * b), &b, 1) / qb(2)
            * p.powi(-2)
            * b.powi(-3);
        let got = kraw1_weight_squared(1, &pow(&r(1, 4), -2), 2, &r(1, 4)).unwrap();
        assert!((got.to_f64().unwrap() - val).abs() < 1e-12 * val.abs());
    }

    #[test]
    fn orthogonality_small() {
        let b = r(9, 25);
        for big_n in 0..=4 {
            let p = pow(&b, -(big_n as i64 + 2));
            for n in 0..=big_n {
                for n2 in 0..=big_n {
                    let s = kraw1_orthogonality(n, n2, &p, big_n, &b).unwrap();
                    let expect = if n == n2 { 1.0 } else { 0.0 };
                    assert!((s - expect).norm() < 1e-10, "{big_n} {n} {n2} {s}");
                }
            }
        }
    }
}
