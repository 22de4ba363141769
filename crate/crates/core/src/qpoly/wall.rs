//! Weighted and normalized Wall polynomials and the product identity that couples
//! them with the bivariate polynomials.

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use super::bi::{kraw2_tratnik, kraw2_weight, simplex};
use super::exact::{cplx, csqrt, div, poch, pow};
use super::uni::{kraw1, kraw1_norm, kraw1_weight};
use crate::error::{QError, QResult};
use crate::qscalar::{phi21_terminating, q_pochhammer_inf, QBase, UpperParam};

/// p̄_v(q^{2w}; q^{2s}; q²).
pub fn wall_pbar(v: i64, w: i64, s: i64, q: &QBase) -> QResult<f64> {
    if v < 0 || w < 0 || s < 0 {
        return Err(QError::OutOfRange(format!("Wall indices ({v}, {w}, {s}) must be nonnegative")));
    }
    let qe = q.exact();
    let b = q.squared();
    let lower = pow(qe, 2 * s + 2);
    let rad = pow(qe, 2 * (w - v) * (s + 1)) * poch(&lower, &b, v as u32)
        / (poch(&b, &b, v as u32) * poch(&b, &b, w as u32));
    let series = phi21_terminating(-v, UpperParam::Zero, s + 1, &b, &pow(&b, w + 1))?;
    let inf = q_pochhammer_inf(Complex64::new(q.value().powi(2 * s as i32 + 2), 0.0), q.value().powi(2))?;
    let root = (csqrt(&rad) * inf.re.sqrt()).re;
    let phase = if (v + w) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(phase * root * cplx(&series).re)
}

fn pbar_or_zero(v: i64, w: i64, s: i64, q: &QBase) -> QResult<f64> {
    if v < 0 || w < 0 {
        return Ok(0.0);
    }
    wall_pbar(v, w, s, q)
}

/// Σ_w p̄_v p̄_{v'}, truncated once the terms drop below 1e-16.
pub fn wall_orthonormality(v: i64, v2: i64, s: i64, q: &QBase) -> QResult<f64> {
    let mut sum = 0.0;
    for w in 0..100_000 {
        let a = wall_pbar(v, w, s, q)?;
        let c = wall_pbar(v2, w, s, q)?;
        sum += a * c;
        if w > v.max(v2) && a.abs() < 1e-16 && c.abs() < 1e-16 {
            break;
        }
    }
    Ok(sum)
}

/// C^{(N)}_{m,n,j}(u, v, t) of the product identity, at Wall argument w.
#[allow(clippy::too_many_arguments)]
pub fn coeff_c(
    m: [u32; 2],
    n: [u32; 2],
    j: u32,
    big_n: u32,
    u: i64,
    v: i64,
    t: i64,
    w: i64,
    q: &QBase,
) -> QResult<Complex64> {
    let lattice = n[0] + n[1];
    if j > big_n || j > lattice {
        return Err(QError::OutOfRange(format!("j = {j} exceeds min(N, n₁+n₂)")));
    }
    let qe = q.exact();
    let b = q.squared();
    let p = pow(qe, -2 * (t + 1));
    let denominator = kraw2_weight(n[0], n[1], u, w, big_n, qe)?;
    if denominator.norm() == 0.0 {
        return Err(QError::Singular("W_{n₁,n₂}(u, w) = 0".into()));
    }
    let ratio = div(
        poch(&pow(qe, -2 * w), &b, m[0]),
        poch(&pow(qe, -2 * v + 2 * j as i64), &b, m[0]),
        "(q^{-2v+2j};q²)_m₁",
    )?;
    Ok(kraw1_weight(n[0], &p, lattice, &b)?
        * kraw1_norm(j, &p, lattice, &b)?
        * kraw2_weight(j, lattice - j, u, v - j as i64, big_n, qe)?
        / denominator
        * csqrt(&ratio))
}

/// One parameter point (u, v, t, w, n, m) of the product identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WallPoint {
    pub big_n: u32,
    pub m: [u32; 2],
    pub n: [u32; 2],
    pub u: i64,
    pub v: i64,
    pub t: i64,
    pub w: i64,
}

/// Left and right sides of the Wall product identity.
pub fn wall_identity_sides(pt: &WallPoint, q: &QBase) -> QResult<(Complex64, Complex64)> {
    let WallPoint { big_n, m, n, u, v, t, w } = *pt;
    let qe = q.exact();
    let b = q.squared();
    let (n1, n2, m1) = (n[0] as i64, n[1] as i64, m[0] as i64);
    let lattice = n[0] + n[1];
    let k_left = kraw2_tratnik(m[0], m[1], n[0], n[1], u + 1, w + 1, big_n, qe)?;
    let p_left = pbar_or_zero((v - n1 - n2).min(t - n2), w - n2, (t + n1 - v).abs(), q)?;
    let left = Complex64::new(p_left, 0.0) * cplx(&k_left);

    let p = pow(qe, -2 * (t + 1));
    let mut right = Complex64::zero();
    for j in 0..=big_n.min(lattice) {
        let ji = j as i64;
        if t < ji || v - ji - m1 < 0 {
            continue;
        }
        let k = kraw1(j, n[0], &p, lattice, &b)? * kraw2_tratnik(m[0], m[1], j, lattice - j, u + 1, v - ji + 1, big_n, qe)?;
        if k.is_zero() {
            continue;
        }
        let wall = pbar_or_zero((v - ji - m1).min(t - ji), w - m1, (t + m1 - v).abs(), q)?;
        if wall == 0.0 {
            continue;
        }
        right += coeff_c(m, n, j, big_n, u, v, t, w, q)? * wall * cplx(&k);
    }
    Ok((left, right))
}

/// Grid of admissible points for N ≤ `max_n`: u ≥ N−n₁−n₂, v ≥ n₁+n₂, t, w ≥ n₂.
pub fn wall_identity_grid(max_n: u32) -> Vec<WallPoint> {
    let mut out = Vec::new();
    for big_n in 0..=max_n {
        for m in simplex(big_n) {
            for n in simplex(big_n) {
                let (n1, n2) = (n[0] as i64, n[1] as i64);
                let u0 = big_n as i64 - n1 - n2;
                for u in u0..u0 + 4 {
                    for v in n1 + n2..n1 + n2 + 5 {
                        for t in n2..n2 + 5 {
                            for w in n2..n2 + 5 {
                                out.push(WallPoint { big_n, m, n, u, v, t, w });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::q_pochhammer;

    fn half() -> QBase {
        QBase::from_ratio(1, 2).unwrap()
    }

    #[test]
    fn degree_zero_closed_form() {
        let q = 0.5f64;
        for (w, s) in [(0, 0), (2, 1), (3, 4)] {
            let inf = q_pochhammer_inf(Complex64::new(q.powi(2 * s + 2), 0.0), q * q).unwrap().re;
            let expect = if w % 2 == 0 { 1.0 } else { -1.0 }
                * (q.powi(2 * w * (s + 1)) * inf / q_pochhammer(&(q * q), &(q * q), w as usize)).sqrt();
            let got = wall_pbar(0, w as i64, s as i64, &half()).unwrap();
            assert!((got - expect).abs() < 1e-15, "{w} {s}");
        }
    }

    #[test]
    fn generic_value_by_direct_evaluation() {
        // v=1, w=2, s=1 at q=1/2: series 1 + (1−q⁻²)q⁶ / ((1−q⁴)(1−q²))
        let q = 0.5f64;
        let b = q * q;
        let series = 1.0 + (1.0 - q.powi(-2)) / ((1.0 - q.powi(4)) * (1.0 - b)) * q.powi(6);
        let inf = q_pochhammer_inf(Complex64::new(q.powi(4), 0.0), b).unwrap().re;
        let rad = q.powi(4) * inf * (1.0 - q.powi(4)) / ((1.0 - b) * (1.0 - b) * (1.0 - b * b));
        let expect = -rad.sqrt() * series;
        assert!((wall_pbar(1, 2, 1, &half()).unwrap() - expect).abs() < 1e-15);
    }

    #[test]
    fn orthonormal() {
        for s in 0..3 {
            for v in 0..4 {
                for v2 in 0..4 {
                    let o = wall_orthonormality(v, v2, s, &half()).unwrap();
                    let expect = if v == v2 { 1.0 } else { 0.0 };
                    assert!((o - expect).abs() < 1e-8, "{s} {v} {v2} {o}");
                }
            }
        }
    }

    #[test]
    fn rejects_negative_indices() {
        assert!(wall_pbar(-1, 0, 0, &half()).is_err());
    }

    #[test]
    fn degenerate_coefficient() {
        let c = coeff_c([0, 0], [0, 0], 0, 0, 0, 0, 0, 0, &half()).unwrap();
        assert!((c.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn identity_level_one_sample() {
        let grid = wall_identity_grid(1);
        for pt in grid.iter().step_by(7) {
            let (l, r) = wall_identity_sides(pt, &half()).unwrap();
            assert!((l - r).norm() < 1e-8, "{pt:?}: {l} {r}");
        }
    }
}
