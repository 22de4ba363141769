//! Matrix elements t_{m,n} evaluated in π_w, and their closed shift-operator forms.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::operator::SparseVec;
use super::space::TruncatedSpace;
use super::word::{basis, Leg, TorusChar, Word, WordRep};
use crate::corep::{t_element, MultiIndex3, TElement};
use crate::qpoly::{bi_shift_scalar, uni_shift_scalar};
use crate::qscalar::QBase;
use crate::QResult;

/// Output vector keyed by basis tuple.
pub type StateMap = BTreeMap<Vec<usize>, Complex64>;

fn to_states(space: &TruncatedSpace, v: SparseVec) -> StateMap {
    v.into_iter().map(|(i, z)| (space.state(i), z)).collect()
}

impl WordRep {
    /// π_w(t_{m,n}) |state⟩ for any state of the truncated basis (no window check).
    pub fn matrix_element_image(&self, m: MultiIndex3, n: MultiIndex3, state: &[usize]) -> QResult<StateMap> {
        Ok(self.element_image(&t_element(m, n, self.q())?, state))
    }

    /// π_w(t)|state⟩ for a precomputed matrix element.
    pub fn element_image(&self, t: &TElement, state: &[usize]) -> StateMap {
        let space = self.space();
        let v = self.apply_poly(&t.poly, &basis(space.flat(state)));
        let scaled = v.into_iter().map(|(i, z)| (i, z * t.factor)).collect();
        to_states(&space, scaled)
    }
}

/// π_w(t_{m,n}) |state⟩ on a truncation K, with `state` required to lie in the safe window.
pub fn apply_matrix_element(
    word: &Word,
    m: MultiIndex3,
    n: MultiIndex3,
    state: &[usize],
    k: usize,
    q: &QBase,
    torus: Option<TorusChar>,
) -> QResult<StateMap> {
    let rep = WordRep::new(word, k, q, torus);
    rep.space().checked_flat(state, m.level() as usize)?;
    rep.matrix_element_image(m, n, state)
}

fn single(state: Vec<i64>, z: Complex64) -> StateMap {
    if state.iter().any(|&k| k < 0) || z == Complex64::new(0.0, 0.0) {
        return StateMap::new();
    }
    StateMap::from([(state.into_iter().map(|k| k as usize).collect(), z)])
}

fn uni_image(leg: Leg, m: MultiIndex3, n: MultiIndex3, k: usize, q: &QBase) -> QResult<StateMap> {
    let (m, n) = (m.0, n.0);
    let big_n = m.iter().sum::<u32>();
    let (active, t, mi, ni) = match leg {
        Leg::One => (m[2] == n[2], big_n - m[2], m[0], n[0]),
        Leg::Two => (m[0] == n[0], big_n - m[0], m[1], n[1]),
    };
    if !active {
        return Ok(StateMap::new());
    }
    let k = k as i64;
    let z = uni_shift_scalar(mi, ni, t, k, q)?;
    Ok(single(vec![k + i64::from(t) - i64::from(mi) - i64::from(ni)], z))
}

fn pair(m: MultiIndex3) -> [u32; 2] {
    [m.0[0], m.0[1]]
}

fn bi_image(m: MultiIndex3, n: MultiIndex3, u: usize, v: usize, q: &QBase) -> QResult<StateMap> {
    let big_n = m.level();
    let (u, v) = (u as i64, v as i64);
    let z = bi_shift_scalar(pair(m), pair(n), big_n, u, v, q)?;
    let (tu, tv) = crate::qpoly::bi_shift_target(pair(m), pair(n), big_n, u, v);
    Ok(single(vec![tu, tv], z))
}

/// π₁₂₁(t_{m,n}) |t,u,v⟩ = Σ_{k₁} t_{m₁,k₁,m₁+m₂}(t) t^{(21)}_{k,n}(u,v) |t+m₂−k₁, u+N−m₁−m₂−n₁−n₂+k₁, v+n₂−k₁⟩
/// with k = (k₁, m₁+m₂−k₁, m₃).
pub fn pi121_image(m: MultiIndex3, n: MultiIndex3, state: [usize; 3], q: &QBase) -> QResult<StateMap> {
    let [m1, m2, _] = m.0;
    let [n1, n2, _] = n.0;
    let big_n = m.level();
    let [t, u, v] = state.map(|s| s as i64);
    let mut out = StateMap::new();
    for k1 in 0..=m1 + m2 {
        let outer = uni_shift_scalar(m1, k1, m1 + m2, t, q)?;
        let inner = bi_shift_scalar([k1, m1 + m2 - k1], [n1, n2], big_n, u, v, q)?;
        let target = vec![
            t + i64::from(m2) - i64::from(k1),
            u + i64::from(big_n) - i64::from(m1 + m2 + n1 + n2) + i64::from(k1),
            v + i64::from(n2) - i64::from(k1),
        ];
        for (s, z) in single(target, outer * inner) {
            *out.entry(s).or_default() += z;
        }
    }
    Ok(out)
}

/// Closed-form image of t_{m,n} for the words 1, 2, 21 and 121; `None` for other words.
pub fn closed_form_image(
    word: &Word,
    m: MultiIndex3,
    n: MultiIndex3,
    state: &[usize],
    q: &QBase,
) -> QResult<Option<StateMap>> {
    Ok(match (word.legs(), state) {
        ([leg], &[k]) => Some(uni_image(*leg, m, n, k, q)?),
        ([Leg::Two, Leg::One], &[u, v]) => Some(bi_image(m, n, u, v, q)?),
        ([Leg::One, Leg::Two, Leg::One], &[t, u, v]) => Some(pi121_image(m, n, [t, u, v], q)?),
        _ => None,
    })
}

/// Deviation of an image from its expected value.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ImageDeviation {
    /// max |a − e| / |e| over states where `e` is nonzero.
    pub relative: f64,
    /// max |a| over states where `e` vanishes.
    pub vanishing: f64,
}

impl ImageDeviation {
    pub fn max(self, other: ImageDeviation) -> ImageDeviation {
        ImageDeviation {
            relative: self.relative.max(other.relative),
            vanishing: self.vanishing.max(other.vanishing),
        }
    }
}

pub fn image_deviation(actual: &StateMap, expected: &StateMap) -> ImageDeviation {
    let mut dev = ImageDeviation::default();
    for (s, e) in expected {
        let a = actual.get(s).copied().unwrap_or_default();
        dev.relative = dev.relative.max((a - e).norm() / e.norm());
    }
    for (s, a) in actual {
        if !expected.contains_key(s) {
            dev.vanishing = dev.vanishing.max(a.norm());
        }
    }
    dev
}
