//! Matrix elements of the symmetric corepresentations F_q^{(N)}(C³).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{QError, QResult};
use crate::ncalg::{Gen, Monomial, NCPoly, Reducer, TensorNCPoly};
use crate::qscalar::{q_multinomial, LaurentScalar};

/// Exponent triple m of z₁^{m₁} z₂^{m₂} z₃^{m₃}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex3(pub [u32; 3]);

impl MultiIndex3 {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Self([a, b, c])
    }

    pub fn unit(i: usize) -> Self {
        let mut m = [0; 3];
        m[i - 1] = 1;
        Self(m)
    }

    pub fn level(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All triples with |m| = n, lexicographically ascending.
    pub fn all_at_level(n: u32) -> Vec<MultiIndex3> {
        (0..=n)
            .flat_map(|a| (0..=n - a).map(move |b| MultiIndex3([a, b, n - a - b])))
            .collect()
    }
}

impl fmt::Display for MultiIndex3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for MultiIndex3 {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<u32> = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|e| QError::Parse(format!("multi-index `{s}`: {e}")))?;
        match parts[..] {
            [a, b, c] => Ok(Self([a, b, c])),
            _ => Err(QError::Parse(format!("multi-index `{s}` needs three entries"))),
        }
    }
}

impl Serialize for MultiIndex3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Nonnegative 3×3 integer matrix a, indexed a[i][k] with 0-based i, k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexMatrix3(pub [[u32; 3]; 3]);

impl IndexMatrix3 {
    pub fn row_sums(&self) -> MultiIndex3 {
        MultiIndex3(self.0.map(|r| r.iter().sum()))
    }

    pub fn col_sums(&self) -> MultiIndex3 {
        MultiIndex3([0, 1, 2].map(|k| self.0.iter().map(|r| r[k]).sum()))
    }

    pub fn transpose(&self) -> Self {
        let a = &self.0;
        Self([0, 1, 2].map(|i| [0, 1, 2].map(|k| a[k][i])))
    }

    pub fn rows(&self) -> [MultiIndex3; 3] {
        self.0.map(MultiIndex3)
    }

    pub fn cols(&self) -> [MultiIndex3; 3] {
        self.transpose().rows()
    }

    /// ∏_k ∏_i x_ik^{a_ik} as a word (column-major).
    pub fn column_major_word(&self) -> Vec<Gen> {
        let mut w = Vec::new();
        for k in 0..3 {
            for i in 0..3 {
                w.extend(std::iter::repeat_n(Gen::new(i + 1, k + 1), self.0[i][k] as usize));
            }
        }
        w
    }

    /// ∏_i ∏_k x_ik^{a_ik} as a word (row-major).
    pub fn row_major_word(&self) -> Vec<Gen> {
        self.transpose()
            .column_major_word()
            .into_iter()
            .map(|g| Gen::new(g.col(), g.row()))
            .collect()
    }
}

fn check_levels(m: MultiIndex3, n: MultiIndex3) -> QResult<()> {
    if m.level() != n.level() {
        return Err(QError::MarginalMismatch(format!("|{m}| != |{n}|")));
    }
    Ok(())
}

/// All index matrices with row sums m and column sums n, lexicographic by flattened rows.
pub fn index_matrices(m: MultiIndex3, n: MultiIndex3) -> QResult<Vec<IndexMatrix3>> {
    check_levels(m, n)?;
    let [m1, m2, _] = m.0;
    let mut out = Vec::new();
    for a11 in 0..=m1.min(n.0[0]) {
        for a12 in 0..=(m1 - a11).min(n.0[1]) {
            let a13 = m1 - a11 - a12;
            if a13 > n.0[2] {
                continue;
            }
            for a21 in 0..=m2.min(n.0[0] - a11) {
                for a22 in 0..=(m2 - a21).min(n.0[1] - a12) {
                    let a23 = m2 - a21 - a22;
                    if a13 + a23 > n.0[2] {
                        continue;
                    }
                    let r3 = [n.0[0] - a11 - a21, n.0[1] - a12 - a22, n.0[2] - a13 - a23];
                    out.push(IndexMatrix3([[a11, a12, a13], [a21, a22, a23], r3]));
                }
            }
        }
    }
    Ok(out)
}

/// f(a) in the twist Q(a) = q^{−f(a)}.
pub fn twist_exponent(a: &IndexMatrix3) -> i64 {
    let [[_, a12, a13], [a21, a22, a23], [a31, a32, _]] = a.0.map(|r| r.map(i64::from));
    a13 * (a21 + a22 + a32) + a31 * (a12 + a22 + a23) + a12 * a21 + a13 * a31 + a23 * a32
}

pub fn q_twist(a: &IndexMatrix3) -> LaurentScalar {
    LaurentScalar::q_pow(-twist_exponent(a))
}

/// ∏ over the given triples of the q-multinomials [|r|; r] at base q⁻².
fn multinomial_product(parts: &[MultiIndex3]) -> LaurentScalar {
    parts
        .iter()
        .map(|r| q_multinomial(r.level(), r.0).expect("marginal by construction").dilate(-2))
        .fold(LaurentScalar::one(), |acc, x| acc * x)
}

/// [m over a] at q⁻², built from the rows of a.
pub fn row_multinomial(a: &IndexMatrix3) -> LaurentScalar {
    multinomial_product(&a.rows())
}

/// [n over a] at q⁻², built from the columns of a.
pub fn col_multinomial(a: &IndexMatrix3) -> LaurentScalar {
    multinomial_product(&a.cols())
}

/// [N m] at q⁻².
pub fn level_multinomial(m: MultiIndex3) -> LaurentScalar {
    multinomial_product(&[m])
}

fn element_sum(
    m: MultiIndex3,
    n: MultiIndex3,
    coeff: impl Fn(&IndexMatrix3) -> LaurentScalar,
) -> QResult<NCPoly> {
    let mut reducer = Reducer::default();
    let mut out = NCPoly::zero();
    for a in index_matrices(m, n)? {
        let word = reducer.reduce_word(&a.column_major_word());
        out.add_scaled(&word, &(q_twist(&a) * coeff(&a)));
    }
    Ok(out)
}

/// h_{m,n} = Σ_a Q(a) [m over a]_{q⁻²} ∏_k ∏_i x_ik^{a_ik}.
pub fn h_element(m: MultiIndex3, n: MultiIndex3) -> QResult<NCPoly> {
    element_sum(m, n, row_multinomial)
}

/// Right-comodule element h̃_{m,n}: the same sum with the column multinomial [n over a].
pub fn h_right_element(m: MultiIndex3, n: MultiIndex3) -> QResult<NCPoly> {
    element_sum(m, n, col_multinomial)
}

/// Unitary matrix element: exact part h and the numeric factor √([N m]/[N n]) at q⁻².
#[derive(Debug, Clone, PartialEq)]
pub struct TElement {
    pub poly: NCPoly,
    pub factor: f64,
}

pub fn t_element(m: MultiIndex3, n: MultiIndex3, q0: f64) -> QResult<TElement> {
    let poly = h_element(m, n)?;
    let ratio = level_multinomial(m).eval_f64(q0) / level_multinomial(n).eval_f64(q0);
    Ok(TElement { poly, factor: ratio.sqrt() })
}

/// Table of h_{m,n} for all |m| = |n| = N, built in parallel.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixElementTable {
    pub level: u32,
    pub entries: BTreeMap<(MultiIndex3, MultiIndex3), NCPoly>,
}

impl MatrixElementTable {
    pub fn build(level: u32) -> Self {
        let idx = MultiIndex3::all_at_level(level);
        let pairs: Vec<_> = idx.iter().flat_map(|&m| idx.iter().map(move |&n| (m, n))).collect();
        let entries = pairs
            .into_par_iter()
            .map(|(m, n)| ((m, n), h_element(m, n).expect("levels match")))
            .collect();
        Self { level, entries }
    }

    pub fn get(&self, m: MultiIndex3, n: MultiIndex3) -> Option<&NCPoly> {
        self.entries.get(&(m, n))
    }
}

/// Expansion of ∏_i (Σ_k x_ik ⊗ z_k)^{m_i} in M_q(3) ⊗ C_q[z], z_i z_j = q z_j z_i (i < j).
///
/// Returns the coefficient of each ordered z^n.
pub fn coaction_expand(m: MultiIndex3) -> BTreeMap<MultiIndex3, NCPoly> {
    let mut reducer = Reducer::default();
    let mut acc: BTreeMap<MultiIndex3, NCPoly> = BTreeMap::from([(MultiIndex3::default(), NCPoly::one())]);
    for i in 1..=3 {
        for _ in 0..m.0[i - 1] {
            let mut next: BTreeMap<MultiIndex3, NCPoly> = BTreeMap::new();
            for (n, coeff) in &acc {
                for k in 1..=3 {
                    // moving z_k left past every z_j with j > k costs q⁻¹ each
                    let passed: u32 = n.0[k..].iter().sum();
                    let mut n2 = *n;
                    n2.0[k - 1] += 1;
                    let x = coeff.mul_with(&NCPoly::generator(Gen::new(i, k)), &mut reducer);
                    next.entry(n2)
                        .or_default()
                        .add_scaled(&x, &LaurentScalar::q_pow(-(passed as i64)));
                }
            }
            next.retain(|_, p| !p.is_zero());
            acc = next;
        }
    }
    acc
}

/// q-exponent of reordering the z-word ∏_i ∏_k z_k^{a_ik} into z^n.
pub fn z_reorder_exponent(a: &IndexMatrix3) -> i64 {
    let word: Vec<usize> = (0..3)
        .flat_map(|i| (0..3).flat_map(move |k| std::iter::repeat_n(k, a.0[i][k] as usize)))
        .collect();
    let inversions = (0..word.len())
        .flat_map(|p| (p + 1..word.len()).map(move |r| (p, r)))
        .filter(|&(p, r)| word[p] > word[r])
        .count();
    -(inversions as i64)
}

/// Δ(h_{m,p}) − Σ_n h_{m,n} ⊗ h_{n,p}.
pub fn comodule_defect(table: &MatrixElementTable, m: MultiIndex3, p: MultiIndex3) -> TensorNCPoly {
    let mut defect = crate::ncalg::coproduct(&table.entries[&(m, p)]);
    for n in MultiIndex3::all_at_level(table.level) {
        let term = TensorNCPoly::tensor(&table.entries[&(m, n)], &table.entries[&(n, p)]);
        defect.add_scaled(&term, &-LaurentScalar::one());
    }
    defect
}

/// The monomial x-word of an index matrix after normal ordering.
pub fn index_monomial(a: &IndexMatrix3) -> Monomial {
    let letters: Vec<u8> = a.column_major_word().iter().map(|g| g.index()).collect();
    Monomial::from_letters(&letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::counit;

    fn mi(a: u32, b: u32, c: u32) -> MultiIndex3 {
        MultiIndex3::new(a, b, c)
    }

    #[test]
    fn forced_index_matrices() {
        let e1 = mi(1, 0, 0);
        assert_eq!(index_matrices(e1, e1).unwrap(), vec![IndexMatrix3([[1, 0, 0], [0, 0, 0], [0, 0, 0]])]);
        assert_eq!(
            index_matrices(mi(2, 0, 0), mi(1, 1, 0)).unwrap(),
            vec![IndexMatrix3([[1, 1, 0], [0, 0, 0], [0, 0, 0]])]
        );
        assert!(matches!(index_matrices(mi(1, 0, 0), mi(1, 1, 0)), Err(QError::MarginalMismatch(_))));
    }

    #[test]
    fn permutation_matrices_by_brute_force() {
        let got = index_matrices(mi(1, 1, 1), mi(1, 1, 1)).unwrap();
        let mut brute = Vec::new();
        for bits in 0u32..512 {
            let a = IndexMatrix3([0, 1, 2].map(|i| [0, 1, 2].map(|k| (bits >> (3 * i + k)) & 1)));
            if a.row_sums() == mi(1, 1, 1) && a.col_sums() == mi(1, 1, 1) {
                brute.push(a);
            }
        }
        assert_eq!(got.len(), 6);
        assert_eq!(got, brute.into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn twist_values() {
        let diag = IndexMatrix3([[2, 0, 0], [0, 1, 0], [0, 0, 3]]);
        assert!(q_twist(&diag).is_one());
        let swap = IndexMatrix3([[0, 1, 0], [1, 0, 0], [0, 0, 0]]);
        assert_eq!(q_twist(&swap), LaurentScalar::q_pow(-1));
    }

    #[test]
    fn level_one_and_two_examples() {
        for i in 1..=3 {
            for k in 1..=3 {
                let h = h_element(MultiIndex3::unit(i), MultiIndex3::unit(k)).unwrap();
                assert_eq!(h, NCPoly::generator(Gen::new(i, k)));
                let hr = h_right_element(MultiIndex3::unit(i), MultiIndex3::unit(k)).unwrap();
                assert_eq!(hr, NCPoly::generator(Gen::new(i, k)));
            }
        }
        let h = h_element(mi(2, 0, 0), mi(1, 1, 0)).unwrap();
        let mono = index_monomial(&IndexMatrix3([[1, 1, 0], [0, 0, 0], [0, 0, 0]]));
        let expect = NCPoly::monomial(mono, LaurentScalar::one() + LaurentScalar::q_pow(-2));
        assert_eq!(h, expect);
    }

    #[test]
    fn coaction_base_cases() {
        let zero = coaction_expand(MultiIndex3::default());
        assert_eq!(zero, BTreeMap::from([(MultiIndex3::default(), NCPoly::one())]));
        let lin = coaction_expand(MultiIndex3::unit(1));
        for k in 1..=3 {
            assert_eq!(lin[&MultiIndex3::unit(k)], NCPoly::generator(Gen::new(1, k)));
        }
    }

    #[test]
    fn counit_is_kronecker() {
        for n in 0..=2 {
            let table = MatrixElementTable::build(n);
            for ((m, p), h) in &table.entries {
                assert_eq!(counit(h).is_one(), m == p);
                assert_eq!(counit(h).is_zero(), m != p);
            }
        }
    }

    #[test]
    fn t_factor_trivial_cases() {
        let t = t_element(mi(1, 1, 0), mi(1, 1, 0), 0.6).unwrap();
        assert_eq!(t.factor, 1.0);
        let t = t_element(mi(0, 1, 0), mi(0, 0, 1), 0.6).unwrap();
        assert_eq!(t.factor, 1.0);
    }

    #[test]
    fn oracle_matches_h_at_low_level() {
        for n in 0..=2 {
            for m in MultiIndex3::all_at_level(n) {
                let oracle = coaction_expand(m);
                for p in MultiIndex3::all_at_level(n) {
                    let h = h_element(m, p).unwrap();
                    assert_eq!(oracle.get(&p).cloned().unwrap_or_default(), h, "{m} {p}");
                }
            }
        }
    }

    #[test]
    fn z_reordering_and_symmetry() {
        for n in 0..=4 {
            for m in MultiIndex3::all_at_level(n) {
                for p in MultiIndex3::all_at_level(n) {
                    for a in index_matrices(m, p).unwrap() {
                        assert_eq!(z_reorder_exponent(&a), -twist_exponent(&a));
                        assert_eq!(q_twist(&a), q_twist(&a.transpose()));
                    }
                }
            }
        }
    }

    #[test]
    fn comodule_level_one() {
        let table = MatrixElementTable::build(1);
        for m in MultiIndex3::all_at_level(1) {
            for p in MultiIndex3::all_at_level(1) {
                assert!(comodule_defect(&table, m, p).is_zero());
            }
        }
    }

    #[test]
    fn multi_index_parse() {
        assert_eq!("1, 2,0".parse::<MultiIndex3>().unwrap(), mi(1, 2, 0));
        assert!("1,2".parse::<MultiIndex3>().is_err());
        assert_eq!(MultiIndex3::all_at_level(2).len(), 6);
    }
}
