//! Elementary representations π₁, π₂ and their iterated-coproduct tensor products.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use super::operator::{SparseOperator, SparseVec};
use super::space::TruncatedSpace;
use crate::ncalg::{Gen, NCPoly, Relation};
use crate::qscalar::QBase;
use crate::{QError, QResult};

/// Which elementary representation sits on a tensor leg.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Leg {
    One,
    Two,
}

impl TryFrom<char> for Leg {
    type Error = QError;

    fn try_from(c: char) -> QResult<Self> {
        match c {
            '1' => Ok(Leg::One),
            '2' => Ok(Leg::Two),
            _ => Err(QError::BadWord),
        }
    }
}

/// Nonempty word over {1, 2}, e.g. `121` for π₁₂₁.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<Leg>);

impl Word {
    pub fn new(legs: Vec<Leg>) -> QResult<Self> {
        if legs.is_empty() {
            return Err(QError::BadWord);
        }
        Ok(Self(legs))
    }

    pub fn legs(&self) -> &[Leg] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Word {
    type Err = QError;

    fn from_str(s: &str) -> QResult<Self> {
        let legs = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '[' | ']'))
            .map(Leg::try_from)
            .collect::<QResult<Vec<_>>>()?;
        Word::new(legs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Leg::One => "1",
                Leg::Two => "2",
            })?;
        }
        Ok(())
    }
}

/// One-dimensional torus representation x_ij ↦ α_i δ_ij with α₁α₂α₃ = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusChar {
    alpha: [Complex64; 3],
}

impl TorusChar {
    pub fn new(a1: Complex64, a2: Complex64) -> QResult<Self> {
        for a in [a1, a2] {
            if (a.norm() - 1.0).abs() > 1e-12 {
                return Err(QError::OutOfRange(format!("torus phase {a} is not unimodular")));
            }
        }
        Ok(Self { alpha: [a1, a2, (a1 * a2).conj()] })
    }

    pub fn from_angles(theta1: f64, theta2: f64) -> Self {
        Self::new(Complex64::from_polar(1.0, theta1), Complex64::from_polar(1.0, theta2)).expect("unimodular")
    }

    pub fn trivial() -> Self {
        Self::from_angles(0.0, 0.0)
    }

    /// α_i, 1-based.
    pub fn alpha(&self, i: usize) -> Complex64 {
        self.alpha[i - 1]
    }
}

fn elementary_f64(leg: Leg, gen: Gen, k: usize, q: f64) -> SparseOperator {
    let one = Complex64::new(1.0, 0.0);
    let lower = |n: usize| -> Vec<(usize, Complex64)> {
        if n == 0 { vec![] } else { vec![(n - 1, one * (1.0 - q.powi(2 * n as i32)).sqrt())] }
    };
    let raise = |n: usize| -> Vec<(usize, Complex64)> {
        if n + 1 >= k { vec![] } else { vec![(n + 1, one * (1.0 - q.powi(2 * n as i32 + 2)).sqrt())] }
    };
    let diag = |c: f64, shift: i32| move |n: usize| vec![(n, one * c * q.powi(n as i32 + shift))];
    let ident = |n: usize| vec![(n, one)];
    // Rows/columns (a, b) carry the SU_q(2) block; the remaining diagonal entry is 1.
    let (a, b, fixed) = match leg {
        Leg::One => (1, 2, 3),
        Leg::Two => (2, 3, 1),
    };
    let (r, c) = (gen.row(), gen.col());
    let cols: Vec<Vec<(usize, Complex64)>> = (0..k)
        .map(|n| {
            if (r, c) == (fixed, fixed) {
                ident(n)
            } else if (r, c) == (a, a) {
                lower(n)
            } else if (r, c) == (a, b) {
                diag(1.0, 1)(n)
            } else if (r, c) == (b, a) {
                diag(-1.0, 0)(n)
            } else if (r, c) == (b, b) {
                raise(n)
            } else {
                vec![]
            }
        })
        .collect();
    SparseOperator::from_columns(k, cols)
}

/// π₁(x_rs) or π₂(x_rs) on span{|0⟩, …, |K−1⟩}.
pub fn elementary_op(leg: Leg, gen: Gen, k: usize, q: &QBase) -> SparseOperator {
    elementary_f64(leg, gen, k, q.value())
}

/// π_w = (π_{i₁} ⊗ … ⊗ π_{i_L}) ∘ Δ^{(L−1)}, optionally tensored with a torus character.
#[derive(Debug, Clone)]
pub struct WordRep {
    word: Word,
    space: TruncatedSpace,
    q: f64,
    gens: Vec<SparseOperator>,
}

impl WordRep {
    pub fn new(word: &Word, k: usize, q: &QBase, torus: Option<TorusChar>) -> Self {
        let q0 = q.value();
        let space = TruncatedSpace::new(word.len(), k);
        let elem: Vec<Vec<SparseOperator>> = word
            .legs()
            .iter()
            .map(|&leg| Gen::all().map(|g| elementary_f64(leg, g, k, q0)).collect())
            .collect();
        let gens = Gen::all()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|g| {
                let mut total = SparseOperator::zero(space.total());
                for path in paths(g.row(), g.col(), word.len()) {
                    let mut term: Option<SparseOperator> = None;
                    for (leg, pair) in path.windows(2).enumerate() {
                        let f = &elem[leg][Gen::new(pair[0], pair[1]).index() as usize];
                        term = Some(match term {
                            None => f.clone(),
                            Some(t) => t.kron(f),
                        });
                    }
                    let term = term.expect("nonempty word");
                    if term.nnz() > 0 {
                        total = total.add(&term);
                    }
                }
                match torus {
                    Some(t) => total.scale(t.alpha(g.col())),
                    None => total,
                }
            })
            .collect();
        Self { word: word.clone(), space, q: q0, gens }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn space(&self) -> TruncatedSpace {
        self.space
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn generator(&self, g: Gen) -> &SparseOperator {
        &self.gens[g.index() as usize]
    }

    /// Image of the product of `letters` (leftmost factor applied last).
    pub fn apply_letters(&self, letters: &[u8], v: &SparseVec) -> SparseVec {
        letters.iter().rev().fold(v.clone(), |acc, &l| self.gens[l as usize].apply(&acc))
    }

    pub fn apply_poly(&self, p: &NCPoly, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (m, c) in p.terms() {
            let c = c.eval_f64(self.q);
            for (i, z) in self.apply_letters(&m.word(), v) {
                *out.entry(i).or_default() += z * c;
            }
        }
        out
    }

    /// Image of an unreduced free-algebra element.
    pub fn apply_relation(&self, rel: &Relation, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, w) in &rel.terms {
            let c = c.eval_f64(self.q);
            let letters: Vec<u8> = w.iter().map(|g| g.index()).collect();
            for (i, z) in self.apply_letters(&letters, v) {
                *out.entry(i).or_default() += z * c;
            }
        }
        out
    }

    /// Full truncated matrix of π_w(p), built column by column.
    pub fn operator(&self, p: &NCPoly) -> SparseOperator {
        let cols = (0..self.space.total())
            .into_par_iter()
            .map(|c| self.apply_poly(p, &basis(c)))
            .collect();
        SparseOperator::from_vectors(self.space.total(), cols)
    }
}

pub(crate) fn basis(i: usize) -> SparseVec {
    SparseVec::from([(i, Complex64::new(1.0, 0.0))])
}

/// Index paths r = k₀, k₁, …, k_L = s through {1, 2, 3}.
fn paths(r: usize, s: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![r]];
    for _ in 1..len {
        out = out
            .into_iter()
            .flat_map(|p| (1..=3).map(move |k| [p.as_slice(), &[k]].concat()))
            .collect();
    }
    for p in &mut out {
        p.push(s);
    }
    out
}

/// π_w(p) as a truncated sparse matrix.
pub fn word_op(word: &Word, p: &NCPoly, k: usize, q: &QBase, torus: Option<TorusChar>) -> SparseOperator {
    WordRep::new(word, k, q, torus).operator(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QBase {
        QBase::from_ratio(3, 5).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn word_parsing() {
        assert_eq!("121".parse::<Word>().unwrap().len(), 3);
        assert_eq!("2,1".parse::<Word>().unwrap().to_string(), "21");
        assert_eq!("".parse::<Word>(), Err(QError::BadWord));
        assert_eq!("13".parse::<Word>(), Err(QError::BadWord));
    }

    #[test]
    fn elementary_examples() {
        let x = |i, j| Gen::new(i, j);
        let a = elementary_op(Leg::One, x(1, 1), 8, &q());
        assert!(a.column(0).is_empty());
        assert!((a.get(2, 3) - c((1.0 - 0.6f64.powi(6)).sqrt())).norm() < 1e-15);
        let id = elementary_op(Leg::One, x(3, 3), 8, &q());
        assert_eq!(id, SparseOperator::identity(8));
        assert_eq!(elementary_op(Leg::Two, x(2, 1), 8, &q()).nnz(), 0);
        assert_eq!(elementary_op(Leg::Two, x(1, 1), 8, &q()), SparseOperator::identity(8));
        let b = elementary_op(Leg::Two, x(2, 3), 8, &q());
        assert!((b.get(4, 4) - c(0.6f64.powi(5))).norm() < 1e-15);
        let cc = elementary_op(Leg::One, x(2, 1), 8, &q());
        assert!((cc.get(4, 4) + c(0.6f64.powi(4))).norm() < 1e-15);
    }

    #[test]
    fn single_leg_word_is_elementary() {
        let w: Word = "1".parse().unwrap();
        for g in Gen::all() {
            let op = word_op(&w, &NCPoly::generator(g), 10, &q(), None);
            assert_eq!(op, elementary_op(Leg::One, g, 10, &q()));
        }
    }

    #[test]
    fn two_leg_path_sum_matches_kron() {
        // π₂₁(x₁₃) = Σ_k π₂(x₁ₖ) ⊗ π₁(xₖ₃): π₂'s first row is x₁₁ ↦ 1 only, and π₁(x₁₃) = 0.
        let w: Word = "21".parse().unwrap();
        let k = 6;
        let rep = WordRep::new(&w, k, &q(), None);
        let mut want = SparseOperator::zero(k * k);
        for j in 1..=3 {
            let a = elementary_op(Leg::Two, Gen::new(1, j), k, &q());
            let b = elementary_op(Leg::One, Gen::new(j, 3), k, &q());
            want = want.add(&a.kron(&b));
        }
        assert_eq!(rep.generator(Gen::new(1, 3)), &want);
        assert_eq!(want.nnz(), 0);
        let x12 = rep.generator(Gen::new(1, 2));
        let s = rep.space();
        let img = x12.apply(&basis(s.flat(&[2, 3])));
        assert_eq!(img.len(), 1);
        assert!((img[&s.flat(&[2, 3])] - c(0.6f64.powi(4))).norm() < 1e-15);
    }

    #[test]
    fn torus_scales_columns() {
        let w: Word = "1".parse().unwrap();
        let t = TorusChar::from_angles(0.3, -1.1);
        let rep = WordRep::new(&w, 6, &q(), Some(t));
        let plain = WordRep::new(&w, 6, &q(), None);
        let g = Gen::new(1, 2);
        assert_eq!(rep.generator(g), &plain.generator(g).scale(t.alpha(2)));
        assert!((t.alpha(1) * t.alpha(2) * t.alpha(3) - c(1.0)).norm() < 1e-15);
        assert!(TorusChar::new(c(2.0), c(1.0)).is_err());
    }
}
