//! Coproduct, counit, antipode, quantum minors and determinant, star map,
//! and the defining relations as free-algebra elements.

use std::collections::BTreeMap;

use super::poly::{Gen, Monomial, NCPoly, TensorNCPoly};
use super::reduce::Reducer;
use crate::qscalar::LaurentScalar;

/// Δ(x_ij) = Σ_k x_ik ⊗ x_kj.
pub fn coproduct_generator(g: Gen) -> TensorNCPoly {
    let mut t = TensorNCPoly::zero();
    for k in 1..=3 {
        t.add_term(
            Monomial::generator(Gen::new(g.row(), k)),
            Monomial::generator(Gen::new(k, g.col())),
            LaurentScalar::one(),
        );
    }
    t
}

/// Δ of the product of `word`, legwise normal-ordered.
pub fn coproduct_word(word: &[Gen], reducer: &mut Reducer) -> TensorNCPoly {
    word.iter().fold(TensorNCPoly::one(), |acc, &g| {
        acc.mul_with(&coproduct_generator(g), reducer)
    })
}

pub fn coproduct(p: &NCPoly) -> TensorNCPoly {
    let mut reducer = Reducer::default();
    let mut out = TensorNCPoly::zero();
    for (m, c) in p.terms() {
        let word: Vec<Gen> = m.word().into_iter().map(Gen::from_index).collect();
        out.add_scaled(&coproduct_word(&word, &mut reducer), c);
    }
    out
}

pub fn counit_monomial(m: &Monomial) -> LaurentScalar {
    let off_diagonal = Gen::all().filter(|g| g.row() != g.col()).any(|g| m.exponent(g) > 0);
    if off_diagonal {
        LaurentScalar::zero()
    } else {
        LaurentScalar::one()
    }
}

/// ε(x_ij) = δ_ij extended multiplicatively.
pub fn counit(p: &NCPoly) -> LaurentScalar {
    p.terms()
        .fold(LaurentScalar::zero(), |acc, (m, c)| acc + c * &counit_monomial(m))
}

/// Element of the triple tensor product, normal-ordered per leg.
pub type Tensor3 = BTreeMap<[Monomial; 3], LaurentScalar>;

fn add3(t: &mut Tensor3, key: [Monomial; 3], c: LaurentScalar) {
    if c.is_zero() {
        return;
    }
    let slot = t.entry(key).or_default();
    *slot += &c;
    if slot.is_zero() {
        t.remove(&key);
    }
}

/// (Δ ⊗ id) t.
pub fn coproduct_left(t: &TensorNCPoly) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((a, b), c) in t.terms() {
        let da = coproduct(&NCPoly::monomial(*a, LaurentScalar::one()));
        for ((a1, a2), d) in da.terms() {
            add3(&mut out, [*a1, *a2, *b], c * d);
        }
    }
    out
}

/// (id ⊗ Δ) t.
pub fn coproduct_right(t: &TensorNCPoly) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((a, b), c) in t.terms() {
        let db = coproduct(&NCPoly::monomial(*b, LaurentScalar::one()));
        for ((b1, b2), d) in db.terms() {
            add3(&mut out, [*a, *b1, *b2], c * d);
        }
    }
    out
}

/// (ε ⊗ id) t.
pub fn counit_left(t: &TensorNCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for ((a, b), c) in t.terms() {
        out.add_term(*b, c * &counit_monomial(a));
    }
    out
}

/// (id ⊗ ε) t.
pub fn counit_right(t: &TensorNCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for ((a, b), c) in t.terms() {
        out.add_term(*a, c * &counit_monomial(b));
    }
    out
}

fn complement(i: usize) -> (usize, usize) {
    match i {
        1 => (2, 3),
        2 => (1, 3),
        3 => (1, 2),
        _ => panic!("index {i} out of range 1..=3"),
    }
}

/// ξ_ij: the quantum 2×2 minor on the rows and columns complementary to i, j.
pub fn quantum_minor(i: usize, j: usize) -> NCPoly {
    let (i1, i2) = complement(i);
    let (j1, j2) = complement(j);
    let mut r = Reducer::default();
    let mut out = r.reduce_word(&[Gen::new(i1, j1), Gen::new(i2, j2)]);
    let swapped = r.reduce_word(&[Gen::new(i1, j2), Gen::new(i2, j1)]);
    out.add_scaled(&swapped, &LaurentScalar::neg_q_pow(1));
    out
}

const PERMUTATIONS: [([usize; 3], i64); 6] = [
    ([1, 2, 3], 0),
    ([1, 3, 2], 1),
    ([2, 1, 3], 1),
    ([2, 3, 1], 2),
    ([3, 1, 2], 2),
    ([3, 2, 1], 3),
];

fn det_words() -> impl Iterator<Item = (LaurentScalar, Vec<Gen>)> {
    PERMUTATIONS.iter().map(|(s, len)| {
        (
            LaurentScalar::neg_q_pow(*len),
            (0..3).map(|r| Gen::new(r + 1, s[r])).collect(),
        )
    })
}

/// det_q = Σ_σ (−q)^{ℓ(σ)} x_{1σ(1)} x_{2σ(2)} x_{3σ(3)}.
pub fn quantum_det() -> NCPoly {
    let mut r = Reducer::default();
    let mut out = NCPoly::zero();
    for (c, w) in det_words() {
        out.add_scaled(&r.reduce_word(&w), &c);
    }
    out
}

/// S(x_ij) = (−q)^{i−j} ξ_ji.
pub fn antipode_generator(g: Gen) -> NCPoly {
    quantum_minor(g.col(), g.row()).scale(&LaurentScalar::neg_q_pow(g.row() as i64 - g.col() as i64))
}

/// Reversed-order product of per-letter images.
fn anti_extend(p: &NCPoly, image: impl Fn(Gen) -> NCPoly) -> NCPoly {
    let mut reducer = Reducer::default();
    let images: Vec<NCPoly> = Gen::all().map(&image).collect();
    let mut out = NCPoly::zero();
    for (m, c) in p.terms() {
        let prod = m
            .word()
            .iter()
            .rev()
            .fold(NCPoly::one(), |acc, &g| acc.mul_with(&images[g as usize], &mut reducer));
        out.add_scaled(&prod, c);
    }
    out
}

/// Anti-homomorphic extension of the generator antipode (the formal minor map).
pub fn antipode(p: &NCPoly) -> NCPoly {
    anti_extend(p, antipode_generator)
}

/// x_ij* = (−q)^{j−i} ξ_ij.
pub fn star_generator(i: usize, j: usize) -> NCPoly {
    quantum_minor(i, j).scale(&LaurentScalar::neg_q_pow(j as i64 - i as i64))
}

/// Conjugate-linear anti-homomorphic star for real q and rational coefficients.
pub fn star(p: &NCPoly) -> NCPoly {
    anti_extend(p, |g| star_generator(g.row(), g.col()))
}

/// A free-algebra element Σ c · word, kept unreduced.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(LaurentScalar, Vec<Gen>)>,
}

impl Relation {
    pub fn reduce(&self, reducer: &mut Reducer) -> NCPoly {
        let mut out = NCPoly::zero();
        for (c, w) in &self.terms {
            out.add_scaled(&reducer.reduce_word(w), c);
        }
        out
    }

    pub fn coproduct(&self, reducer: &mut Reducer) -> TensorNCPoly {
        let mut out = TensorNCPoly::zero();
        for (c, w) in &self.terms {
            out.add_scaled(&coproduct_word(w, reducer), c);
        }
        out
    }
}

/// All 36 index instances of the four relation families.
pub fn defining_relations() -> Vec<Relation> {
    let x = Gen::new;
    let one = LaurentScalar::one;
    let mut out = Vec::new();
    for i in 1..=3 {
        for j in i + 1..=3 {
            for k in 1..=3 {
                out.push(Relation {
                    name: format!("x{i}{k}x{j}{k}-q*x{j}{k}x{i}{k}"),
                    terms: vec![
                        (one(), vec![x(i, k), x(j, k)]),
                        (LaurentScalar::neg_q_pow(1), vec![x(j, k), x(i, k)]),
                    ],
                });
                out.push(Relation {
                    name: format!("x{k}{i}x{k}{j}-q*x{k}{j}x{k}{i}"),
                    terms: vec![
                        (one(), vec![x(k, i), x(k, j)]),
                        (LaurentScalar::neg_q_pow(1), vec![x(k, j), x(k, i)]),
                    ],
                });
            }
            for k in 1..=3 {
                for l in k + 1..=3 {
                    out.push(Relation {
                        name: format!("x{i}{l}x{j}{k}-x{j}{k}x{i}{l}"),
                        terms: vec![
                            (one(), vec![x(i, l), x(j, k)]),
                            (-one(), vec![x(j, k), x(i, l)]),
                        ],
                    });
                    out.push(Relation {
                        name: format!("x{i}{k}x{j}{l}-x{j}{l}x{i}{k}-(q-1/q)x{i}{l}x{j}{k}"),
                        terms: vec![
                            (one(), vec![x(i, k), x(j, l)]),
                            (-one(), vec![x(j, l), x(i, k)]),
                            (
                                LaurentScalar::q_pow(-1) - LaurentScalar::q_pow(1),
                                vec![x(i, l), x(j, k)],
                            ),
                        ],
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// det_q − 1 as a free-algebra element.
pub fn det_minus_one() -> Relation {
    let mut terms: Vec<_> = det_words().collect();
    terms.push((-LaurentScalar::one(), vec![]));
    Relation { name: "detq-1".into(), terms }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, j: usize) -> NCPoly {
        NCPoly::generator(Gen::new(i, j))
    }

    fn m(gs: &[(usize, usize)]) -> Monomial {
        Monomial::from_letters(&gs.iter().map(|&(i, j)| Gen::new(i, j).index()).collect::<Vec<_>>())
    }

    #[test]
    fn coproduct_of_x11() {
        let d = coproduct(&x(1, 1));
        let mut expect = TensorNCPoly::zero();
        for k in 1..=3 {
            expect.add_term(m(&[(1, k)]), m(&[(k, 1)]), LaurentScalar::one());
        }
        assert_eq!(d, expect);
        assert_eq!(coproduct(&NCPoly::one()), TensorNCPoly::one());
    }

    #[test]
    fn coproduct_of_square_matches_tensor_square() {
        // oracle: (Σ_k x1k⊗xk1)(Σ_l x1l⊗xl1) expanded termwise, each leg reduced
        let mut r = Reducer::default();
        let mut expect = TensorNCPoly::zero();
        for k in 1..=3 {
            for l in 1..=3 {
                let a = r.reduce_word(&[Gen::new(1, k), Gen::new(1, l)]);
                let b = r.reduce_word(&[Gen::new(k, 1), Gen::new(l, 1)]);
                expect.add_scaled(&TensorNCPoly::tensor(&a, &b), &LaurentScalar::one());
            }
        }
        assert_eq!(coproduct(&(&x(1, 1) * &x(1, 1))), expect);
    }

    #[test]
    fn counit_values() {
        assert!(counit(&x(1, 2)).is_zero());
        assert!(counit(&NCPoly::one()).is_one());
        assert!(counit(&(&x(2, 2) * &x(1, 1))).is_one());
    }

    #[test]
    fn minors() {
        let mut xi33 = NCPoly::monomial(m(&[(1, 1), (2, 2)]), LaurentScalar::one());
        xi33.add_term(m(&[(1, 2), (2, 1)]), LaurentScalar::neg_q_pow(1));
        assert_eq!(quantum_minor(3, 3), xi33);
        let mut xi11 = NCPoly::monomial(m(&[(2, 2), (3, 3)]), LaurentScalar::one());
        xi11.add_term(m(&[(2, 3), (3, 2)]), LaurentScalar::neg_q_pow(1));
        assert_eq!(quantum_minor(1, 1), xi11);
        for i in 1..=3 {
            for j in 1..=3 {
                assert!(quantum_minor(i, j).degrees().all(|d| d == 2));
            }
        }
    }

    #[test]
    fn determinant_terms() {
        let d = quantum_det();
        assert!(d.coeff(&m(&[(1, 1), (2, 2), (3, 3)])).is_one());
        assert_eq!(d.coeff(&m(&[(1, 3), (2, 2), (3, 1)])), LaurentScalar::neg_q_pow(3));
    }

    #[test]
    fn antipode_and_star_on_generators() {
        assert_eq!(antipode(&x(1, 2)), quantum_minor(2, 1).scale(&LaurentScalar::neg_q_pow(-1)));
        assert_eq!(antipode(&NCPoly::one()), NCPoly::one());
        assert_eq!(star_generator(1, 1), quantum_minor(1, 1));
        assert_eq!(star_generator(1, 3), quantum_minor(1, 3).scale(&LaurentScalar::q_pow(2)));
        assert_eq!(star(&x(2, 3)), star_generator(2, 3));
    }

    #[test]
    fn hexagon_both_orders() {
        let det = quantum_det();
        for i in 1..=3 {
            for j in 1..=3 {
                let mut left = NCPoly::zero();
                let mut right = NCPoly::zero();
                for k in 1..=3 {
                    left = &left + &(&x(i, k) * &antipode(&x(k, j)));
                    right = &right + &(&antipode(&x(i, k)) * &x(k, j));
                }
                let expect = if i == j { det.clone() } else { NCPoly::zero() };
                assert_eq!(left, expect, "({i},{j})");
                assert_eq!(right, expect, "({i},{j})");
            }
        }
    }

    #[test]
    fn coassociative_and_counital_on_generators() {
        for g in Gen::all() {
            let d = coproduct(&NCPoly::generator(g));
            assert_eq!(coproduct_left(&d), coproduct_right(&d));
            assert_eq!(counit_left(&d), NCPoly::generator(g));
            assert_eq!(counit_right(&d), NCPoly::generator(g));
        }
    }

    #[test]
    fn coproduct_respects_relations() {
        let mut r = Reducer::default();
        for rel in defining_relations() {
            assert!(rel.coproduct(&mut r).is_zero(), "{}", rel.name);
        }
    }

    #[test]
    fn relations_reduce_to_zero() {
        let rels = defining_relations();
        assert_eq!(rels.len(), 36);
        let mut r = Reducer::default();
        for rel in &rels {
            assert!(rel.reduce(&mut r).is_zero(), "{}", rel.name);
        }
        assert_eq!(det_minus_one().reduce(&mut r), &quantum_det() - &NCPoly::one());
    }
}
