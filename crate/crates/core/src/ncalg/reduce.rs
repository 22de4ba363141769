//! Oriented rewrite system for M_q(3) toward row-major monomial order.

use std::collections::HashMap;

use super::poly::{Gen, Monomial, NCPoly};
use crate::qscalar::LaurentScalar;

/// Which out-of-order adjacent pair to rewrite first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    LeftmostFirst,
    RightmostFirst,
}

/// Memoizing normal-order reducer over words of generator indices.
#[derive(Debug, Default)]
pub struct Reducer {
    strategy: Strategy,
    memo: HashMap<Vec<u8>, NCPoly>,
}

/// One rewrite of an out-of-order pair `a b` (a > b in row-major order).
fn rewrite_pair(a: u8, b: u8) -> Vec<(LaurentScalar, [u8; 2])> {
    let (ga, gb) = (Gen::from_index(a), Gen::from_index(b));
    let (r1, c1, r2, c2) = (ga.row(), ga.col(), gb.row(), gb.col());
    if r1 == r2 || c1 == c2 {
        vec![(LaurentScalar::q_pow(-1), [b, a])]
    } else if c1 < c2 {
        vec![(LaurentScalar::one(), [b, a])]
    } else {
        // x_jl x_ik = x_ik x_jl − (q − q⁻¹) x_il x_jk
        let il = Gen::new(r2, c1).index();
        let jk = Gen::new(r1, c2).index();
        let cross = LaurentScalar::q_pow(-1) - LaurentScalar::q_pow(1);
        vec![(LaurentScalar::one(), [b, a]), (cross, [il, jk])]
    }
}

impl Reducer {
    pub fn new(strategy: Strategy) -> Self {
        Self { strategy, memo: HashMap::new() }
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    fn descent(&self, w: &[u8]) -> Option<usize> {
        let mut it = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
        match self.strategy {
            Strategy::LeftmostFirst => it.next(),
            Strategy::RightmostFirst => it.next_back(),
        }
    }

    /// Normal form of the product of the letters of `w`.
    pub fn reduce(&mut self, w: &[u8]) -> NCPoly {
        if let Some(p) = self.memo.get(w) {
            return p.clone();
        }
        let out = match self.descent(w) {
            None => NCPoly::monomial(Monomial::from_letters(w), LaurentScalar::one()),
            Some(i) => {
                let mut acc = NCPoly::zero();
                let mut next = w.to_vec();
                for (c, pair) in rewrite_pair(w[i], w[i + 1]) {
                    next[i] = pair[0];
                    next[i + 1] = pair[1];
                    let sub = self.reduce(&next);
                    acc.add_scaled(&sub, &c);
                }
                acc
            }
        };
        self.memo.insert(w.to_vec(), out.clone());
        out
    }

    pub fn reduce_word(&mut self, word: &[Gen]) -> NCPoly {
        let letters: Vec<u8> = word.iter().map(|g| g.index()).collect();
        self.reduce(&letters)
    }
}
