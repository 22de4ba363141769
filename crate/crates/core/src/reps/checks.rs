//! Window-restricted identities of the representations.

use num_complex::Complex64;
use rayon::prelude::*;

use super::operator::{SparseOperator, SparseVec};
use super::word::{basis, WordRep};
use crate::corep::{t_element, MultiIndex3};
use crate::ncalg::{multiply, star_generator, Gen, NCPoly, Relation};
use crate::QResult;

fn max_on_window(v: &SparseVec, rep: &WordRep, degree: usize) -> f64 {
    let space = rep.space();
    v.iter().filter(|(i, _)| space.in_window(**i, degree)).map(|(_, z)| z.norm()).fold(0.0, f64::max)
}

fn degree_of(rel: &Relation) -> usize {
    rel.terms.iter().map(|(_, w)| w.len()).max().unwrap_or(0)
}

/// max over window states of |π_w(r)|x⟩|, for a relation of degree d on the degree-d window.
pub fn relation_defect(rep: &WordRep, rel: &Relation) -> f64 {
    let d = degree_of(rel);
    rep.space()
        .window_states(d)
        .into_par_iter()
        .map(|x| {
            let img = rep.apply_relation(rel, &basis(x));
            img.values().map(|z| z.norm()).fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max)
}

/// max |π_w(x_ij*) − π_w(x_ij)†| on the degree-2 window, over all generators.
pub fn star_defect(rep: &WordRep) -> f64 {
    let window = rep.space().window_states(2);
    Gen::all()
        .map(|g| {
            let adj = rep.generator(g).adjoint();
            let star = star_generator(g.row(), g.col());
            window
                .par_iter()
                .map(|&x| {
                    let mut diff = rep.apply_poly(&star, &basis(x));
                    for &(r, z) in adj.column(x) {
                        *diff.entry(r).or_default() -= z;
                    }
                    diff.values().map(|z| z.norm()).fold(0.0, f64::max)
                })
                .reduce(|| 0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

/// max |π_w(p·r) − π_w(p)π_w(r)| on the window of degree deg p + deg r.
pub fn homomorphy_defect(rep: &WordRep, p: &NCPoly, r: &NCPoly) -> f64 {
    let deg = |x: &NCPoly| x.degrees().max().unwrap_or(0) as usize;
    let d = deg(p) + deg(r);
    let pr = multiply(p, r);
    rep.space()
        .window_states(d)
        .into_par_iter()
        .map(|x| {
            let e = basis(x);
            let mut diff = rep.apply_poly(&pr, &e);
            for (i, z) in rep.apply_poly(p, &rep.apply_poly(r, &e)) {
                *diff.entry(i).or_default() -= z;
            }
            max_on_window(&diff, rep, 0)
        })
        .reduce(|| 0.0, f64::max)
}

/// Truncated matrices π_w(t_{m,n}) for all |m| = |n| = N, in `all_at_level` order.
pub fn t_operators(rep: &WordRep, level: u32) -> QResult<Vec<Vec<SparseOperator>>> {
    let idx = MultiIndex3::all_at_level(level);
    idx.iter()
        .map(|&m| {
            idx.iter()
                .map(|&n| {
                    let t = t_element(m, n, rep.q())?;
                    Ok(rep.operator(&t.poly).scale(Complex64::new(t.factor, 0.0)))
                })
                .collect()
        })
        .collect()
}

fn sweep<'a, L, R>(rep: &WordRep, level: u32, size: usize, left: L, right: R) -> f64
where
    L: Fn(usize, usize, usize) -> &'a SparseOperator + Sync,
    R: Fn(usize, usize, usize) -> &'a SparseOperator + Sync,
{
    let d = level as usize;
    let window = rep.space().window_states(d);
    let pairs: Vec<(usize, usize)> = (0..size).flat_map(|a| (0..size).map(move |b| (a, b))).collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let mut worst = 0.0_f64;
            for &s in &window {
                let mut acc = SparseVec::new();
                for j in 0..size {
                    let mid = SparseVec::from_iter(right(a, b, j).column(s).iter().copied());
                    for (r, z) in left(a, b, j).apply(&mid) {
                        *acc.entry(r).or_default() += z;
                    }
                }
                if a == b {
                    *acc.entry(s).or_default() -= Complex64::new(1.0, 0.0);
                }
                worst = worst.max(max_on_window(&acc, rep, d));
            }
            worst
        })
        .reduce(|| 0.0, f64::max)
}

/// Deviation from the identity of Σ_n π(t_{m,n}) π(t_{p,n})† (first) and
/// Σ_m π(t_{m,n})† π(t_{m,p}) (second), over window-restricted matrix entries.
pub fn completeness_defect(rep: &WordRep, level: u32) -> QResult<(f64, f64)> {
    let ops = t_operators(rep, level)?;
    let adj: Vec<Vec<SparseOperator>> = ops.iter().map(|row| row.iter().map(|t| t.adjoint()).collect()).collect();
    let size = ops.len();
    let rows = sweep(rep, level, size, |a, _, j| &ops[a][j], |_, b, j| &adj[b][j]);
    let cols = sweep(rep, level, size, |a, _, j| &adj[j][a], |_, b, j| &ops[j][b]);
    Ok((rows, cols))
}
