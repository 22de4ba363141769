//! Column-stored sparse complex operators on a flat truncated basis.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;

/// Sparse vector: flat basis index → amplitude.
pub type SparseVec = BTreeMap<usize, Complex64>;

/// Square sparse matrix stored by columns, each column sorted by row.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOperator {
    dim: usize,
    cols: Vec<Vec<(usize, Complex64)>>,
}

fn normalize(mut col: Vec<(usize, Complex64)>) -> Vec<(usize, Complex64)> {
    col.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, Complex64)> = Vec::with_capacity(col.len());
    for (r, z) in col {
        match out.last_mut() {
            Some(last) if last.0 == r => last.1 += z,
            _ => out.push((r, z)),
        }
    }
    out.retain(|e| e.1 != Complex64::new(0.0, 0.0));
    out
}

impl SparseOperator {
    pub fn zero(dim: usize) -> Self {
        Self { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self { dim, cols: (0..dim).map(|c| vec![(c, Complex64::new(1.0, 0.0))]).collect() }
    }

    /// Builds from per-column entry lists; duplicates are summed, exact zeros dropped.
    pub fn from_columns(dim: usize, cols: Vec<Vec<(usize, Complex64)>>) -> Self {
        assert_eq!(cols.len(), dim, "one entry list per column");
        Self { dim, cols: cols.into_iter().map(normalize).collect() }
    }

    pub fn from_vectors(dim: usize, cols: Vec<SparseVec>) -> Self {
        Self::from_columns(dim, cols.into_iter().map(|v| v.into_iter().collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, Complex64)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        let col = &self.cols[c];
        col.binary_search_by_key(&r, |e| e.0).map_or(Complex64::new(0.0, 0.0), |i| col[i].1)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&c, &a) in v {
            for &(r, z) in &self.cols[c] {
                *out.entry(r).or_default() += z * a;
            }
        }
        out
    }

    pub fn apply_basis(&self, c: usize) -> SparseVec {
        self.cols[c].iter().copied().collect()
    }

    /// self ∘ rhs
    pub fn compose(&self, rhs: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, rhs.dim);
        let cols = rhs
            .cols
            .par_iter()
            .map(|col| {
                let mut acc = Vec::new();
                for &(k, b) in col {
                    acc.extend(self.cols[k].iter().map(|&(r, a)| (r, a * b)));
                }
                normalize(acc)
            })
            .collect();
        Self { dim: self.dim, cols }
    }

    pub fn add(&self, rhs: &SparseOperator) -> SparseOperator {
        self.add_scaled(rhs, Complex64::new(1.0, 0.0))
    }

    pub fn add_scaled(&self, rhs: &SparseOperator, s: Complex64) -> SparseOperator {
        assert_eq!(self.dim, rhs.dim);
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| normalize(a.iter().copied().chain(b.iter().map(|&(r, z)| (r, z * s))).collect()))
            .collect();
        Self { dim: self.dim, cols }
    }

    pub fn scale(&self, s: Complex64) -> SparseOperator {
        let cols = self.cols.iter().map(|c| normalize(c.iter().map(|&(r, z)| (r, z * s)).collect())).collect();
        Self { dim: self.dim, cols }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> SparseOperator {
        let mut cols = vec![Vec::new(); self.dim];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, z) in col {
                cols[r].push((c, z.conj()));
            }
        }
        for col in &mut cols {
            col.sort_by_key(|e| e.0);
        }
        Self { dim: self.dim, cols }
    }

    /// Kronecker product; `self` acts on the more significant index.
    pub fn kron(&self, rhs: &SparseOperator) -> SparseOperator {
        let d = self.dim * rhs.dim;
        let mut cols = Vec::with_capacity(d);
        for a in &self.cols {
            for b in &rhs.cols {
                let col = a
                    .iter()
                    .flat_map(|&(ra, za)| b.iter().map(move |&(rb, zb)| (ra * rhs.dim + rb, za * zb)))
                    .collect();
                cols.push(col);
            }
        }
        Self { dim: d, cols }
    }

    /// max |self − other| over entries (r, c) with c in `cols` and `keep(r)`.
    pub fn deviation_on<I, F>(&self, other: &SparseOperator, cols: I, keep: F) -> f64
    where
        I: IntoIterator<Item = usize>,
        F: Fn(usize) -> bool,
    {
        let mut worst = 0.0_f64;
        for c in cols {
            let mut diff: SparseVec = self.apply_basis(c);
            for &(r, z) in other.column(c) {
                *diff.entry(r).or_default() -= z;
            }
            for (r, z) in diff {
                if keep(r) {
                    worst = worst.max(z.norm());
                }
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sample() -> SparseOperator {
        SparseOperator::from_columns(
            3,
            vec![vec![(0, c(1.0, 2.0)), (2, c(0.5, 0.0))], vec![(1, c(0.0, -1.0))], vec![(0, c(3.0, 0.0))]],
        )
    }

    #[test]
    fn adjoint_of_identity_and_involution() {
        let id = SparseOperator::identity(4);
        assert_eq!(id.adjoint(), id);
        let a = sample();
        assert_eq!(a.adjoint().adjoint(), a);
        assert_eq!(a.adjoint().get(0, 2), c(0.5, 0.0));
        assert_eq!(a.adjoint().get(0, 0), c(1.0, -2.0));
    }

    #[test]
    fn compose_matches_dense_product() {
        let a = sample();
        let b = a.adjoint();
        let ab = a.compose(&b);
        for r in 0..3 {
            for col in 0..3 {
                let want: Complex64 = (0..3).map(|k| a.get(r, k) * b.get(k, col)).sum();
                assert!((ab.get(r, col) - want).norm() < 1e-15);
            }
        }
        assert_eq!(a.compose(&SparseOperator::identity(3)), a);
    }

    #[test]
    fn kron_indexing() {
        let a = sample();
        let id = SparseOperator::identity(2);
        let k = a.kron(&id);
        assert_eq!(k.dim(), 6);
        assert_eq!(k.get(2 * 2 + 1, 1), c(0.5, 0.0));
        assert_eq!(k.get(1, 4 + 1), c(3.0, 0.0));
        assert_eq!(k.get(1, 4), c(0.0, 0.0));
        assert_eq!(id.kron(&a).get(3 + 2, 3), c(0.5, 0.0));
    }

    #[test]
    fn add_cancels_to_empty() {
        let a = sample();
        let z = a.add_scaled(&a, c(-1.0, 0.0));
        assert_eq!(z.nnz(), 0);
        assert_eq!(a.deviation_on(&a.scale(c(1.0, 0.0)), 0..3, |_| true), 0.0);
    }
}
