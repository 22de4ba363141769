//! Truncated tensor-product Fock space and its safe windows.

use crate::{QError, QResult};

/// `legs` copies of span{|0⟩, …, |K−1⟩}; leg 0 is the most significant flat digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedSpace {
    legs: usize,
    dim: usize,
}

impl TruncatedSpace {
    pub fn new(legs: usize, dim: usize) -> Self {
        assert!(legs > 0 && dim > 0, "space needs at least one leg and one state");
        Self { legs, dim }
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    /// Truncation K per leg.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn total(&self) -> usize {
        self.dim.pow(self.legs as u32)
    }

    pub fn flat(&self, state: &[usize]) -> usize {
        debug_assert_eq!(state.len(), self.legs);
        state.iter().fold(0, |acc, &k| acc * self.dim + k)
    }

    pub fn state(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.legs];
        for slot in out.iter_mut().rev() {
            *slot = idx % self.dim;
            idx /= self.dim;
        }
        out
    }

    /// Per-leg range [N, K − N) on which degree-N operators are exact.
    pub fn window(&self, degree: usize) -> (usize, usize) {
        (degree, self.dim.saturating_sub(degree))
    }

    pub fn in_window(&self, idx: usize, degree: usize) -> bool {
        let (lo, hi) = self.window(degree);
        self.state(idx).iter().all(|&k| (lo..hi).contains(&k))
    }

    /// Flat indices of every state in the safe window, ascending.
    pub fn window_states(&self, degree: usize) -> Vec<usize> {
        (0..self.total()).filter(|&i| self.in_window(i, degree)).collect()
    }

    /// Flat index of `state`, provided it has the right arity and lies in the window.
    pub fn checked_flat(&self, state: &[usize], degree: usize) -> QResult<usize> {
        if state.len() != self.legs {
            return Err(QError::OutOfRange(format!(
                "state has {} entries, word has {} legs",
                state.len(),
                self.legs
            )));
        }
        let (lo, hi) = self.window(degree);
        if state.iter().any(|&k| !(lo..hi).contains(&k)) {
            return Err(QError::OutsideWindow { state: state.to_vec(), lo, hi });
        }
        Ok(self.flat(state))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_round_trip() {
        let s = TruncatedSpace::new(3, 5);
        assert_eq!(s.total(), 125);
        for i in 0..s.total() {
            assert_eq!(s.flat(&s.state(i)), i);
        }
        assert_eq!(s.flat(&[1, 2, 3]), 38);
    }

    #[test]
    fn window_bookkeeping() {
        let s = TruncatedSpace::new(2, 6);
        assert_eq!(s.window_states(2).len(), 4);
        assert_eq!(s.window_states(0).len(), 36);
        assert!(s.checked_flat(&[2, 3], 2).is_ok());
        assert_eq!(
            s.checked_flat(&[1, 3], 2),
            Err(QError::OutsideWindow { state: vec![1, 3], lo: 2, hi: 4 })
        );
        assert!(s.checked_flat(&[2], 2).is_err());
    }
}
