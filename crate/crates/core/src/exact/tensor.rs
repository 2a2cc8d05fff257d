//! Cubic arrays of rationals.
//!
//! `Tensor3` stores the structure constants of a bilinear multiplication
//! (`C[i][j][k]` = coefficient of `e_k` in `e_i * e_j`) or, transposed in
//! role, of a comultiplication (`D[i][j][k]` = coefficient of `e_j (x) e_k`
//! in the image of `e_i`).

use super::rational::{rzero, Rational};
use num::Zero;

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    entries: Vec<Rational>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 {
            dim,
            entries: vec![rzero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        self.entries[(i * self.dim + j) * self.dim + k] = v;
    }

    /// The vector slot `(i, j, .)`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Rational] {
        let base = (i * self.dim + j) * self.dim;
        &self.entries[base..base + self.dim]
    }

    pub fn set_fiber(&mut self, i: usize, j: usize, v: &[Rational]) {
        assert_eq!(v.len(), self.dim);
        let base = (i * self.dim + j) * self.dim;
        self.entries[base..base + self.dim].clone_from_slice(v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        let n = self.dim;
        self.entries.iter().enumerate().filter_map(move |(idx, v)| {
            if v.is_zero() {
                None
            } else {
                let k = idx % n;
                let j = (idx / n) % n;
                let i = idx / (n * n);
                Some((i, j, k, v))
            }
        })
    }
}

impl std::fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tensor3(dim {}) {{", self.dim)?;
        for (i, j, k, v) in self.iter_nonzero() {
            write!(
                f,
                " [{i}][{j}][{k}]={}",
                super::rational::format_rational(v)
            )?;
        }
        write!(f, " }}")
    }
}
