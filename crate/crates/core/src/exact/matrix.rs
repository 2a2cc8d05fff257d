//! Dense exact matrices over the rationals.
//!
//! Row-major storage. Determinants use fraction-free Bareiss elimination,
//! inverses Gauss-Jordan with exact pivoting; both are immune to rounding by
//! construction. Kernel/solve routines return reduced-echelon data so that
//! nullspace bases have the identity pattern on free coordinates (relied on
//! by the isomorphism witness search).

use super::rational::{format_rational, rone, rzero, Rational};
use num::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("expected a square matrix, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("dimension mismatch: {0}")]
    Mismatch(String),
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![rzero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, rone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ShapeError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(ShapeError::Mismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer literal rows, mostly for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::rational::rint(x)).collect())
                .collect(),
        )
        .expect("literal rows must be rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, ShapeError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ShapeError::Mismatch("add of unequal shapes".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, ShapeError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ShapeError::Mismatch("sub of unequal shapes".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e *= s;
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, ShapeError> {
        if self.cols != other.rows {
            return Err(ShapeError::Mismatch(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c).clone();
                        out.set(r, c, cur + a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Column-convention application: the image of the coordinate vector `v`,
    /// i.e. `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, ShapeError> {
        if v.len() != self.cols {
            return Err(ShapeError::Mismatch(format!(
                "apply {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![rzero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if !a.is_zero() && !v[c].is_zero() {
                    out[r] += a * &v[c];
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    /// Exact determinant via fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Rational, ShapeError> {
        if !self.is_square() {
            return Err(ShapeError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(rone());
        }
        // Clear denominators first so Bareiss works over the integers.
        let mut denom_scale = rone();
        let mut work: Vec<Vec<Rational>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        for row in work.iter_mut() {
            let lcm = row
                .iter()
                .map(|e| e.denom().clone())
                .fold(num::BigInt::one(), num::integer::lcm);
            let lcm = Rational::from_integer(lcm);
            if !lcm.is_one() {
                for e in row.iter_mut() {
                    *e *= &lcm;
                }
                denom_scale *= lcm;
            }
        }
        let mut sign = rone();
        let mut prev = rone();
        for k in 0..n - 1 {
            if work[k][k].is_zero() {
                match (k + 1..n).find(|&r| !work[r][k].is_zero()) {
                    Some(r) => {
                        work.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(rzero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &work[i][j] * &work[k][k] - &work[i][k] * &work[k][j];
                    work[i][j] = num / &prev;
                }
                work[i][k] = rzero();
            }
            prev = work[k][k].clone();
        }
        Ok(sign * work[n - 1][n - 1].clone() / denom_scale)
    }

    /// Exact inverse via Gauss-Jordan; `None` signals a singular matrix,
    /// which is a normal outcome rather than an error.
    pub fn inverse(&self) -> Result<Option<Matrix>, ShapeError> {
        if !self.is_square() {
            return Err(ShapeError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, rone());
        }
        let (rank, _) = aug.rref_in_place(n);
        if rank < n {
            return Ok(None);
        }
        let mut inv = Matrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Ok(Some(inv))
    }

    /// Reduced row echelon form in place, pivoting only in the first
    /// `pivot_cols` columns. Returns (rank, pivot column list).
    pub fn rref_in_place(&mut self, pivot_cols: usize) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols.min(self.cols) {
            let pivot_row = (row..self.rows).find(|&r| !self.get(r, col).is_zero());
            let Some(p) = pivot_row else { continue };
            self.swap_rows(row, p);
            let inv = {
                let pv = self.get(row, col).clone();
                rone() / pv
            };
            for c in 0..self.cols {
                let v = self.get(row, c).clone() * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in 0..self.cols {
                        let v = self.get(r, c).clone() - &factor * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        (row, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place(work.cols).0
    }

    /// Basis of the right nullspace in reduced-echelon convention: basis
    /// vector `i` has a 1 at the i-th free column and 0 at the other free
    /// columns, so coordinates of any kernel element with respect to this
    /// basis are simply its values at the free columns.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut work = self.clone();
        let (_, pivots) = work.rref_in_place(work.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![rzero(); self.cols];
            v[f] = rone();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = -work.get(pr, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = rhs`. Returns `None` when inconsistent, otherwise
    /// the canonical particular solution (free variables zeroed) together
    /// with a nullspace basis of the homogeneous system.
    #[allow(clippy::type_complexity)]
    pub fn solve(&self, rhs: &[Rational]) -> Result<Option<(Vec<Rational>, Vec<Vec<Rational>>)>, ShapeError> {
        if rhs.len() != self.rows {
            return Err(ShapeError::Mismatch(format!(
                "solve: {} rows but rhs length {}",
                self.rows,
                rhs.len()
            )));
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let (rank, pivots) = aug.rref_in_place(self.cols);
        for r in rank..self.rows {
            if !aug.get(r, self.cols).is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![rzero(); self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(pr, self.cols).clone();
        }
        Ok(Some((x, self.nullspace())))
    }

    /// True when `v` lies in the column span of `self`.
    pub fn spans(&self, v: &[Rational]) -> Result<bool, ShapeError> {
        Ok(self.solve(v)?.is_some())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Coordinate-vector helpers shared by the structure modules.
pub mod vec_ops {
    use super::super::rational::{rone, rzero, Rational};
    use num::Zero;

    pub fn zero(n: usize) -> Vec<Rational> {
        vec![rzero(); n]
    }

    pub fn basis(n: usize, i: usize) -> Vec<Rational> {
        let mut v = zero(n);
        v[i] = rone();
        v
    }

    pub fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(|x| x.is_zero())
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
        a.iter().map(|x| x * s).collect()
    }

    pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
        a.iter().zip(b).map(|(x, y)| x * y).fold(rzero(), |s, t| s + t)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{rat, rint};
    use super::*;

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::identity(2).det().unwrap(), rint(1));
        assert_eq!(Matrix::from_i64(&[&[0, 1], &[1, 0]]).det().unwrap(), rint(-1));
        // cofactor expansion by hand: 1*1 - 1*0 = 1
        assert_eq!(Matrix::from_i64(&[&[1, 1], &[0, 1]]).det().unwrap(), rint(1));
        assert!(Matrix::zero(2, 3).det().is_err());
    }

    #[test]
    fn det_rational_entries() {
        let m = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ])
        .unwrap();
        // 1/10 - 1/12 = 1/60
        assert_eq!(m.det().unwrap(), rat(1, 60));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            Matrix::identity(3).inverse().unwrap().unwrap(),
            Matrix::identity(3)
        );
        // solve the 2x2 system by hand
        let m = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(inv, Matrix::from_i64(&[&[1, -1], &[0, 1]]));
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        // rank 1
        assert!(Matrix::from_i64(&[&[1, 1], &[1, 1]]).inverse().unwrap().is_none());
    }

    #[test]
    fn nullspace_reduced_echelon_pattern() {
        // x + y + z = 0 has free columns 1 and 2.
        let m = Matrix::from_i64(&[&[1, 1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        assert_eq!(ns[0], vec![rint(-1), rint(1), rint(0)]);
        assert_eq!(ns[1], vec![rint(-1), rint(0), rint(1)]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert!(m.solve(&[rint(1), rint(3)]).unwrap().is_none());
        let (x, ns) = m.solve(&[rint(1), rint(2)]).unwrap().unwrap();
        assert_eq!(x, vec![rint(1), rint(0)]);
        assert_eq!(ns.len(), 1);
    }

    #[test]
    fn zero_dimensional_matrices() {
        let m = Matrix::zero(0, 0);
        assert_eq!(m.det().unwrap(), rint(1));
        assert_eq!(m.inverse().unwrap().unwrap(), m);
    }
}
