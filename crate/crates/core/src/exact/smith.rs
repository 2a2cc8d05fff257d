//! Invariant factors of a square rational matrix.
//!
//! Computed as the Smith normal form of `xI - m` over the euclidean ring
//! Q[x]. The resulting non-unit diagonal entries d_1 | d_2 | ... | d_k are a
//! complete similarity invariant (they determine the Jordan form without
//! leaving the rationals), with product equal to the characteristic
//! polynomial.

use super::matrix::{Matrix, ShapeError};
use super::unipoly::UniPoly;

/// Ordered invariant factor list of `xI - m`, monic, each dividing the next,
/// units (constant factors) dropped.
pub fn invariant_factors(m: &Matrix) -> Result<Vec<UniPoly>, ShapeError> {
    if !m.is_square() {
        return Err(ShapeError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let mut work: Vec<Vec<UniPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let entry = UniPoly::constant(-m.get(r, c).clone());
                    if r == c {
                        entry.add(&UniPoly::from_coeffs(vec![
                            super::rational::rzero(),
                            super::rational::rone(),
                        ]))
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();

    let mut diagonal = Vec::new();
    let mut top = 0;
    while top < n {
        if !pivot_to_top(&mut work, top, n) {
            // Remaining block is zero; over Q[x] this cannot happen for
            // xI - m, but keep the loop total.
            break;
        }
        loop {
            reduce_column(&mut work, top, n);
            reduce_row(&mut work, top, n);
            if column_cleared(&work, top, n) && row_cleared(&work, top, n) {
                // Pivot must also divide the rest of the submatrix for the
                // divisibility chain; if not, fold an offending row in and
                // continue reducing.
                match find_nondivisible(&work, top, n) {
                    None => break,
                    Some(r) => {
                        for c in top..n {
                            let add = work[r][c].clone();
                            work[top][c] = work[top][c].add(&add);
                        }
                    }
                }
            }
        }
        diagonal.push(work[top][top].monic());
        top += 1;
    }
    Ok(diagonal.into_iter().filter(|d| !d.is_one()).collect())
}

/// Two square matrices are similar iff their invariant factor lists agree.
pub fn similar(a: &Matrix, b: &Matrix) -> Result<bool, ShapeError> {
    Ok(invariant_factors(a)? == invariant_factors(b)?)
}

fn pivot_to_top(work: &mut [Vec<UniPoly>], top: usize, n: usize) -> bool {
    let mut best: Option<(usize, usize, usize)> = None;
    for r in top..n {
        for c in top..n {
            if let Some(d) = work[r][c].degree() {
                if best.map_or(true, |(bd, _, _)| d < bd) {
                    best = Some((d, r, c));
                }
            }
        }
    }
    let Some((_, r, c)) = best else { return false };
    work.swap(top, r);
    for row in work.iter_mut() {
        row.swap(top, c);
    }
    true
}

fn reduce_column(work: &mut [Vec<UniPoly>], top: usize, n: usize) {
    loop {
        let mut changed = false;
        for r in top + 1..n {
            if work[r][top].is_zero() {
                continue;
            }
            let (q, rem) = work[r][top].div_rem(&work[top][top]);
            for c in top..n {
                let sub = q.mul(&work[top][c]);
                work[r][c] = work[r][c].sub(&sub);
            }
            if !rem.is_zero() {
                // Remainder has lower degree; promote it to the pivot.
                work.swap(top, r);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

fn reduce_row(work: &mut [Vec<UniPoly>], top: usize, n: usize) {
    loop {
        let mut changed = false;
        for c in top + 1..n {
            if work[top][c].is_zero() {
                continue;
            }
            let (q, rem) = work[top][c].div_rem(&work[top][top]);
            for row in work.iter_mut().take(n).skip(top) {
                let sub = q.mul(&row[top]);
                row[c] = row[c].sub(&sub);
            }
            if !rem.is_zero() {
                for row in work.iter_mut().take(n).skip(top) {
                    row.swap(top, c);
                }
                changed = true;
            }
        }
        if !changed {
            break;
        } else {
            reduce_column(work, top, n);
        }
    }
}

fn column_cleared(work: &[Vec<UniPoly>], top: usize, n: usize) -> bool {
    (top + 1..n).all(|r| work[r][top].is_zero())
}

fn row_cleared(work: &[Vec<UniPoly>], top: usize, n: usize) -> bool {
    (top + 1..n).all(|c| work[top][c].is_zero())
}

fn find_nondivisible(work: &[Vec<UniPoly>], top: usize, n: usize) -> Option<usize> {
    let pivot = &work[top][top];
    for r in top + 1..n {
        for c in top + 1..n {
            if !pivot.divides(&work[r][c]) {
                return Some(r);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::rational::rint;
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rint(c)).collect())
    }

    #[test]
    fn identity_two_by_two() {
        let f = invariant_factors(&Matrix::identity(2)).unwrap();
        assert_eq!(f, vec![p(&[-1, 1]), p(&[-1, 1])]);
    }

    #[test]
    fn jordan_block() {
        // minimal polynomial (x-1)^2 computed by hand
        let f = invariant_factors(&Matrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(f, vec![p(&[1, -2, 1])]);
    }

    #[test]
    fn swap_matrix_is_cyclic() {
        // e1 is a cyclic vector, so a single factor x^2 - 1
        let f = invariant_factors(&Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(f, vec![p(&[-1, 0, 1])]);
    }

    #[test]
    fn divisibility_chain_and_charpoly() {
        let m = Matrix::from_i64(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let f = invariant_factors(&m).unwrap();
        assert_eq!(f, vec![p(&[-2, 1]), p(&[6, -5, 1])]);
        for w in f.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
        let product = f.iter().fold(p(&[1]), |acc, d| acc.mul(d));
        // characteristic polynomial (x-2)^2 (x-3)
        assert_eq!(product, p(&[-12, 16, -7, 1]));
    }

    #[test]
    fn similarity_detects_conjugates() {
        let m = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let phi = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let conj = phi
            .mul(&m)
            .unwrap()
            .mul(&phi.inverse().unwrap().unwrap())
            .unwrap();
        assert!(similar(&m, &conj).unwrap());
        assert!(!similar(&m, &Matrix::identity(2)).unwrap());
    }
}
