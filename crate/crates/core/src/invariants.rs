//! Cheap isomorphism invariants.
//!
//! Every fingerprint field is unchanged under structure transport, so a
//! mismatch is a certificate of non-isomorphism. Equality never certifies
//! isomorphism (distinct catalog entries collide), which is why the decision
//! pipeline follows up with a witness search and an ideal-theoretic test.

use crate::algebra::BiHomAlgebra;
use crate::exact::{invariant_factors, Matrix, UniPoly};
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub alpha_invariant_factors: Vec<UniPoly>,
    pub beta_invariant_factors: Vec<UniPoly>,
    /// Rank of the product viewed as a linear map A (x) A -> A.
    pub mul_rank: usize,
    pub ann_left: usize,
    pub ann_right: usize,
    pub ann_two_sided: usize,
    pub commutative: bool,
    /// Solved from the unit laws, never read off the unit annotation.
    pub has_unit: bool,
}

pub fn fingerprint(a: &BiHomAlgebra) -> Fingerprint {
    let n = a.dim();
    let c = a.mul_tensor();

    let mut mul_map = Matrix::zero(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mul_map.set(i * n + j, k, c.get(i, j, k).clone());
            }
        }
    }

    // left annihilator {x : x * A = 0}: rows indexed by (j, k)
    let mut left = Matrix::zero(n * n, n);
    // right annihilator {x : A * x = 0}: rows indexed by (i, k)
    let mut right = Matrix::zero(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                left.set(j * n + k, i, c.get(i, j, k).clone());
                right.set(i * n + k, j, c.get(i, j, k).clone());
            }
        }
    }
    let ann_left = n - left.rank();
    let ann_right = n - right.rank();
    let mut both = Matrix::zero(2 * n * n, n);
    for r in 0..n * n {
        for col in 0..n {
            both.set(r, col, left.get(r, col).clone());
            both.set(n * n + r, col, right.get(r, col).clone());
        }
    }
    let ann_two_sided = n - both.rank();

    let commutative =
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| c.get(i, j, k) == c.get(j, i, k))));

    Fingerprint {
        dim: n,
        alpha_invariant_factors: invariant_factors(a.alpha()).expect("square twist"),
        beta_invariant_factors: invariant_factors(a.beta()).expect("square twist"),
        mul_rank: mul_map.rank(),
        ann_left,
        ann_right,
        ann_two_sided,
        commutative,
        has_unit: solve_for_unit(a).is_some(),
    }
}

/// Solves the linear system `x * e = alpha(x), e * x = beta(x)` over an
/// unknown vector e; unitality is a property of the structure, not an
/// annotation. Returns a canonical solution when one exists.
pub fn solve_for_unit(a: &BiHomAlgebra) -> Option<Vec<crate::exact::Rational>> {
    let n = a.dim();
    if n == 0 {
        return Some(Vec::new());
    }
    let c = a.mul_tensor();
    let mut rows = Matrix::zero(2 * n * n, n);
    let mut rhs = Vec::with_capacity(2 * n * n);
    let mut r = 0;
    for j in 0..n {
        for i in 0..n {
            // sum_k C[j][k][i] e_k = alpha[i][j]
            for k in 0..n {
                rows.set(r, k, c.get(j, k, i).clone());
            }
            rhs.push(a.alpha().get(i, j).clone());
            r += 1;
        }
    }
    for j in 0..n {
        for i in 0..n {
            // sum_k C[k][j][i] e_k = beta[i][j]
            for k in 0..n {
                rows.set(r, k, c.get(k, j, i).clone());
            }
            rhs.push(a.beta().get(i, j).clone());
            r += 1;
        }
    }
    rows.solve(&rhs).expect("shapes agree").map(|(x, _)| x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FingerprintMismatch {
    pub field: &'static str,
    pub left: String,
    pub right: String,
}

fn poly_list(fs: &[UniPoly]) -> String {
    let items: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
    format!("[{}]", items.join(", "))
}

/// First differing fingerprint field in a fixed order, or `None` when the
/// fingerprints agree (which decides nothing by itself).
pub fn fingerprints_distinguish(
    a: &BiHomAlgebra,
    b: &BiHomAlgebra,
) -> Option<FingerprintMismatch> {
    distinguish(&fingerprint(a), &fingerprint(b))
}

pub fn distinguish(fa: &Fingerprint, fb: &Fingerprint) -> Option<FingerprintMismatch> {
    let mismatch =
        |field, left: String, right: String| Some(FingerprintMismatch { field, left, right });
    if fa.dim != fb.dim {
        return mismatch("dim", fa.dim.to_string(), fb.dim.to_string());
    }
    if fa.alpha_invariant_factors != fb.alpha_invariant_factors {
        return mismatch(
            "alpha_invariant_factors",
            poly_list(&fa.alpha_invariant_factors),
            poly_list(&fb.alpha_invariant_factors),
        );
    }
    if fa.beta_invariant_factors != fb.beta_invariant_factors {
        return mismatch(
            "beta_invariant_factors",
            poly_list(&fa.beta_invariant_factors),
            poly_list(&fb.beta_invariant_factors),
        );
    }
    if fa.mul_rank != fb.mul_rank {
        return mismatch("mul_rank", fa.mul_rank.to_string(), fb.mul_rank.to_string());
    }
    if fa.ann_left != fb.ann_left {
        return mismatch("ann_left", fa.ann_left.to_string(), fb.ann_left.to_string());
    }
    if fa.ann_right != fb.ann_right {
        return mismatch(
            "ann_right",
            fa.ann_right.to_string(),
            fb.ann_right.to_string(),
        );
    }
    if fa.ann_two_sided != fb.ann_two_sided {
        return mismatch(
            "ann_two_sided",
            fa.ann_two_sided.to_string(),
            fb.ann_two_sided.to_string(),
        );
    }
    if fa.commutative != fb.commutative {
        return mismatch(
            "commutative",
            fa.commutative.to_string(),
            fb.commutative.to_string(),
        );
    }
    if fa.has_unit != fb.has_unit {
        return mismatch("has_unit", fa.has_unit.to_string(), fb.has_unit.to_string());
    }
    None
}

/// Annihilator membership, mostly for tests: true when `x * A = 0`.
pub fn in_left_annihilator(a: &BiHomAlgebra, x: &[crate::exact::Rational]) -> bool {
    let n = a.dim();
    (0..n).all(|j| {
        let ej = crate::exact::vec_ops::basis(n, j);
        a.eval_mul(x, &ej)
            .map(|v| v.iter().all(|c| c.is_zero()))
            .unwrap_or(false)
    })
}
