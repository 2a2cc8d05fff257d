//! Exhaustive comultiplication search over a coefficient grid.
//!
//! For a fixed algebra and twist pair, every comultiplication tensor with
//! entries from the grid (and a sparsity cap per basis image) is tested for
//! the coalgebra axioms and the bialgebra compatibility relations; the
//! survivors come back as bialgebras in a deterministic order. The search
//! space is estimated up front and a cap overrun is a refusal carrying the
//! estimate.

use crate::algebra::BiHomAlgebra;
use crate::bialgebra::BiHomBialgebra;
use crate::coalgebra::BiHomCoalgebra;
use crate::exact::{rone, rzero, Matrix, Rational, Tensor3};
use num::Zero;

use super::PolysysError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComulSearchConfig {
    /// Coefficient values tried in each tensor slot (zero is implicit).
    pub grid: Vec<Rational>,
    /// Maximum number of nonzero coefficients in each comul(e_i).
    pub max_nonzero_per_image: usize,
    /// Refusal threshold on the candidate count.
    pub candidate_cap: u64,
    /// When set, only candidates admitting a counit (solved for, then
    /// verified) are returned, with the counit attached.
    pub require_counital: bool,
}

impl Default for ComulSearchConfig {
    fn default() -> Self {
        ComulSearchConfig {
            grid: (-2..=2).map(crate::exact::rint).collect(),
            max_nonzero_per_image: 2,
            candidate_cap: 250_000,
            require_counital: false,
        }
    }
}

/// Candidate images for one basis element: sparse patterns over the n^2
/// tensor slots with at most `max_nonzero` nonzero grid values.
fn images_for_one_index(
    n: usize,
    values: &[Rational],
    max_nonzero: usize,
) -> Vec<Vec<(usize, Rational)>> {
    let slots = n * n;
    let mut out: Vec<Vec<(usize, Rational)>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<(usize, Rational)>> = vec![Vec::new()];
    for _ in 0..max_nonzero {
        let mut next = Vec::new();
        for pattern in &frontier {
            let start = pattern.last().map_or(0, |(s, _)| s + 1);
            for slot in start..slots {
                for v in values {
                    let mut p = pattern.clone();
                    p.push((slot, v.clone()));
                    next.push(p);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn counit_solution(b: &BiHomBialgebra) -> Option<Vec<Rational>> {
    let n = b.dim();
    let coa = b.coalgebra();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    // (id (x) eps) comul = omega and (eps (x) id) comul = psi
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![rzero(); n];
            for (k, slot) in row.iter_mut().enumerate() {
                *slot += coa.comul_tensor().get(i, j, k);
            }
            rows.push(row);
            rhs.push(coa.omega().get(j, i).clone());
        }
        for k in 0..n {
            let mut row = vec![rzero(); n];
            for (j, slot) in row.iter_mut().enumerate() {
                *slot += coa.comul_tensor().get(i, j, k);
            }
            rows.push(row);
            rhs.push(coa.psi().get(k, i).clone());
        }
    }
    // eps absorbs psi and omega
    for m in [coa.psi(), coa.omega()] {
        for i in 0..n {
            let mut row = vec![rzero(); n];
            for (j, slot) in row.iter_mut().enumerate() {
                *slot += m.get(j, i);
            }
            row[i] -= rone();
            rows.push(row);
            rhs.push(rzero());
        }
    }
    if let Some(u) = b.unit() {
        // eps(u) = 1 and eps absorbs alpha and beta
        rows.push(u.to_vec());
        rhs.push(rone());
        for m in [b.algebra().alpha(), b.algebra().beta()] {
            for i in 0..n {
                let mut row = vec![rzero(); n];
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot += m.get(j, i);
                }
                row[i] -= rone();
                rows.push(row);
                rhs.push(rzero());
            }
        }
    }
    let system = Matrix::from_rows(rows).expect("rectangular");
    let (particular, nullspace) = system.solve(&rhs).expect("shapes agree")?;
    // candidates: canonical solution, then single nullspace perturbations
    let mut candidates = vec![particular.clone()];
    for basis_vec in &nullspace {
        candidates.push(
            particular
                .iter()
                .zip(basis_vec)
                .map(|(a, b)| a + b)
                .collect(),
        );
    }
    candidates.into_iter().find(|eps| {
        let with_counit = BiHomCoalgebra::new(
            b.coalgebra().comul_tensor().clone(),
            b.coalgebra().psi().clone(),
            b.coalgebra().omega().clone(),
            Some(eps.clone()),
            None,
        )
        .expect("shapes agree");
        let candidate = BiHomBialgebra::new(b.algebra().clone(), with_counit).expect("same dim");
        candidate
            .coalgebra()
            .check_counit()
            .map(|r| r.passes())
            .unwrap_or(false)
            && candidate.check_compatibility().passes()
    })
}

/// Every comultiplication over the grid compatible with the given algebra
/// and twists. Results keep the search order: slot patterns ascending, grid
/// values in the given order, earlier basis indexes vary slowest.
pub fn enumerate_comultiplications(
    a: &BiHomAlgebra,
    psi: &Matrix,
    omega: &Matrix,
    config: &ComulSearchConfig,
) -> Result<Vec<BiHomBialgebra>, PolysysError> {
    let n = a.dim();
    let values: Vec<Rational> = {
        let mut vs: Vec<Rational> = Vec::new();
        for v in &config.grid {
            if !v.is_zero() && !vs.contains(v) {
                vs.push(v.clone());
            }
        }
        vs
    };
    let per_index = images_for_one_index(n, &values, config.max_nonzero_per_image);
    let total: u128 = (per_index.len() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if total > config.candidate_cap as u128 {
        return Err(PolysysError::SearchSpaceExceeded {
            estimate: total,
            cap: config.candidate_cap,
        });
    }

    let mut results = Vec::new();
    let mut odometer = vec![0usize; n];
    loop {
        let mut comul = Tensor3::zero(n);
        for (i, &choice) in odometer.iter().enumerate() {
            for (slot, v) in &per_index[choice] {
                comul.set(i, slot / n, slot % n, v.clone());
            }
        }
        let coa = BiHomCoalgebra::new(comul, psi.clone(), omega.clone(), None, None)
            .expect("square twists");
        if coa.check_coalgebra_axioms().passes() {
            let candidate = BiHomBialgebra::new(a.clone(), coa).expect("same dim");
            if candidate.check_compatibility().passes() {
                if config.require_counital {
                    if let Some(eps) = counit_solution(&candidate) {
                        let coa = BiHomCoalgebra::new(
                            candidate.coalgebra().comul_tensor().clone(),
                            psi.clone(),
                            omega.clone(),
                            Some(eps),
                            None,
                        )
                        .expect("square twists");
                        results.push(BiHomBialgebra::new(a.clone(), coa).expect("same dim"));
                    }
                } else {
                    results.push(candidate);
                }
            }
        }
        if n == 0 {
            break;
        }
        let mut pos = n;
        let mut done = false;
        loop {
            if pos == 0 {
                done = true;
                break;
            }
            pos -= 1;
            odometer[pos] += 1;
            if odometer[pos] < per_index.len() {
                break;
            }
            odometer[pos] = 0;
        }
        if done {
            break;
        }
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rint, rone};

    fn base_field_algebra() -> BiHomAlgebra {
        let mut mul = Tensor3::zero(1);
        mul.set(0, 0, 0, rone());
        BiHomAlgebra::new(
            mul,
            Matrix::identity(1),
            Matrix::identity(1),
            Some(vec![rone()]),
            None,
        )
        .unwrap()
    }

    fn idempotent_unital() -> BiHomAlgebra {
        let mut mul = Tensor3::zero(2);
        mul.set(0, 0, 0, rone());
        mul.set(0, 1, 1, rone());
        mul.set(1, 0, 1, rone());
        mul.set(1, 1, 1, rone());
        BiHomAlgebra::new(
            mul,
            Matrix::identity(2),
            Matrix::identity(2),
            Some(vec![rone(), rint(0)]),
            None,
        )
        .unwrap()
    }

    #[test]
    fn base_field_grid_zero_one() {
        let a = base_field_algebra();
        let config = ComulSearchConfig {
            grid: vec![rint(0), rint(1)],
            max_nonzero_per_image: 1,
            candidate_cap: 100,
            require_counital: false,
        };
        let found =
            enumerate_comultiplications(&a, &Matrix::identity(1), &Matrix::identity(1), &config)
                .unwrap();
        // exactly the zero comultiplication and the grouplike one
        assert_eq!(found.len(), 2);
        assert!(found[0].coalgebra().comul_tensor().is_zero());
        assert_eq!(
            found[1].coalgebra().comul_tensor().get(0, 0, 0),
            &rone()
        );
    }

    #[test]
    fn zero_grid_returns_only_zero_comultiplication() {
        let a = idempotent_unital();
        let config = ComulSearchConfig {
            grid: vec![rint(0)],
            max_nonzero_per_image: 2,
            candidate_cap: 100,
            require_counital: false,
        };
        let found =
            enumerate_comultiplications(&a, &Matrix::identity(2), &Matrix::identity(2), &config)
                .unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].coalgebra().comul_tensor().is_zero());
    }

    #[test]
    fn grouplike_found_over_idempotent_algebra() {
        let a = idempotent_unital();
        let config = ComulSearchConfig {
            grid: vec![rint(0), rint(1)],
            max_nonzero_per_image: 2,
            candidate_cap: 100_000,
            require_counital: false,
        };
        let found =
            enumerate_comultiplications(&a, &Matrix::identity(2), &Matrix::identity(2), &config)
                .unwrap();
        let grouplike = found.iter().any(|b| {
            let d = b.coalgebra().comul_tensor();
            d.get(0, 0, 0) == &rone()
                && d.get(1, 1, 1) == &rone()
                && d.iter_nonzero().count() == 2
        });
        assert!(grouplike, "grouplike comultiplication must be among results");
        for b in &found {
            assert!(b.check_compatibility().passes());
        }
    }

    #[test]
    fn counital_mode_drops_the_zero_comultiplication() {
        let a = base_field_algebra();
        let config = ComulSearchConfig {
            grid: vec![rint(0), rint(1)],
            max_nonzero_per_image: 1,
            candidate_cap: 100,
            require_counital: true,
        };
        let found =
            enumerate_comultiplications(&a, &Matrix::identity(1), &Matrix::identity(1), &config)
                .unwrap();
        // the zero comultiplication admits no counit; the grouplike one does
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].counit(), Some(&[rone()][..]));
    }

    #[test]
    fn cap_refusal_reports_estimate() {
        let a = idempotent_unital();
        let config = ComulSearchConfig {
            grid: (-2..=2).map(rint).collect(),
            max_nonzero_per_image: 4,
            candidate_cap: 10,
            require_counital: false,
        };
        match enumerate_comultiplications(&a, &Matrix::identity(2), &Matrix::identity(2), &config)
        {
            Err(PolysysError::SearchSpaceExceeded { estimate, cap }) => {
                assert!(estimate > 10);
                assert_eq!(cap, 10);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }
}
