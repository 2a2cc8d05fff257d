//! Polynomial systems attached to the structures: the classification
//! variety of a fixed dimension, isomorphism systems between two algebras,
//! stabilizer systems, a Buchberger engine to decide solvability over the
//! algebraic closure, and finite-field enumeration as a falsification
//! oracle.
//!
//! All systems are generated from the coordinate-free identities, never
//! transcribed from any printed display.

pub mod buchberger;
pub mod enumerate;
pub mod modp;
pub mod solve;

pub use buchberger::{
    buchberger, ideal_is_trivial, reduce_modulo, trivial_constant, verify_reduced_basis,
    GroebnerBasis, GroebnerError,
};
pub use enumerate::{enumerate_comultiplications, ComulSearchConfig};
pub use modp::enumerate_points_mod_p;
pub use solve::{decide_isomorphic, IsoBudget, IsoCertificate, IsoVerdict};

use crate::algebra::BiHomAlgebra;
use crate::exact::{MonomialOrder, MultiPoly, Rational, rone, rzero};
use num::Zero;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolysysError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("non-symbolic components need a concrete structure to read from")]
    MissingBase,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("search space of about {estimate} candidates exceeds the cap of {cap}")]
    SearchSpaceExceeded { estimate: u128, cap: u64 },
    #[error("coefficient reduction failed: {0}")]
    ModReduction(String),
}

/// Generator set with its variable context and monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub generators: Vec<MultiPoly>,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl Ideal {
    pub fn with_order(mut self, order: MonomialOrder) -> Ideal {
        self.order = order;
        self
    }

    /// Evaluates every generator at a full assignment (variable order = the
    /// ideal's variable list).
    pub fn evaluate_all(&self, point: &[Rational]) -> Vec<Rational> {
        self.generators.iter().map(|g| g.eval(point)).collect()
    }
}

/// Which structure components carry symbolic unknowns in the variety
/// system; concrete values for the rest are read from a base structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolicParts {
    pub mul: bool,
    pub alpha: bool,
    pub beta: bool,
}

impl SymbolicParts {
    pub fn all() -> Self {
        SymbolicParts {
            mul: true,
            alpha: true,
            beta: true,
        }
    }
}

/// Where each variable of a variety system sits in a concrete structure;
/// used to substitute an algebra's constants into the generated system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarietySlot {
    Mul(usize, usize, usize),
    Alpha(usize, usize),
    Beta(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietySystem {
    pub ideal: Ideal,
    pub dim: usize,
    pub layout: Vec<VarietySlot>,
}

impl VarietySystem {
    /// Assignment vector reading each variable's value off a concrete
    /// algebra.
    pub fn assignment_for(&self, a: &BiHomAlgebra) -> Result<Vec<Rational>, PolysysError> {
        if a.dim() != self.dim {
            return Err(PolysysError::DimMismatch(a.dim(), self.dim));
        }
        Ok(self
            .layout
            .iter()
            .map(|slot| match *slot {
                VarietySlot::Mul(i, j, k) => a.mul_tensor().get(i, j, k).clone(),
                VarietySlot::Alpha(r, c) => a.alpha().get(r, c).clone(),
                VarietySlot::Beta(r, c) => a.beta().get(r, c).clone(),
            })
            .collect())
    }

    /// Substitutes a concrete algebra's constants into every generator; the
    /// result is all zeros exactly when the basis-evaluation checker passes.
    pub fn evaluate_at(&self, a: &BiHomAlgebra) -> Result<Vec<Rational>, PolysysError> {
        let point = self.assignment_for(a)?;
        Ok(self.ideal.evaluate_all(&point))
    }

    pub fn vanishes_at(&self, a: &BiHomAlgebra) -> Result<bool, PolysysError> {
        Ok(self.evaluate_at(a)?.iter().all(|v| v.is_zero()))
    }
}

/// The polynomial system cutting out dimension-n structures: twisted
/// associativity (cubic), multiplicativity of both twists (mixed
/// quadratic), and the commutator of the twists (quadratic), in whichever
/// components `mask` marks as symbolic. Identically-zero generators are
/// pruned.
pub fn gen_variety_system(
    n: usize,
    mask: SymbolicParts,
    base: Option<&BiHomAlgebra>,
) -> Result<VarietySystem, PolysysError> {
    if let Some(b) = base {
        if b.dim() != n {
            return Err(PolysysError::DimMismatch(b.dim(), n));
        }
    }
    if (!mask.mul || !mask.alpha || !mask.beta) && base.is_none() {
        return Err(PolysysError::MissingBase);
    }

    let mut names: Vec<String> = Vec::new();
    let mut layout: Vec<VarietySlot> = Vec::new();
    let mut c_index = vec![usize::MAX; n * n * n];
    let mut a_index = vec![usize::MAX; n * n];
    let mut b_index = vec![usize::MAX; n * n];
    if mask.mul {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c_index[(i * n + j) * n + k] = names.len();
                    names.push(format!("c_{}_{}_{}", i + 1, j + 1, k + 1));
                    layout.push(VarietySlot::Mul(i, j, k));
                }
            }
        }
    }
    if mask.alpha {
        for r in 0..n {
            for c in 0..n {
                a_index[r * n + c] = names.len();
                names.push(format!("a_{}_{}", r + 1, c + 1));
                layout.push(VarietySlot::Alpha(r, c));
            }
        }
    }
    if mask.beta {
        for r in 0..n {
            for c in 0..n {
                b_index[r * n + c] = names.len();
                names.push(format!("b_{}_{}", r + 1, c + 1));
                layout.push(VarietySlot::Beta(r, c));
            }
        }
    }
    let vars = Arc::new(names);

    let cpoly = |i: usize, j: usize, k: usize| -> MultiPoly {
        if mask.mul {
            MultiPoly::variable(Arc::clone(&vars), c_index[(i * n + j) * n + k])
        } else {
            MultiPoly::constant(
                Arc::clone(&vars),
                base.unwrap().mul_tensor().get(i, j, k).clone(),
            )
        }
    };
    let apoly = |r: usize, c: usize| -> MultiPoly {
        if mask.alpha {
            MultiPoly::variable(Arc::clone(&vars), a_index[r * n + c])
        } else {
            MultiPoly::constant(Arc::clone(&vars), base.unwrap().alpha().get(r, c).clone())
        }
    };
    let bpoly = |r: usize, c: usize| -> MultiPoly {
        if mask.beta {
            MultiPoly::variable(Arc::clone(&vars), b_index[r * n + c])
        } else {
            MultiPoly::constant(Arc::clone(&vars), base.unwrap().beta().get(r, c).clone())
        }
    };

    let mut generators: Vec<MultiPoly> = Vec::new();
    let mut push = |g: MultiPoly| {
        if !g.is_zero() {
            generators.push(g);
        }
    };

    // mul(alpha(e_i), mul(e_j, e_k)) = mul(mul(e_i, e_j), beta(e_k)),
    // component s
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for s in 0..n {
                    let mut g = MultiPoly::zero(Arc::clone(&vars));
                    for l in 0..n {
                        for m in 0..n {
                            g = g.add(&apoly(l, i).mul(&cpoly(j, k, m)).mul(&cpoly(l, m, s)));
                            g = g.sub(&cpoly(i, j, l).mul(&bpoly(m, k)).mul(&cpoly(l, m, s)));
                        }
                    }
                    push(g);
                }
            }
        }
    }
    // alpha(mul(e_i, e_j)) = mul(alpha(e_i), alpha(e_j)), component s
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                let mut g = MultiPoly::zero(Arc::clone(&vars));
                for p in 0..n {
                    g = g.add(&apoly(s, p).mul(&cpoly(i, j, p)));
                    for q in 0..n {
                        g = g.sub(&apoly(p, i).mul(&apoly(q, j)).mul(&cpoly(p, q, s)));
                    }
                }
                push(g);
            }
        }
    }
    // beta(mul(e_i, e_j)) = mul(beta(e_i), beta(e_j)), component s
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                let mut g = MultiPoly::zero(Arc::clone(&vars));
                for p in 0..n {
                    g = g.add(&bpoly(s, p).mul(&cpoly(i, j, p)));
                    for q in 0..n {
                        g = g.sub(&bpoly(p, i).mul(&bpoly(q, j)).mul(&cpoly(p, q, s)));
                    }
                }
                push(g);
            }
        }
    }
    // alpha beta - beta alpha, entry (r, c)
    for r in 0..n {
        for c in 0..n {
            let mut g = MultiPoly::zero(Arc::clone(&vars));
            for j in 0..n {
                g = g.add(&apoly(r, j).mul(&bpoly(j, c)));
                g = g.sub(&bpoly(r, j).mul(&apoly(j, c)));
            }
            push(g);
        }
    }

    Ok(VarietySystem {
        ideal: Ideal {
            generators,
            vars: vars.as_ref().clone(),
            order: MonomialOrder::DegRevLex,
        },
        dim: n,
        layout,
    })
}

/// Symbolic determinant by cofactor expansion (dimensions stay tiny).
pub(crate) fn det_symbolic(entries: &[Vec<MultiPoly>], vars: &Arc<Vec<String>>) -> MultiPoly {
    let n = entries.len();
    if n == 0 {
        return MultiPoly::constant(Arc::clone(vars), rone());
    }
    if n == 1 {
        return entries[0][0].clone();
    }
    let mut det = MultiPoly::zero(Arc::clone(vars));
    for (col, top) in entries[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = entries[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(c, e)| (c != col).then(|| e.clone()))
                    .collect()
            })
            .collect();
        let cofactor = top.mul(&det_symbolic(&minor, vars));
        if col % 2 == 0 {
            det = det.add(&cofactor);
        } else {
            det = det.sub(&cofactor);
        }
    }
    det
}

/// Isomorphism system between two equal-dimensional algebras in the n^2
/// entries of the candidate map (variables `d_r_c`) plus the auxiliary `t`
/// enforcing invertibility through `det(d) t - 1`. Its zero set over the
/// algebraic closure is exactly the set of isomorphisms.
pub fn gen_iso_system(a: &BiHomAlgebra, b: &BiHomAlgebra) -> Result<Ideal, PolysysError> {
    if a.dim() != b.dim() {
        return Err(PolysysError::DimMismatch(a.dim(), b.dim()));
    }
    let n = a.dim();
    let mut names: Vec<String> = Vec::new();
    for r in 0..n {
        for c in 0..n {
            names.push(format!("d_{}_{}", r + 1, c + 1));
        }
    }
    names.push("t".into());
    let vars = Arc::new(names);
    let d = |r: usize, c: usize| MultiPoly::variable(Arc::clone(&vars), r * n + c);
    let t = MultiPoly::variable(Arc::clone(&vars), n * n);
    let constant = |v: &Rational| MultiPoly::constant(Arc::clone(&vars), v.clone());

    let mut generators = Vec::new();
    let mut push = |g: MultiPoly| {
        if !g.is_zero() {
            generators.push(g);
        }
    };

    // phi(mul_a(e_i, e_j)) = mul_b(phi e_i, phi e_j), component p
    for i in 0..n {
        for j in 0..n {
            for p in 0..n {
                let mut g = MultiPoly::zero(Arc::clone(&vars));
                for k in 0..n {
                    let c_a = a.mul_tensor().get(i, j, k);
                    if !c_a.is_zero() {
                        g = g.add(&d(p, k).mul(&constant(c_a)));
                    }
                    for q in 0..n {
                        let c_b = b.mul_tensor().get(k, q, p);
                        if !c_b.is_zero() {
                            g = g.sub(&d(k, i).mul(&d(q, j)).mul(&constant(c_b)));
                        }
                    }
                }
                push(g);
            }
        }
    }
    // alpha_b phi = phi alpha_a and the beta analogue, entry (p, i)
    for (ta, tb) in [(a.alpha(), b.alpha()), (a.beta(), b.beta())] {
        for p in 0..n {
            for i in 0..n {
                let mut g = MultiPoly::zero(Arc::clone(&vars));
                for k in 0..n {
                    let lb = tb.get(p, k);
                    if !lb.is_zero() {
                        g = g.add(&d(k, i).mul(&constant(lb)));
                    }
                    let ra = ta.get(k, i);
                    if !ra.is_zero() {
                        g = g.sub(&d(p, k).mul(&constant(ra)));
                    }
                }
                push(g);
            }
        }
    }
    // det(d) t - 1
    let entries: Vec<Vec<MultiPoly>> = (0..n)
        .map(|r| (0..n).map(|c| d(r, c)).collect())
        .collect();
    let det = det_symbolic(&entries, &vars);
    push(det.mul(&t).sub(&MultiPoly::constant(Arc::clone(&vars), rone())));

    Ok(Ideal {
        generators,
        vars: vars.as_ref().clone(),
        order: MonomialOrder::DegRevLex,
    })
}

/// Stabilizer system: the isomorphism system of an algebra with itself; the
/// identity matrix (with t = 1) is always a point.
pub fn gen_stabilizer_system(a: &BiHomAlgebra) -> Ideal {
    gen_iso_system(a, a).expect("equal dimensions")
}

/// Assignment vector for an iso/stabilizer system at a concrete candidate
/// map (and the matching t = 1/det when invertible, else t = 0).
pub fn iso_assignment(phi: &crate::exact::Matrix) -> Vec<Rational> {
    let n = phi.rows();
    let mut point = Vec::with_capacity(n * n + 1);
    for r in 0..n {
        for c in 0..n {
            point.push(phi.get(r, c).clone());
        }
    }
    let det = phi.det().expect("square");
    point.push(if det.is_zero() { rzero() } else { rone() / det });
    point
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rint, rone, Matrix, Tensor3};

    fn idempotent_pair() -> BiHomAlgebra {
        let mut mul = Tensor3::zero(2);
        mul.set(0, 0, 0, rone());
        mul.set(0, 1, 1, rone());
        mul.set(1, 0, 1, rone());
        mul.set(1, 1, 1, rone());
        BiHomAlgebra::new(mul, Matrix::identity(2), Matrix::identity(2), None, None).unwrap()
    }

    fn nilpotent_shear() -> BiHomAlgebra {
        let mut mul = Tensor3::zero(2);
        mul.set(1, 1, 0, rone());
        BiHomAlgebra::new(
            mul,
            Matrix::from_i64(&[&[1, 1], &[0, 1]]),
            Matrix::identity(2),
            None,
            None,
        )
        .unwrap()
    }

    fn broken_example() -> BiHomAlgebra {
        let mut mul = Tensor3::zero(2);
        mul.set(0, 0, 1, rone());
        mul.set(0, 1, 1, rone());
        mul.set(1, 0, 0, rint(-1));
        mul.set(1, 1, 1, rone());
        BiHomAlgebra::new(
            mul,
            Matrix::identity(2),
            Matrix::from_i64(&[&[-1, 0], &[0, 1]]),
            None,
            None,
        )
        .unwrap()
    }

    #[test]
    fn variety_system_dimension_one() {
        let sys = gen_variety_system(1, SymbolicParts::all(), None).unwrap();
        assert_eq!(sys.ideal.vars, vec!["c_1_1_1", "a_1_1", "b_1_1"]);
        // the twist commutator is identically zero and pruned, leaving the
        // cubic associativity generator and both multiplicativity ones
        assert_eq!(sys.ideal.generators.len(), 3);
        let strings: Vec<String> = sys
            .ideal
            .generators
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert!(strings.contains(&"c_1_1_1^2*a_1_1 - c_1_1_1^2*b_1_1".to_string()));
        assert!(strings.contains(&"-c_1_1_1*a_1_1^2 + c_1_1_1*a_1_1".to_string()));
        assert!(strings.contains(&"-c_1_1_1*b_1_1^2 + c_1_1_1*b_1_1".to_string()));
    }

    #[test]
    fn substitution_matches_axiom_checker() {
        let sys = gen_variety_system(2, SymbolicParts::all(), None).unwrap();
        assert!(sys.vanishes_at(&idempotent_pair()).unwrap());
        assert!(sys.vanishes_at(&nilpotent_shear()).unwrap());
        let evals = sys.evaluate_at(&broken_example()).unwrap();
        assert!(evals.iter().any(|v| !v.is_zero()));
        assert!(!broken_example().check_axioms().passes());
    }

    #[test]
    fn masked_generation_requires_base() {
        let mask = SymbolicParts {
            mul: true,
            alpha: false,
            beta: false,
        };
        assert_eq!(
            gen_variety_system(2, mask, None).unwrap_err(),
            PolysysError::MissingBase
        );
        let base = nilpotent_shear();
        let sys = gen_variety_system(2, mask, Some(&base)).unwrap();
        assert_eq!(sys.ideal.vars.len(), 8);
        // the base's own constants still satisfy the masked system
        assert!(sys.vanishes_at(&base).unwrap());
    }

    #[test]
    fn iso_system_solvable_cases() {
        let a = idempotent_pair();
        // identity satisfies the stabilizer system
        let stab = gen_stabilizer_system(&a);
        let point = iso_assignment(&Matrix::identity(2));
        assert!(stab.evaluate_all(&point).iter().all(|v| v.is_zero()));
        // swap does not stabilize the idempotent pair
        let swap_point = iso_assignment(&Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert!(stab
            .evaluate_all(&swap_point)
            .iter()
            .any(|v| !v.is_zero()));
        // but the swap is a valid point of the iso system onto the transport
        let b = a
            .transport(&Matrix::from_i64(&[&[0, 1], &[1, 0]]))
            .unwrap();
        let iso = gen_iso_system(&a, &b).unwrap();
        assert!(iso
            .evaluate_all(&swap_point)
            .iter()
            .all(|v| v.is_zero()));
    }

    #[test]
    fn rabinowitsch_generator_present() {
        let a = idempotent_pair();
        let iso = gen_iso_system(&a, &a).unwrap();
        // last listed variable is t; a singular candidate cannot zero the
        // invertibility generator
        assert_eq!(iso.vars.last().unwrap(), "t");
        let singular = iso_assignment(&Matrix::from_i64(&[&[1, 1], &[1, 1]]));
        assert!(iso.evaluate_all(&singular).iter().any(|v| !v.is_zero()));
    }

    #[test]
    fn symbolic_det_sign() {
        let vars = Arc::new(vec!["x".to_string(), "y".to_string()]);
        let x = MultiPoly::variable(Arc::clone(&vars), 0);
        let y = MultiPoly::variable(Arc::clone(&vars), 1);
        let zero = MultiPoly::zero(Arc::clone(&vars));
        // det [[0, x], [y, 0]] = -x y
        let det = det_symbolic(
            &[vec![zero.clone(), x.clone()], vec![y.clone(), zero]],
            &vars,
        );
        assert_eq!(det, x.mul(&y).neg());
    }
}
