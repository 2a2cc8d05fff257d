//! Buchberger's algorithm with a reduction-step budget.
//!
//! Pair selection follows the normal strategy (smallest lcm under the
//! working order) with the sugar degree as tiebreak; the product and chain
//! criteria prune useless pairs. The returned basis is reduced: monic,
//! interreduced, sorted by leading monomial, and therefore unique for a
//! given ideal and order. Exceeding the budget is an explicit outcome,
//! never a wrong answer.

use crate::exact::poly::{cmp_monomials, mono_degree, mono_div, mono_lcm, Monomial};
use crate::exact::{rone, MonomialOrder, MultiPoly, Rational};
use num::{One, Zero};
use std::cmp::Ordering;

use super::Ideal;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("reduction budget of {limit} steps exceeded")]
    BudgetExceeded { limit: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub basis: Vec<MultiPoly>,
    pub order: MonomialOrder,
    pub vars: Vec<String>,
    /// Reduction steps actually consumed.
    pub steps: u64,
}

struct StepCounter {
    used: u64,
    limit: u64,
}

impl StepCounter {
    fn tick(&mut self) -> Result<(), GroebnerError> {
        self.used += 1;
        if self.used > self.limit {
            Err(GroebnerError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Full normal form of `f` modulo `basis`: every term is reduced, so the
/// remainder has no term divisible by any basis leading monomial.
fn normal_form(
    f: &MultiPoly,
    basis: &[MultiPoly],
    order: MonomialOrder,
    steps: &mut StepCounter,
) -> Result<MultiPoly, GroebnerError> {
    let mut work = f.clone();
    let mut remainder = MultiPoly::zero(f.vars_arc());
    'outer: while let Some((lm, lc)) = work.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        for g in basis {
            let Some((glm, glc)) = g.leading(order) else { continue };
            if let Some(q) = mono_div(&lm, glm) {
                steps.tick()?;
                let factor = &lc / glc;
                work = work.sub(&g.mul_term(&q, &factor));
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        remainder.add_term(lm.clone(), lc.clone());
        let mut stripped = MultiPoly::zero(work.vars_arc());
        stripped.add_term(lm, lc);
        work = work.sub(&stripped);
    }
    Ok(remainder)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

fn pair_of(i: usize, j: usize, basis: &[MultiPoly], sugars: &[u64], order: MonomialOrder) -> Pair {
    let (lmi, _) = basis[i].leading(order).expect("nonzero basis poly");
    let (lmj, _) = basis[j].leading(order).expect("nonzero basis poly");
    let lcm = mono_lcm(lmi, lmj);
    let sugar = (sugars[i] + mono_degree(&lcm) - mono_degree(lmi))
        .max(sugars[j] + mono_degree(&lcm) - mono_degree(lmj));
    Pair { i, j, lcm, sugar }
}

fn select_best(pairs: &[Pair], order: MonomialOrder) -> usize {
    let mut best = 0;
    for (idx, p) in pairs.iter().enumerate().skip(1) {
        let b = &pairs[best];
        let cmp = cmp_monomials(&p.lcm, &b.lcm, order)
            .then_with(|| p.sugar.cmp(&b.sugar))
            .then_with(|| (p.i, p.j).cmp(&(b.i, b.j)));
        if cmp == Ordering::Less {
            best = idx;
        }
    }
    best
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduced Groebner basis of the ideal's generators under its order.
pub fn buchberger(ideal: &Ideal, step_limit: u64) -> Result<GroebnerBasis, GroebnerError> {
    let order = ideal.order;
    let mut steps = StepCounter {
        used: 0,
        limit: step_limit,
    };
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut sugars: Vec<u64> = Vec::new();
    for g in &ideal.generators {
        if !g.is_zero() {
            basis.push(g.normalize(order));
            sugars.push(g.total_degree());
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            basis,
            order,
            vars: ideal.vars.clone(),
            steps: steps.used,
        });
    }

    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push(pair_of(i, j, &basis, &sugars, order));
        }
    }

    while !pairs.is_empty() {
        let idx = select_best(&pairs, order);
        let pair = pairs.swap_remove(idx);
        let (i, j) = (pair.i, pair.j);
        processed.push((i.min(j), i.max(j)));

        let (lmi, lci) = {
            let (m, c) = basis[i].leading(order).unwrap();
            (m.clone(), c.clone())
        };
        let (lmj, lcj) = {
            let (m, c) = basis[j].leading(order).unwrap();
            (m.clone(), c.clone())
        };
        if coprime(&lmi, &lmj) {
            continue; // product criterion
        }
        // chain criterion: some k with lm_k | lcm and both (i,k), (j,k) done
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (lmk, _) = basis[k].leading(order).unwrap();
            if mono_div(&pair.lcm, lmk).is_none() {
                return false;
            }
            let done = |a: usize, b: usize| {
                processed.contains(&(a.min(b), a.max(b)))
            };
            done(i, k) && done(j, k)
        });
        if chain {
            continue;
        }

        let qi = mono_div(&pair.lcm, &lmi).unwrap();
        let qj = mono_div(&pair.lcm, &lmj).unwrap();
        let s_poly = basis[i]
            .mul_term(&qi, &(rone() / &lci))
            .sub(&basis[j].mul_term(&qj, &(rone() / &lcj)));
        let reduced = normal_form(&s_poly, &basis, order, &mut steps)?;
        if !reduced.is_zero() {
            let sugar = pair.sugar;
            basis.push(reduced.normalize(order));
            sugars.push(sugar);
            let new = basis.len() - 1;
            for k in 0..new {
                pairs.push(pair_of(k, new, &basis, &sugars, order));
            }
        }
    }

    // minimalize: drop any generator whose leading monomial is divisible by
    // another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (lmi, _) = basis[i].leading(order).unwrap();
        let lmi = lmi.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (lmj, _) = basis[j].leading(order).unwrap();
            if mono_div(&lmi, lmj).is_some() && (lmj != &lmi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<MultiPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // interreduce fully
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let current = minimal[i].clone();
            let others: Vec<MultiPoly> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                .collect();
            let reduced = normal_form(&current, &others, order, &mut steps)?.normalize(order);
            if reduced != current {
                changed = true;
            }
            minimal[i] = reduced;
        }
        minimal.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }

    minimal.sort_by(|a, b| {
        let (la, _) = a.leading(order).unwrap();
        let (lb, _) = b.leading(order).unwrap();
        cmp_monomials(la, lb, order)
    });

    Ok(GroebnerBasis {
        basis: minimal,
        order,
        vars: ideal.vars.clone(),
        steps: steps.used,
    })
}

/// True when the reduced basis contains a nonzero constant; over an
/// algebraically closed field this is equivalent to unsolvability.
pub fn ideal_is_trivial(gb: &GroebnerBasis) -> bool {
    gb.basis.iter().any(|g| {
        g.constant_value()
            .map(|c| !c.is_zero())
            .unwrap_or(false)
    })
}

/// The constant generator exhibited by a trivial basis, for certificates.
pub fn trivial_constant(gb: &GroebnerBasis) -> Option<Rational> {
    gb.basis
        .iter()
        .find_map(|g| g.constant_value().filter(|c| !c.is_zero()))
}

/// Reduced-basis postconditions: every S-polynomial reduces to zero, no
/// leading monomial divides another, all leading coefficients are one, and
/// no trailing term is reducible. Used as an executable correctness check.
pub fn verify_reduced_basis(gb: &GroebnerBasis) -> bool {
    let order = gb.order;
    let mut steps = StepCounter {
        used: 0,
        limit: u64::MAX,
    };
    for g in &gb.basis {
        let Some((_, lc)) = g.leading(order) else {
            return false;
        };
        if !lc.is_one() {
            return false;
        }
    }
    for i in 0..gb.basis.len() {
        let (lmi, _) = gb.basis[i].leading(order).unwrap();
        for j in 0..gb.basis.len() {
            if i == j {
                continue;
            }
            let (lmj, _) = gb.basis[j].leading(order).unwrap();
            if mono_div(lmi, lmj).is_some() {
                return false;
            }
        }
        // every non-leading term must be irreducible too
        let lmi = lmi.clone();
        for (m, _) in gb.basis[i].terms() {
            if *m == lmi {
                continue;
            }
            for g in &gb.basis {
                let (glm, _) = g.leading(order).unwrap();
                if mono_div(m, glm).is_some() {
                    return false;
                }
            }
        }
    }
    for i in 0..gb.basis.len() {
        for j in i + 1..gb.basis.len() {
            let (lmi, lci) = gb.basis[i].leading(order).unwrap();
            let (lmj, lcj) = gb.basis[j].leading(order).unwrap();
            let lcm = mono_lcm(lmi, lmj);
            let qi = mono_div(&lcm, lmi).unwrap();
            let qj = mono_div(&lcm, lmj).unwrap();
            let s = gb.basis[i]
                .mul_term(&qi, &(rone() / lci))
                .sub(&gb.basis[j].mul_term(&qj, &(rone() / lcj)));
            let r = normal_form(&s, &gb.basis, order, &mut steps).unwrap();
            if !r.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Normal form against an already-computed basis (for membership tests).
pub fn reduce_modulo(
    f: &MultiPoly,
    gb: &GroebnerBasis,
) -> MultiPoly {
    let mut steps = StepCounter {
        used: 0,
        limit: u64::MAX,
    };
    normal_form(f, &gb.basis, gb.order, &mut steps).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rint;
    use std::sync::Arc;

    fn vars(names: &[&str]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    fn poly(v: &Arc<Vec<String>>, terms: &[(&[u16], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            Arc::clone(v),
            terms.iter().map(|(m, c)| (m.to_vec(), rint(*c))),
        )
    }

    fn ideal(v: &Arc<Vec<String>>, order: MonomialOrder, gens: Vec<MultiPoly>) -> Ideal {
        Ideal {
            generators: gens,
            vars: v.as_ref().clone(),
            order,
        }
    }

    #[test]
    fn lex_example_pinned() {
        // {x^2 - 1, x y - 1} under lex x > y reduces to {x - y, y^2 - 1}
        let v = vars(&["x", "y"]);
        let i = ideal(
            &v,
            MonomialOrder::Lex,
            vec![
                poly(&v, &[(&[2, 0], 1), (&[0, 0], -1)]),
                poly(&v, &[(&[1, 1], 1), (&[0, 0], -1)]),
            ],
        );
        let gb = buchberger(&i, 10_000).unwrap();
        let expected = vec![
            poly(&v, &[(&[0, 2], 1), (&[0, 0], -1)]),
            poly(&v, &[(&[1, 0], 1), (&[0, 1], -1)]),
        ];
        let mut got = gb.basis.clone();
        got.sort_by_key(|g| g.to_string());
        let mut want = expected;
        want.sort_by_key(|g| g.to_string());
        assert_eq!(got, want);
        assert!(verify_reduced_basis(&gb));
        assert!(!ideal_is_trivial(&gb));
    }

    #[test]
    fn unit_ideal_detected() {
        let v = vars(&["x"]);
        let i = ideal(
            &v,
            MonomialOrder::DegRevLex,
            vec![
                poly(&v, &[(&[1], 1)]),
                poly(&v, &[(&[1], 1), (&[0], 1)]),
            ],
        );
        let gb = buchberger(&i, 10_000).unwrap();
        assert_eq!(gb.basis.len(), 1);
        assert_eq!(gb.basis[0].constant_value(), Some(rint(1)));
        assert!(ideal_is_trivial(&gb));
        assert_eq!(trivial_constant(&gb), Some(rint(1)));
    }

    #[test]
    fn budget_exceeded_is_an_explicit_outcome() {
        // this system needs at least one genuine division step (the pair
        // (x^2 - 1, x - y) reduces through x y - 1), so a zero budget trips
        let v = vars(&["x", "y"]);
        let i = ideal(
            &v,
            MonomialOrder::Lex,
            vec![
                poly(&v, &[(&[2, 0], 1), (&[0, 0], -1)]),
                poly(&v, &[(&[1, 1], 1), (&[0, 0], -1)]),
            ],
        );
        assert!(matches!(
            buchberger(&i, 0),
            Err(GroebnerError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn twisted_cubic_matches_brute_force_oracle() {
        let v = vars(&["x", "y", "z"]);
        let gens = vec![
            poly(&v, &[(&[0, 1, 0], 1), (&[2, 0, 0], -1)]),
            poly(&v, &[(&[0, 0, 1], 1), (&[3, 0, 0], -1)]),
        ];
        let i = ideal(&v, MonomialOrder::Lex, gens.clone());
        let gb = buchberger(&i, 100_000).unwrap();
        assert!(verify_reduced_basis(&gb));
        let oracle = brute_force_reduced_basis(&gens, MonomialOrder::Lex);
        assert_eq!(gb.basis, oracle);
    }

    #[test]
    fn determinism_across_runs() {
        let v = vars(&["x", "y", "z"]);
        let i = ideal(
            &v,
            MonomialOrder::DegRevLex,
            vec![
                poly(&v, &[(&[2, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], -1)]),
                poly(&v, &[(&[1, 1, 0], 1), (&[0, 0, 2], -1)]),
                poly(&v, &[(&[0, 1, 1], 1), (&[1, 0, 0], -1)]),
            ],
        );
        let a = buchberger(&i, 1_000_000).unwrap();
        let b = buchberger(&i, 1_000_000).unwrap();
        assert_eq!(a.basis, b.basis);
        assert!(verify_reduced_basis(&a));
    }

    /// Textbook Buchberger without selection strategies or criteria,
    /// followed by naive interreduction. Deliberately independent of the
    /// main engine; used as an oracle.
    fn brute_force_reduced_basis(gens: &[MultiPoly], order: MonomialOrder) -> Vec<MultiPoly> {
        let mut steps = StepCounter {
            used: 0,
            limit: u64::MAX,
        };
        let mut basis: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        loop {
            let mut additions: Vec<MultiPoly> = Vec::new();
            for i in 0..basis.len() {
                for j in i + 1..basis.len() {
                    let (lmi, lci) = basis[i].leading(order).unwrap();
                    let (lmj, lcj) = basis[j].leading(order).unwrap();
                    let lcm = mono_lcm(lmi, lmj);
                    let s = basis[i]
                        .mul_term(&mono_div(&lcm, lmi).unwrap(), &(rone() / lci))
                        .sub(&basis[j].mul_term(&mono_div(&lcm, lmj).unwrap(), &(rone() / lcj)));
                    let r = normal_form(&s, &basis, order, &mut steps).unwrap();
                    if !r.is_zero() && !additions.contains(&r) {
                        additions.push(r);
                    }
                }
            }
            if additions.is_empty() {
                break;
            }
            basis.extend(additions);
        }
        // minimalize + interreduce
        loop {
            let mut changed = false;
            for i in 0..basis.len() {
                let current = basis[i].clone();
                let others: Vec<MultiPoly> = basis
                    .iter()
                    .enumerate()
                    .filter_map(|(j, g)| (j != i && !g.is_zero()).then(|| g.clone()))
                    .collect();
                let r = normal_form(&current, &others, order, &mut steps)
                    .unwrap()
                    .normalize(order);
                if r != current {
                    changed = true;
                }
                basis[i] = r;
            }
            basis.retain(|g| !g.is_zero());
            if !changed {
                break;
            }
        }
        basis.sort_by(|a, b| {
            let (la, _) = a.leading(order).unwrap();
            let (lb, _) = b.leading(order).unwrap();
            cmp_monomials(la, lb, order)
        });
        basis
    }
}
