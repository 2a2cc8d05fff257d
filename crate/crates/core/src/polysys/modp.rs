//! Exhaustive solution enumeration over a prime field.
//!
//! A point found modulo p certifies that the ideal does not reduce to the
//! unit ideal mod p, which falsifies bugs in the characteristic-zero layers
//! cheaply. The search space p^vars is capped and exceeding the cap is a
//! refusal, never a partial answer.

use crate::exact::poly::Monomial;
use crate::exact::rational::{mulmod, reduce_mod_p};

use super::{Ideal, PolysysError};

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

struct CompiledPoly {
    terms: Vec<(u64, Monomial)>,
}

impl CompiledPoly {
    fn eval(&self, point: &[u64], p: u64) -> u64 {
        let mut acc = 0u64;
        for (coeff, mono) in &self.terms {
            let mut term = *coeff;
            for (i, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    term = mulmod(term, point[i], p);
                }
            }
            acc = (acc + term) % p;
        }
        acc
    }
}

/// All solutions of the system over F_p, lexicographically ordered (each
/// assignment lists variable values in the ideal's variable order).
pub fn enumerate_points_mod_p(
    ideal: &Ideal,
    p: u64,
    cap: u64,
) -> Result<Vec<Vec<u64>>, PolysysError> {
    if !is_prime(p) {
        return Err(PolysysError::NotPrime(p));
    }
    let vars = ideal.vars.len();
    let space = (p as u128).checked_pow(vars as u32).unwrap_or(u128::MAX);
    if space > cap as u128 {
        return Err(PolysysError::SearchSpaceExceeded {
            estimate: space,
            cap,
        });
    }
    let compiled: Vec<CompiledPoly> = ideal
        .generators
        .iter()
        .map(|g| {
            let terms = g
                .terms()
                .map(|(m, c)| {
                    Ok((
                        reduce_mod_p(c, p).map_err(PolysysError::ModReduction)?,
                        m.clone(),
                    ))
                })
                .collect::<Result<Vec<_>, PolysysError>>()?;
            Ok(CompiledPoly { terms })
        })
        .collect::<Result<Vec<_>, PolysysError>>()?;

    let mut out = Vec::new();
    let mut point = vec![0u64; vars];
    loop {
        if compiled.iter().all(|g| g.eval(&point, p) == 0) {
            out.push(point.clone());
        }
        if vars == 0 {
            return Ok(out);
        }
        // odometer with the last variable fastest, so output is
        // lexicographic in the variable order
        let mut pos = vars;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            point[pos] += 1;
            if point[pos] < p {
                break;
            }
            point[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rint, MonomialOrder, MultiPoly};
    use std::sync::Arc;

    fn single_var_ideal(poly_terms: &[(u16, i64)]) -> Ideal {
        let vars = Arc::new(vec!["x".to_string()]);
        let g = MultiPoly::from_terms(
            Arc::clone(&vars),
            poly_terms.iter().map(|&(e, c)| (vec![e], rint(c))),
        );
        Ideal {
            generators: vec![g],
            vars: vars.as_ref().clone(),
            order: MonomialOrder::DegRevLex,
        }
    }

    #[test]
    fn quadratic_with_and_without_roots() {
        // x^2 - 1 mod 3 -> {1, 2}
        let i = single_var_ideal(&[(2, 1), (0, -1)]);
        assert_eq!(
            enumerate_points_mod_p(&i, 3, 1000).unwrap(),
            vec![vec![1], vec![2]]
        );
        // x^2 + 1 mod 3 -> empty (squares mod 3 are 0 and 1)
        let i = single_var_ideal(&[(2, 1), (0, 1)]);
        assert!(enumerate_points_mod_p(&i, 3, 1000).unwrap().is_empty());
    }

    #[test]
    fn refusals() {
        let i = single_var_ideal(&[(2, 1)]);
        assert!(matches!(
            enumerate_points_mod_p(&i, 4, 1000),
            Err(PolysysError::NotPrime(4))
        ));
        let vars = Arc::new(vec!["x".to_string(), "y".to_string(), "z".to_string()]);
        let g = MultiPoly::variable(Arc::clone(&vars), 0);
        let i = Ideal {
            generators: vec![g],
            vars: vars.as_ref().clone(),
            order: MonomialOrder::DegRevLex,
        };
        assert!(matches!(
            enumerate_points_mod_p(&i, 101, 1000),
            Err(PolysysError::SearchSpaceExceeded { .. })
        ));
    }

    #[test]
    fn rational_coefficients_reduce() {
        // (1/2) x - 1 mod 5: 3x = 1, x = 2
        let vars = Arc::new(vec!["x".to_string()]);
        let g = MultiPoly::from_terms(
            Arc::clone(&vars),
            vec![(vec![1], crate::exact::rat(1, 2)), (vec![0], rint(-1))],
        );
        let i = Ideal {
            generators: vec![g],
            vars: vars.as_ref().clone(),
            order: MonomialOrder::DegRevLex,
        };
        assert_eq!(enumerate_points_mod_p(&i, 5, 1000).unwrap(), vec![vec![2]]);
    }
}
