//! Sparse multivariate polynomials over the rationals.
//!
//! Exponent vectors are stored densely (variable counts stay small at desk
//! scale) inside a BTreeMap so every iteration order is deterministic. A
//! polynomial carries its own ordered variable-name list; binary operations
//! auto-union differing lists.

use super::rational::{format_rational, rone, rzero, Rational};
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub type Monomial = Vec<u16>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
}

/// Compares monomials under the given order; `Greater` means "leading".
pub fn cmp_monomials(a: &[u16], b: &[u16], order: MonomialOrder) -> Ordering {
    match order {
        MonomialOrder::Lex => a.cmp(b),
        MonomialOrder::DegRevLex => {
            let da: u64 = a.iter().map(|&e| e as u64).sum();
            let db: u64 = b.iter().map(|&e| e as u64).sum();
            match da.cmp(&db) {
                Ordering::Equal => {
                    for i in (0..a.len().max(b.len())).rev() {
                        let ea = a.get(i).copied().unwrap_or(0);
                        let eb = b.get(i).copied().unwrap_or(0);
                        match ea.cmp(&eb) {
                            Ordering::Equal => continue,
                            // smaller exponent in the last differing
                            // position wins under degrevlex
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                        }
                    }
                    Ordering::Equal
                }
                other => other,
            }
        }
    }
}

pub fn mono_mul(a: &[u16], b: &[u16]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// b / a when a divides b.
pub fn mono_div(b: &[u16], a: &[u16]) -> Option<Monomial> {
    if mono_divides(a, b) {
        Some(b.iter().zip(a).map(|(x, y)| x - y).collect())
    } else {
        None
    }
}

pub fn mono_lcm(a: &[u16], b: &[u16]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_degree(a: &[u16]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: Arc<Vec<String>>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<Vec<String>>, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn variable(vars: Arc<Vec<String>>, index: usize) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        let mut p = MultiPoly::zero(vars);
        p.terms.insert(exps, rone());
        p
    }

    pub fn from_terms(
        vars: Arc<Vec<String>>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn vars_arc(&self) -> Arc<Vec<String>> {
        Arc::clone(&self.vars)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| mono_degree(m) == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(rzero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| mono_degree(m)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        debug_assert_eq!(mono.len(), self.vars.len());
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Aligns two polynomials onto the union of their variable lists
    /// (ordered: self's variables, then the new ones from `other`).
    fn unify(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut merged: Vec<String> = self.vars.as_ref().clone();
        for v in other.vars.iter() {
            if !merged.contains(v) {
                merged.push(v.clone());
            }
        }
        let merged = Arc::new(merged);
        (self.remap(&merged), other.remap(&merged))
    }

    fn remap(&self, new_vars: &Arc<Vec<String>>) -> MultiPoly {
        let index: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                new_vars
                    .iter()
                    .position(|w| w == v)
                    .expect("remap target must contain all variables")
            })
            .collect();
        let mut out = MultiPoly::zero(Arc::clone(new_vars));
        for (m, c) in &self.terms {
            let mut exps = vec![0; new_vars.len()];
            for (old, &e) in m.iter().enumerate() {
                exps[index[old]] = e;
            }
            out.add_term(exps, c.clone());
        }
        out
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.unify(other);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.unify(other);
        for (m, c) in b.terms {
            a.add_term(m, -c);
        }
        a
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(Arc::clone(&self.vars));
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(Arc::clone(&self.vars));
        }
        let mut out = MultiPoly::zero(Arc::clone(&self.vars));
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let (a, b) = self.unify(other);
        let mut out = MultiPoly::zero(a.vars_arc());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }

    /// Multiplies by `coeff * monomial` in place-ish (used heavily during
    /// polynomial reduction).
    pub fn mul_term(&self, mono: &[u16], coeff: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero(Arc::clone(&self.vars));
        if coeff.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(mono_mul(m, mono), c * coeff);
        }
        out
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| cmp_monomials(a, b, order))
    }

    /// Full evaluation; `point` must assign every variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len(), "evaluation point arity");
        let mut acc = rzero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Partial substitution; assigned variables disappear from the support
    /// but stay in the variable list.
    pub fn substitute(&self, assignment: &BTreeMap<usize, Rational>) -> MultiPoly {
        let mut out = MultiPoly::zero(Arc::clone(&self.vars));
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.clone();
            for (&i, v) in assignment {
                for _ in 0..exps[i] {
                    coeff *= v;
                }
                exps[i] = 0;
            }
            out.add_term(exps, coeff);
        }
        out
    }

    /// Content-free, monic-leading normalization under `order`.
    pub fn normalize(&self, order: MonomialOrder) -> MultiPoly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = rone() / lc;
                self.scale(&inv)
            }
        }
    }

    /// Canonical display/serialization order: total degree descending, then
    /// lexicographic descending on exponents.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| {
            mono_degree(b)
                .cmp(&mono_degree(a))
                .then_with(|| b.cmp(a))
        });
        ts
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || mono_degree(m) == 0 {
                pieces.push(format_rational(&mag));
            }
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => pieces.push(self.vars[i].clone()),
                    _ => pieces.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{rint, rone};
    use super::*;

    fn ctx(names: &[&str]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn arithmetic_examples() {
        let vars = ctx(&["x", "y"]);
        let x = MultiPoly::variable(Arc::clone(&vars), 0);
        let y = MultiPoly::variable(Arc::clone(&vars), 1);
        // (x+y) + (x-y) = 2x
        let s = x.add(&y).add(&x.sub(&y));
        assert_eq!(s, x.scale(&rint(2)));
        // (x+1)(x-1) = x^2 - 1
        let one = MultiPoly::constant(Arc::clone(&vars), rone());
        let prod = x.add(&one).mul(&x.sub(&one));
        assert_eq!(prod, x.mul(&x).sub(&one));
        // x * 0 = 0 with empty term map
        let z = x.mul(&MultiPoly::zero(Arc::clone(&vars)));
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn auto_union_of_variable_sets() {
        let x = MultiPoly::variable(ctx(&["x"]), 0);
        let y = MultiPoly::variable(ctx(&["y"]), 0);
        let s = x.add(&y);
        assert_eq!(s.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(s.num_terms(), 2);
    }

    #[test]
    fn degrevlex_vs_lex_leading() {
        // f = x*z + y^2 with x > y > z: lex leader x*z, degrevlex leader y^2
        let vars = ctx(&["x", "y", "z"]);
        let f = MultiPoly::from_terms(
            Arc::clone(&vars),
            vec![(vec![1, 0, 1], rone()), (vec![0, 2, 0], rone())],
        );
        assert_eq!(f.leading(MonomialOrder::Lex).unwrap().0, &vec![1, 0, 1]);
        assert_eq!(f.leading(MonomialOrder::DegRevLex).unwrap().0, &vec![0, 2, 0]);
    }

    #[test]
    fn eval_and_substitute() {
        let vars = ctx(&["x", "y"]);
        let f = MultiPoly::from_terms(
            Arc::clone(&vars),
            vec![(vec![2, 0], rint(1)), (vec![0, 1], rint(-3))],
        );
        assert_eq!(f.eval(&[rint(2), rint(1)]), rint(1));
        let g = f.substitute(&BTreeMap::from([(0, rint(2))]));
        assert_eq!(g.eval(&[rint(0), rint(1)]), rint(1));
    }

    #[test]
    fn display_canonical() {
        let vars = ctx(&["x", "y"]);
        let f = MultiPoly::from_terms(
            Arc::clone(&vars),
            vec![
                (vec![0, 0], rint(-1)),
                (vec![2, 0], rint(1)),
                (vec![1, 1], rint(-2)),
            ],
        );
        assert_eq!(f.to_string(), "x^2 - 2*x*y - 1");
    }
}
