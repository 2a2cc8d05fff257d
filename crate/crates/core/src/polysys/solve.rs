//! Deciding isomorphism of two structures.
//!
//! Pipeline: invariant fingerprints give fast negative certificates; a
//! bounded rational witness search over the linear space of twist
//! intertwiners gives positive certificates; a Groebner triviality test
//! refutes isomorphism over the algebraic closure; and a lex-basis
//! back-substitution tries to extract a rational witness from a nontrivial
//! ideal. Anything unresolved within budget is reported as unknown, never
//! guessed.
//!
//! The quadratic part of the isomorphism system is solved on the
//! intertwiner subspace: a candidate map must already satisfy the two
//! linear twist conditions, so the search runs in the (usually few)
//! coordinates of that nullspace. Its basis is in reduced-echelon form,
//! which makes the coordinates of any intertwiner equal to its values at
//! the free matrix positions; an integer-entry witness therefore has
//! integer coordinates of the same size.

use crate::algebra::{is_morphism, BiHomAlgebra};
use crate::exact::unipoly::UniPoly;
use crate::exact::{rat, rint, rone, rzero, Matrix, MonomialOrder, MultiPoly, Rational};
use crate::invariants::fingerprints_distinguish;
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

use super::buchberger::{buchberger, ideal_is_trivial, trivial_constant, GroebnerError};
use super::{Ideal, PolysysError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoBudget {
    /// Reduction-step limit for each Groebner run.
    pub groebner_steps: u64,
    /// Values tried per free coordinate in the witness grid search.
    pub grid: Vec<Rational>,
    /// Upper bound on grid candidates before the grid layer is skipped.
    pub grid_cap: u64,
    /// Node limit for lex back-substitution.
    pub extraction_nodes: u64,
    /// Values tried for unconstrained variables during extraction.
    pub trials: Vec<Rational>,
}

impl Default for IsoBudget {
    fn default() -> Self {
        // default grid: entries -2..=2 scaled by denominators 1 and 2;
        // integers first, small magnitude first
        let mut grid: Vec<Rational> = vec![rzero()];
        for m in [1i64, -1, 2, -2] {
            grid.push(rint(m));
        }
        for m in [1i64, -1, 3, -3] {
            grid.push(rat(m, 2));
        }
        IsoBudget {
            groebner_steps: 1_000_000,
            grid,
            grid_cap: 400_000,
            extraction_nodes: 50_000,
            trials: vec![
                rzero(),
                rone(),
                rint(-1),
                rint(2),
                rint(-2),
                rat(1, 2),
                rat(-1, 2),
                rint(3),
                rint(-3),
            ],
        }
    }
}

impl IsoBudget {
    /// Integer-only grid covering [-bound, bound], used by property suites
    /// that transport by integer matrices.
    pub fn with_integer_grid(mut self, bound: i64) -> Self {
        let mut g = vec![rzero()];
        for m in 1..=bound {
            g.push(rint(m));
            g.push(rint(-m));
        }
        self.grid = g;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoCertificate {
    /// A transport invariant differs; the field name and both values.
    InvariantMismatch {
        field: String,
        left: String,
        right: String,
    },
    /// The reduced isomorphism ideal contains this nonzero constant, so the
    /// system is unsolvable over the algebraic closure.
    TrivialIdeal { constant: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic(Matrix),
    NotIsomorphic(IsoCertificate),
    Unknown(String),
}

impl IsoVerdict {
    pub fn status_tag(&self) -> &'static str {
        match self {
            IsoVerdict::Isomorphic(_) => "isomorphic",
            IsoVerdict::NotIsomorphic(_) => "not_isomorphic",
            IsoVerdict::Unknown(_) => "unknown",
        }
    }
}

/// Basis of the linear space of maps intertwining both twists:
/// `{ D : alpha_b D = D alpha_a, beta_b D = D beta_a }`, reduced-echelon
/// nullspace over the flattened entries (r*n + c).
pub fn intertwiner_basis(a: &BiHomAlgebra, b: &BiHomAlgebra) -> Vec<Matrix> {
    let n = a.dim();
    let mut rows = Matrix::zero(2 * n * n, n * n);
    let mut r = 0;
    for (ta, tb) in [(a.alpha(), b.alpha()), (a.beta(), b.beta())] {
        for p in 0..n {
            for i in 0..n {
                for k in 0..n {
                    let mut cur = rows.get(r, k * n + i).clone();
                    cur += tb.get(p, k);
                    rows.set(r, k * n + i, cur);
                    let mut cur = rows.get(r, p * n + k).clone();
                    cur -= ta.get(k, i);
                    rows.set(r, p * n + k, cur);
                }
                r += 1;
            }
        }
    }
    rows.nullspace()
        .into_iter()
        .map(|flat| {
            let mut m = Matrix::zero(n, n);
            for row in 0..n {
                for col in 0..n {
                    m.set(row, col, flat[row * n + col].clone());
                }
            }
            m
        })
        .collect()
}

fn combine(basis: &[Matrix], lambda: &[Rational], n: usize) -> Matrix {
    let mut m = Matrix::zero(n, n);
    for (e, l) in basis.iter().zip(lambda) {
        if l.is_zero() {
            continue;
        }
        m = m.add(&e.scale(l)).unwrap();
    }
    m
}

fn validates(a: &BiHomAlgebra, b: &BiHomAlgebra, d: &Matrix) -> bool {
    !d.det().expect("square").is_zero()
        && is_morphism(a, b, d).map(|c| c.is_pass()).unwrap_or(false)
}

/// The isomorphism system restricted to the intertwiner subspace: morphism
/// equations in the lambda coordinates plus the invertibility generator
/// `det(D(lambda)) t - 1`. Variable `t` comes first so a lex basis
/// eliminates it.
fn lambda_system(
    a: &BiHomAlgebra,
    b: &BiHomAlgebra,
    basis: &[Matrix],
    order: MonomialOrder,
) -> Ideal {
    let n = a.dim();
    let ell = basis.len();
    let mut names = vec!["t".to_string()];
    for s in 0..ell {
        names.push(format!("l_{}", s + 1));
    }
    let vars = Arc::new(names);
    let lam = |s: usize| MultiPoly::variable(Arc::clone(&vars), s + 1);
    let d_entry = |r: usize, c: usize| -> MultiPoly {
        let mut e = MultiPoly::zero(Arc::clone(&vars));
        for (s, mat) in basis.iter().enumerate() {
            let v = mat.get(r, c);
            if !v.is_zero() {
                e = e.add(&lam(s).scale(v));
            }
        }
        e
    };
    let mut generators = Vec::new();
    let mut push = |g: MultiPoly| {
        if !g.is_zero() {
            generators.push(g);
        }
    };
    for i in 0..n {
        for j in 0..n {
            for p in 0..n {
                let mut g = MultiPoly::zero(Arc::clone(&vars));
                for k in 0..n {
                    let ca = a.mul_tensor().get(i, j, k);
                    if !ca.is_zero() {
                        g = g.add(&d_entry(p, k).scale(ca));
                    }
                    for q in 0..n {
                        let cb = b.mul_tensor().get(k, q, p);
                        if !cb.is_zero() {
                            g = g.sub(&d_entry(k, i).mul(&d_entry(q, j)).scale(cb));
                        }
                    }
                }
                push(g);
            }
        }
    }
    let entries: Vec<Vec<MultiPoly>> = (0..n)
        .map(|r| (0..n).map(|c| d_entry(r, c)).collect())
        .collect();
    let det = super::det_symbolic(&entries, &vars);
    let t = MultiPoly::variable(Arc::clone(&vars), 0);
    push(det.mul(&t).sub(&MultiPoly::constant(Arc::clone(&vars), rone())));
    Ideal {
        generators,
        vars: vars.as_ref().clone(),
        order,
    }
}

/// Decides whether two algebras are isomorphic. Positive answers carry a
/// verified invertible witness; negative answers carry either an invariant
/// mismatch or a trivial-ideal certificate (refuting isomorphism over the
/// algebraic closure); everything else degrades to unknown with a reason.
pub fn decide_isomorphic(
    a: &BiHomAlgebra,
    b: &BiHomAlgebra,
    budget: &IsoBudget,
) -> Result<IsoVerdict, PolysysError> {
    if a.dim() != b.dim() {
        return Err(PolysysError::DimMismatch(a.dim(), b.dim()));
    }
    let n = a.dim();

    // identical structure constants: the identity map is a witness
    if a.mul_tensor() == b.mul_tensor() && a.alpha() == b.alpha() && a.beta() == b.beta() {
        return Ok(IsoVerdict::Isomorphic(Matrix::identity(n)));
    }

    if let Some(m) = fingerprints_distinguish(a, b) {
        return Ok(IsoVerdict::NotIsomorphic(IsoCertificate::InvariantMismatch {
            field: m.field.to_string(),
            left: m.left,
            right: m.right,
        }));
    }

    let basis = intertwiner_basis(a, b);
    let ell = basis.len();

    // bounded grid search over the free coordinates; fall back to the
    // integer sub-grid when the full grid would blow the cap
    if ell > 0 {
        let full: u128 = (budget.grid.len() as u128).checked_pow(ell as u32).unwrap_or(u128::MAX);
        let integers: Vec<Rational> = budget
            .grid
            .iter()
            .filter(|g| g.denom().is_one())
            .cloned()
            .collect();
        let int_count: u128 = (integers.len() as u128)
            .checked_pow(ell as u32)
            .unwrap_or(u128::MAX);
        let grid: Option<&[Rational]> = if full <= budget.grid_cap as u128 {
            Some(&budget.grid)
        } else if int_count <= budget.grid_cap as u128 {
            Some(&integers)
        } else {
            None
        };
        if let Some(grid) = grid {
            let mut odometer = vec![0usize; ell];
            loop {
                let lambda: Vec<Rational> =
                    odometer.iter().map(|&ix| grid[ix].clone()).collect();
                if lambda.iter().any(|l| !l.is_zero()) {
                    let d = combine(&basis, &lambda, n);
                    if validates(a, b, &d) {
                        return Ok(IsoVerdict::Isomorphic(d));
                    }
                }
                let mut pos = 0;
                loop {
                    if pos == ell {
                        break;
                    }
                    odometer[pos] += 1;
                    if odometer[pos] < grid.len() {
                        break;
                    }
                    odometer[pos] = 0;
                    pos += 1;
                }
                if pos == ell {
                    break;
                }
            }
        }
    }

    // ideal-theoretic layer on the intertwiner coordinates
    let ideal = lambda_system(a, b, &basis, MonomialOrder::DegRevLex);
    let gb = match buchberger(&ideal, budget.groebner_steps) {
        Ok(gb) => gb,
        Err(GroebnerError::BudgetExceeded { limit }) => {
            return Ok(IsoVerdict::Unknown(format!(
                "groebner budget of {limit} steps exceeded"
            )))
        }
    };
    if ideal_is_trivial(&gb) {
        return Ok(IsoVerdict::NotIsomorphic(IsoCertificate::TrivialIdeal {
            constant: trivial_constant(&gb).expect("trivial basis has a constant"),
        }));
    }

    // rational point extraction from the lex basis
    let lex_ideal = lambda_system(a, b, &basis, MonomialOrder::Lex);
    match buchberger(&lex_ideal, budget.groebner_steps) {
        Err(GroebnerError::BudgetExceeded { limit }) => Ok(IsoVerdict::Unknown(format!(
            "lex groebner budget of {limit} steps exceeded"
        ))),
        Ok(lex_gb) => {
            let mut extractor = Extractor {
                generators: &lex_gb.basis,
                trials: &budget.trials,
                nodes_left: budget.extraction_nodes,
            };
            let mut assignment = vec![None; lex_ideal.vars.len()];
            let validate = |point: &[Rational]| -> Option<Matrix> {
                let lambda = &point[1..];
                let d = combine(&basis, lambda, n);
                validates(a, b, &d).then_some(d)
            };
            match extractor.search(&mut assignment, &validate) {
                Some(d) => Ok(IsoVerdict::Isomorphic(d)),
                None => Ok(IsoVerdict::Unknown(
                    "nontrivial ideal but no rational witness found within budget".into(),
                )),
            }
        }
    }
}

struct Extractor<'a> {
    generators: &'a [MultiPoly],
    trials: &'a [Rational],
    nodes_left: u64,
}

impl<'a> Extractor<'a> {
    /// Back-substitution over a lex basis: assign variables from the
    /// smallest up, branching on rational roots of the univariate
    /// constraints (or on trial values when a variable is unconstrained).
    fn search<T>(
        &mut self,
        assignment: &mut Vec<Option<Rational>>,
        validate: &impl Fn(&[Rational]) -> Option<T>,
    ) -> Option<T> {
        if self.nodes_left == 0 {
            return None;
        }
        self.nodes_left -= 1;

        let next = match assignment.iter().rposition(|v| v.is_none()) {
            None => {
                let point: Vec<Rational> =
                    assignment.iter().map(|v| v.clone().unwrap()).collect();
                for g in self.generators {
                    if !g.eval(&point).is_zero() {
                        return None;
                    }
                }
                return validate(&point);
            }
            Some(v) => v,
        };

        let subs: BTreeMap<usize, Rational> = assignment
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.clone().map(|x| (i, x)))
            .collect();

        let mut univariate: Vec<UniPoly> = Vec::new();
        for g in self.generators {
            let reduced = g.substitute(&subs);
            if reduced.is_zero() {
                continue;
            }
            let mut only_next = true;
            for (m, _) in reduced.terms() {
                for (var, &e) in m.iter().enumerate() {
                    if e > 0 && var != next {
                        only_next = false;
                    }
                }
            }
            if only_next {
                if reduced.is_constant() {
                    // nonzero constant: contradiction on this branch
                    return None;
                }
                let mut coeffs = vec![rzero(); (reduced.total_degree() + 1) as usize];
                for (m, c) in reduced.terms() {
                    coeffs[m[next] as usize] += c;
                }
                univariate.push(UniPoly::from_coeffs(coeffs));
            }
        }

        let candidates: Vec<Rational> = if univariate.is_empty() {
            self.trials.to_vec()
        } else {
            let mut roots = rational_roots(&univariate[0]);
            roots.retain(|r| univariate[1..].iter().all(|u| u.eval(r).is_zero()));
            roots
        };

        for value in candidates {
            assignment[next] = Some(value);
            if let Some(found) = self.search(assignment, validate) {
                return Some(found);
            }
            assignment[next] = None;
            if self.nodes_left == 0 {
                return None;
            }
        }
        None
    }
}

fn bigint_perfect_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let s = x.sqrt();
    (&s * &s == *x).then_some(s)
}

fn rational_perfect_sqrt(x: &Rational) -> Option<Rational> {
    let num = bigint_perfect_sqrt(x.numer())?;
    let den = bigint_perfect_sqrt(x.denom())?;
    Some(Rational::new(num, den))
}

/// All rational roots of a nonzero univariate polynomial; complete for
/// degrees one and two, and complete for higher degrees whenever the
/// extreme coefficients factor within the trial-division bound.
pub fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    let mut roots: Vec<Rational> = Vec::new();
    let mut work = p.clone();
    if work.is_zero() {
        return roots;
    }
    // strip factors of x
    while work.coeff(0).is_zero() && !work.is_zero() {
        if work.degree() == Some(0) {
            break;
        }
        let deg = work.degree().unwrap();
        let coeffs: Vec<Rational> = (1..=deg).map(|i| work.coeff(i)).collect();
        work = UniPoly::from_coeffs(coeffs);
        if !roots.contains(&rzero()) {
            roots.push(rzero());
        }
    }
    match work.degree() {
        None | Some(0) => {}
        Some(1) => {
            roots.push(-work.coeff(0) / work.coeff(1));
        }
        Some(2) => {
            let (a, b, c) = (work.coeff(2), work.coeff(1), work.coeff(0));
            let disc = &b * &b - rint(4) * &a * &c;
            if let Some(s) = rational_perfect_sqrt(&disc) {
                let two_a = rint(2) * &a;
                roots.push((-&b + &s) / &two_a);
                let second = (-&b - &s) / &two_a;
                if !roots.contains(&second) {
                    roots.push(second);
                }
            }
        }
        Some(_) => {
            // integer primitive form, then the rational root bound
            let mut denom_lcm = BigInt::one();
            let deg = work.degree().unwrap();
            for i in 0..=deg {
                denom_lcm = num::integer::lcm(denom_lcm, work.coeff(i).denom().clone());
            }
            let ints: Vec<BigInt> = (0..=deg)
                .map(|i| (work.coeff(i) * Rational::from_integer(denom_lcm.clone())).to_integer())
                .collect();
            let a0 = ints[0].abs();
            let ad = ints[deg].abs();
            let ps = bounded_divisors(&a0, 4000);
            let qs = bounded_divisors(&ad, 4000);
            let mut seen = Vec::new();
            for p_div in &ps {
                for q_div in &qs {
                    for sign in [1i64, -1] {
                        let cand = Rational::new(p_div * BigInt::from(sign), q_div.clone());
                        if !seen.contains(&cand) {
                            seen.push(cand.clone());
                            if work.eval(&cand).is_zero() {
                                roots.push(cand);
                            }
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Divisors of |x| up to a count cap, via trial division; may be incomplete
/// for large inputs (the caller treats missing roots as "unknown", never as
/// a negative answer).
fn bounded_divisors(x: &BigInt, cap: usize) -> Vec<BigInt> {
    let mut divs: Vec<BigInt> = vec![BigInt::one()];
    if x.is_zero() {
        return divs;
    }
    let mut remaining = x.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= remaining && d < BigInt::from(1_000_000) {
        let mut mult = 0;
        while (&remaining % &d).is_zero() {
            remaining /= &d;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d.clone(), mult));
        }
        d += 1;
    }
    if remaining > BigInt::one() {
        factors.push((remaining, 1));
    }
    for (prime, mult) in factors {
        let current = divs.clone();
        let mut power = BigInt::one();
        for _ in 0..mult {
            power *= &prime;
            for base in &current {
                let nd = base * &power;
                if !divs.contains(&nd) {
                    divs.push(nd);
                }
                if divs.len() > cap {
                    return divs;
                }
            }
        }
    }
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rone, Tensor3};

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

    #[test]
    fn rational_roots_examples() {
        let p = |c: &[i64]| UniPoly::from_coeffs(c.iter().map(|&x| rint(x)).collect());
        assert_eq!(rational_roots(&p(&[-1, 0, 1])), vec![rint(-1), rint(1)]);
        assert_eq!(rational_roots(&p(&[1, 0, 1])), Vec::<Rational>::new());
        assert_eq!(rational_roots(&p(&[0, 2, 0, 1])), vec![rint(0)]);
        // 2x^3 - 3x^2 - 11x + 6 = (2x - 1)(x + 2)(x - 3)
        assert_eq!(
            rational_roots(&p(&[6, -11, -3, 2])),
            vec![rint(-2), rat(1, 2), rint(3)]
        );
    }

    #[test]
    fn reflexive_and_transport_cases() {
        let a = idempotent_pair();
        let budget = IsoBudget::default();
        assert_eq!(
            decide_isomorphic(&a, &a, &budget).unwrap(),
            IsoVerdict::Isomorphic(Matrix::identity(2))
        );
        let phi = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let b = a.transport(&phi).unwrap();
        let IsoVerdict::Isomorphic(w) = decide_isomorphic(&a, &b, &budget).unwrap() else {
            panic!("transported copy must be isomorphic");
        };
        assert!(validates(&a, &b, &w));
    }

    #[test]
    fn invariant_mismatch_certificate() {
        let verdict =
            decide_isomorphic(&idempotent_pair(), &nilpotent_shear(), &IsoBudget::default())
                .unwrap();
        match verdict {
            IsoVerdict::NotIsomorphic(IsoCertificate::InvariantMismatch { field, .. }) => {
                assert_eq!(field, "alpha_invariant_factors");
            }
            other => panic!("expected invariant mismatch, got {other:?}"),
        }
    }

    /// e1 unit, e2*e2 = 0: the dual-number plane.
    fn dual_numbers() -> BiHomAlgebra {
        let mut mul = Tensor3::zero(2);
        mul.set(0, 0, 0, rone());
        mul.set(0, 1, 1, rone());
        mul.set(1, 0, 1, rone());
        BiHomAlgebra::new(mul, Matrix::identity(2), Matrix::identity(2), None, None).unwrap()
    }

    #[test]
    fn trivial_ideal_certificate() {
        // split pair vs dual numbers: identical fingerprints, but one has a
        // nonzero nilpotent and the other does not, over any field
        let a = idempotent_pair();
        let b = dual_numbers();
        assert!(crate::invariants::fingerprints_distinguish(&a, &b).is_none());
        let verdict = decide_isomorphic(&a, &b, &IsoBudget::default()).unwrap();
        match verdict {
            IsoVerdict::NotIsomorphic(IsoCertificate::TrivialIdeal { constant }) => {
                assert!(!constant.is_zero());
            }
            IsoVerdict::NotIsomorphic(other) => {
                panic!("expected a trivial-ideal certificate, got {other:?}")
            }
            IsoVerdict::Isomorphic(_) => panic!("distinct algebras reported isomorphic"),
            IsoVerdict::Unknown(r) => panic!("expected a definite answer, got unknown: {r}"),
        }
    }

    #[test]
    fn closure_isomorphic_but_no_rational_witness_is_unknown() {
        // split pair vs the golden-ratio field pattern e2*e2 = e1 + e2:
        // isomorphic over the algebraic closure (the quadratic splits) but
        // not over the rationals, so neither certificate can exist and the
        // honest verdict is unknown
        let a = idempotent_pair();
        let mut mul = Tensor3::zero(2);
        mul.set(0, 0, 0, rone());
        mul.set(0, 1, 1, rone());
        mul.set(1, 0, 1, rone());
        mul.set(1, 1, 0, rone());
        mul.set(1, 1, 1, rone());
        let b =
            BiHomAlgebra::new(mul, Matrix::identity(2), Matrix::identity(2), None, None).unwrap();
        assert!(crate::invariants::fingerprints_distinguish(&a, &b).is_none());
        let verdict = decide_isomorphic(&a, &b, &IsoBudget::default()).unwrap();
        assert!(matches!(verdict, IsoVerdict::Unknown(_)), "got {verdict:?}");
    }

    #[test]
    fn extraction_finds_half_integer_witness() {
        // transport by a matrix with entries outside the grid forces the
        // extraction layer to do the work
        let a = nilpotent_shear();
        let phi = Matrix::from_rows(vec![
            vec![rint(5), rint(0)],
            vec![rint(0), rint(5)],
        ])
        .unwrap();
        let b = a.transport(&phi).unwrap();
        let mut budget = IsoBudget::default();
        budget.grid = vec![rzero(), rone(), rint(-1)]; // too small to contain 5
        let verdict = decide_isomorphic(&a, &b, &budget).unwrap();
        match verdict {
            IsoVerdict::Isomorphic(w) => assert!(validates(&a, &b, &w)),
            other => panic!("expected extraction to find a witness, got {other:?}"),
        }
    }


    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = idempotent_pair();
        let tiny = BiHomAlgebra::new(
            Tensor3::zero(1),
            Matrix::identity(1),
            Matrix::identity(1),
            None,
            None,
        )
        .unwrap();
        assert!(matches!(
            decide_isomorphic(&a, &tiny, &IsoBudget::default()),
            Err(PolysysError::DimMismatch(2, 1))
        ));
    }
}
