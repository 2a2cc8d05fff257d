//! BiHom-associative algebras: structure data, axiom checking, and the
//! constructions that stay inside the class (transport along an invertible
//! map, twisting by a self-morphism, direct sums, unital extension, and
//! untwisting back to an ordinary associative product).
//!
//! An algebra is a tuple (A, mul, alpha, beta) on a based vector space. The
//! defining identities, checked on basis elements (bilinearity makes that
//! equivalent to the universally quantified statements):
//!
//!   mul(alpha(x), mul(y, z)) = mul(mul(x, y), beta(z))
//!   alpha(mul(x, y)) = mul(alpha(x), alpha(y)), same for beta
//!   alpha . beta = beta . alpha
//!
//! A unit u satisfies mul(x, u) = alpha(x), mul(u, x) = beta(x) and is fixed
//! by both twists.

use crate::exact::{vec_ops, Matrix, Rational, ShapeError, Tensor3};
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("twist maps are not invertible")]
    TwistsNotInvertible,
    #[error("transport map is singular")]
    SingularTransport,
    #[error("twisting map is not a self-morphism: {0}")]
    NotSelfMorphism(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("spanning set is linearly dependent")]
    DependentSpan,
    #[error("unit vector missing where required")]
    MissingUnit,
}

/// Structure constants plus twists; `mul.fiber(i, j)` is the coordinate
/// vector of the product of basis elements i and j.
#[derive(Clone, PartialEq, Eq)]
pub struct BiHomAlgebra {
    dim: usize,
    mul: Tensor3,
    alpha: Matrix,
    beta: Matrix,
    unit: Option<Vec<Rational>>,
    label: Option<String>,
}

impl std::fmt::Debug for BiHomAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BiHomAlgebra(dim {}, label {:?})",
            self.dim,
            self.label.as_deref().unwrap_or("-")
        )
    }
}

impl BiHomAlgebra {
    pub fn new(
        mul: Tensor3,
        alpha: Matrix,
        beta: Matrix,
        unit: Option<Vec<Rational>>,
        label: Option<String>,
    ) -> Result<Self, ShapeError> {
        let dim = mul.dim();
        for (name, m) in [("alpha", &alpha), ("beta", &beta)] {
            if m.rows() != dim || m.cols() != dim {
                return Err(ShapeError::Mismatch(format!(
                    "{name} must be {dim}x{dim}, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(ShapeError::Mismatch(format!(
                    "unit must have length {dim}, got {}",
                    u.len()
                )));
            }
        }
        Ok(BiHomAlgebra {
            dim,
            mul,
            alpha,
            beta,
            unit,
            label,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul_tensor(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn unit(&self) -> Option<&[Rational]> {
        self.unit.as_deref()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_unit(mut self, unit: Option<Vec<Rational>>) -> Self {
        self.unit = unit;
        self
    }

    /// Bilinear product of coordinate vectors:
    /// `z_k = sum_{i,j} x_i y_j C[i][j][k]`.
    pub fn eval_mul(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, ShapeError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(ShapeError::Mismatch(format!(
                "eval_mul expects vectors of length {}, got {} and {}",
                self.dim,
                x.len(),
                y.len()
            )));
        }
        let mut out = vec_ops::zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let scale = xi * yj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.mul.get(i, j, k);
                    if !c.is_zero() {
                        *slot += &scale * c;
                    }
                }
            }
        }
        Ok(out)
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        self.mul.fiber(i, j).to_vec()
    }

    fn apply_alpha(&self, v: &[Rational]) -> Vec<Rational> {
        self.alpha.apply(v).expect("alpha shape verified at construction")
    }

    fn apply_beta(&self, v: &[Rational]) -> Vec<Rational> {
        self.beta.apply(v).expect("beta shape verified at construction")
    }

    /// Evaluates every defining identity on basis elements. Failures carry a
    /// concrete witness, re-evaluatable through `eval_mul`; witnesses are the
    /// first failing tuple in lexicographic order.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.dim;
        let mut report = AxiomReport {
            bihom_associative: Check::Pass,
            alpha_multiplicative: Check::Pass,
            beta_multiplicative: Check::Pass,
            twists_commute: Check::Pass,
            unit_laws: None,
        };

        'assoc: for i in 0..n {
            let alpha_ei = self.apply_alpha(&vec_ops::basis(n, i));
            for j in 0..n {
                for k in 0..n {
                    let inner = self.basis_product(j, k);
                    let lhs = self.eval_mul(&alpha_ei, &inner).unwrap();
                    let outer = self.basis_product(i, j);
                    let beta_ek = self.apply_beta(&vec_ops::basis(n, k));
                    let rhs = self.eval_mul(&outer, &beta_ek).unwrap();
                    if lhs != rhs {
                        report.bihom_associative = Check::Fail(TripleWitness {
                            triple: (i, j, k),
                            lhs,
                            rhs,
                        });
                        break 'assoc;
                    }
                }
            }
        }

        report.alpha_multiplicative = self.check_multiplicative(&self.alpha);
        report.beta_multiplicative = self.check_multiplicative(&self.beta);

        let ab = self.alpha.mul(&self.beta).unwrap();
        let ba = self.beta.mul(&self.alpha).unwrap();
        if ab != ba {
            report.twists_commute = Check::Fail(CommuteWitness { lhs: ab, rhs: ba });
        }

        if let Some(u) = &self.unit {
            report.unit_laws = Some(self.check_unit_laws(u));
        }

        report
    }

    /// `map(x*y) = map(x)*map(y)` on basis pairs (also used for the
    /// bialgebra-side multiplicativity of psi and omega).
    pub(crate) fn check_multiplicative(&self, map: &Matrix) -> Check<PairWitness> {
        let n = self.dim;
        for i in 0..n {
            let mapped_i = map.apply(&vec_ops::basis(n, i)).unwrap();
            for j in 0..n {
                let lhs = map.apply(&self.basis_product(i, j)).unwrap();
                let mapped_j = map.apply(&vec_ops::basis(n, j)).unwrap();
                let rhs = self.eval_mul(&mapped_i, &mapped_j).unwrap();
                if lhs != rhs {
                    return Check::Fail(PairWitness {
                        pair: (i, j),
                        lhs,
                        rhs,
                    });
                }
            }
        }
        Check::Pass
    }

    fn check_unit_laws(&self, u: &[Rational]) -> Check<UnitWitness> {
        let n = self.dim;
        for i in 0..n {
            let ei = vec_ops::basis(n, i);
            let got = self.eval_mul(&ei, u).unwrap();
            let want = self.apply_alpha(&ei);
            if got != want {
                return Check::Fail(UnitWitness {
                    law: UnitLaw::RightMulIsAlpha,
                    index: Some(i),
                    lhs: got,
                    rhs: want,
                });
            }
            let got = self.eval_mul(u, &ei).unwrap();
            let want = self.apply_beta(&ei);
            if got != want {
                return Check::Fail(UnitWitness {
                    law: UnitLaw::LeftMulIsBeta,
                    index: Some(i),
                    lhs: got,
                    rhs: want,
                });
            }
        }
        let au = self.apply_alpha(u);
        if au != u {
            return Check::Fail(UnitWitness {
                law: UnitLaw::AlphaFixesUnit,
                index: None,
                lhs: au,
                rhs: u.to_vec(),
            });
        }
        let bu = self.apply_beta(u);
        if bu != u {
            return Check::Fail(UnitWitness {
                law: UnitLaw::BetaFixesUnit,
                index: None,
                lhs: bu,
                rhs: u.to_vec(),
            });
        }
        Check::Pass
    }

    /// Structure transport along an invertible map: the result has product
    /// `phi . mul . (phi^-1 (x) phi^-1)` and conjugated twists, so `phi`
    /// itself becomes an isomorphism onto the result. A unit is carried to
    /// `phi(u)`; whether it still satisfies the unit laws is re-checked by
    /// `check_axioms`, not assumed.
    pub fn transport(&self, phi: &Matrix) -> Result<BiHomAlgebra, AlgebraError> {
        if phi.rows() != self.dim || phi.cols() != self.dim {
            return Err(ShapeError::Mismatch("transport map shape".into()).into());
        }
        let inv = phi
            .inverse()
            .map_err(AlgebraError::Shape)?
            .ok_or(AlgebraError::SingularTransport)?;
        let n = self.dim;
        let mut mul = Tensor3::zero(n);
        for i in 0..n {
            let xi = inv.apply(&vec_ops::basis(n, i)).unwrap();
            for j in 0..n {
                let yj = inv.apply(&vec_ops::basis(n, j)).unwrap();
                let prod = self.eval_mul(&xi, &yj).unwrap();
                mul.set_fiber(i, j, &phi.apply(&prod).unwrap());
            }
        }
        let alpha = phi.mul(&self.alpha).unwrap().mul(&inv).unwrap();
        let beta = phi.mul(&self.beta).unwrap().mul(&inv).unwrap();
        let unit = self
            .unit
            .as_ref()
            .map(|u| phi.apply(u).expect("unit length verified"));
        let label = self.label.as_ref().map(|l| format!("{l} (transported)"));
        Ok(BiHomAlgebra {
            dim: n,
            mul,
            alpha,
            beta,
            unit,
            label,
        })
    }

    /// Twist by a self-morphism `gamma`: the product becomes
    /// `gamma . mul` and both twists are post-composed with `gamma`.
    /// The morphism precondition is verified, not trusted.
    pub fn yau_twist(&self, gamma: &Matrix) -> Result<BiHomAlgebra, AlgebraError> {
        if let Check::Fail(w) = is_morphism(self, self, gamma)? {
            return Err(AlgebraError::NotSelfMorphism(w.describe()));
        }
        let n = self.dim;
        let mut mul = Tensor3::zero(n);
        for i in 0..n {
            for j in 0..n {
                mul.set_fiber(i, j, &gamma.apply(self.mul.fiber(i, j)).unwrap());
            }
        }
        let alpha = gamma.mul(&self.alpha).unwrap();
        let beta = gamma.mul(&self.beta).unwrap();
        let label = self.label.as_ref().map(|l| format!("{l} (twisted)"));
        Ok(BiHomAlgebra {
            dim: n,
            mul,
            alpha,
            beta,
            unit: None,
            label,
        })
    }

    /// Componentwise product on the direct sum, with block-diagonal twists.
    /// The unit is the pair of units when both summands have one.
    pub fn direct_sum(&self, other: &BiHomAlgebra) -> BiHomAlgebra {
        let na = self.dim;
        let nb = other.dim;
        let n = na + nb;
        let mut mul = Tensor3::zero(n);
        for (i, j, k, v) in self.mul.iter_nonzero() {
            mul.set(i, j, k, v.clone());
        }
        for (i, j, k, v) in other.mul.iter_nonzero() {
            mul.set(na + i, na + j, na + k, v.clone());
        }
        let mut alpha = Matrix::zero(n, n);
        let mut beta = Matrix::zero(n, n);
        for r in 0..na {
            for c in 0..na {
                alpha.set(r, c, self.alpha.get(r, c).clone());
                beta.set(r, c, self.beta.get(r, c).clone());
            }
        }
        for r in 0..nb {
            for c in 0..nb {
                alpha.set(na + r, na + c, other.alpha.get(r, c).clone());
                beta.set(na + r, na + c, other.beta.get(r, c).clone());
            }
        }
        let unit = match (&self.unit, &other.unit) {
            (Some(ua), Some(ub)) => {
                let mut u = ua.clone();
                u.extend_from_slice(ub);
                Some(u)
            }
            _ => None,
        };
        BiHomAlgebra {
            dim: n,
            mul,
            alpha,
            beta,
            unit,
            label: None,
        }
    }

    /// Adjoins a unit vector `u` as a new basis element: products against u
    /// are defined by the unit laws, both twists fix u. The input must pass
    /// its own axioms first.
    pub fn unital_extension(&self) -> Result<BiHomAlgebra, AlgebraError> {
        if !self.check_axioms().passes() {
            return Err(AlgebraError::Precondition(
                "unital extension requires an input passing all axioms".into(),
            ));
        }
        let n = self.dim;
        let m = n + 1;
        let mut mul = Tensor3::zero(m);
        for (i, j, k, v) in self.mul.iter_nonzero() {
            mul.set(i, j, k, v.clone());
        }
        for i in 0..n {
            for k in 0..n {
                mul.set(i, n, k, self.alpha.get(k, i).clone());
                mul.set(n, i, k, self.beta.get(k, i).clone());
            }
        }
        mul.set(n, n, n, crate::exact::rone());
        let mut alpha = Matrix::zero(m, m);
        let mut beta = Matrix::zero(m, m);
        for r in 0..n {
            for c in 0..n {
                alpha.set(r, c, self.alpha.get(r, c).clone());
                beta.set(r, c, self.beta.get(r, c).clone());
            }
        }
        alpha.set(n, n, crate::exact::rone());
        beta.set(n, n, crate::exact::rone());
        let unit = Some(vec_ops::basis(m, n));
        let label = self.label.as_ref().map(|l| format!("{l} (unital extension)"));
        Ok(BiHomAlgebra {
            dim: m,
            mul,
            alpha,
            beta,
            unit,
            label,
        })
    }

    /// Recovers the compatible associative product when one exists:
    /// `mul'(x, y) = mul(alpha^-1 x, beta^-1 y)`, tested for plain
    /// associativity on all basis triples. The original product is then
    /// `mul(x, y) = mul'(alpha x, beta y)` by construction.
    pub fn untwist(&self) -> Result<UntwistOutcome, AlgebraError> {
        let alpha_inv = self
            .alpha
            .inverse()?
            .ok_or(AlgebraError::TwistsNotInvertible)?;
        let beta_inv = self
            .beta
            .inverse()?
            .ok_or(AlgebraError::TwistsNotInvertible)?;
        let n = self.dim;
        let mut untwisted = Tensor3::zero(n);
        for i in 0..n {
            let xi = alpha_inv.apply(&vec_ops::basis(n, i)).unwrap();
            for j in 0..n {
                let yj = beta_inv.apply(&vec_ops::basis(n, j)).unwrap();
                untwisted.set_fiber(i, j, &self.eval_mul(&xi, &yj).unwrap());
            }
        }
        // plain associativity of the candidate product
        let assoc_mul = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
            let mut out = vec_ops::zero(n);
            for (i, xi) in x.iter().enumerate() {
                for (j, yj) in y.iter().enumerate() {
                    if xi.is_zero() || yj.is_zero() {
                        continue;
                    }
                    let s = xi * yj;
                    for (k, slot) in out.iter_mut().enumerate() {
                        let c = untwisted.get(i, j, k);
                        if !c.is_zero() {
                            *slot += &s * c;
                        }
                    }
                }
            }
            out
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = assoc_mul(&vec_ops::basis(n, i), untwisted.fiber(j, k));
                    let rhs = assoc_mul(untwisted.fiber(i, j), &vec_ops::basis(n, k));
                    if lhs != rhs {
                        return Ok(UntwistOutcome::NotAssociativeType {
                            witness: (i, j, k),
                        });
                    }
                }
            }
        }
        Ok(UntwistOutcome::Associative(untwisted))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UntwistOutcome {
    Associative(Tensor3),
    NotAssociativeType { witness: (usize, usize, usize) },
}

/// Single-identity verdict with a concrete counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check<W> {
    Pass,
    Fail(W),
}

impl<W> Check<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Pass => None,
            Check::Fail(w) => Some(w),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleWitness {
    pub triple: (usize, usize, usize),
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub pair: (usize, usize),
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommuteWitness {
    pub lhs: Matrix,
    pub rhs: Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitLaw {
    RightMulIsAlpha,
    LeftMulIsBeta,
    AlphaFixesUnit,
    BetaFixesUnit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitWitness {
    pub law: UnitLaw,
    pub index: Option<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

/// Verdicts for every defining identity; `unit_laws` is `None` when no unit
/// vector is attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub bihom_associative: Check<TripleWitness>,
    pub alpha_multiplicative: Check<PairWitness>,
    pub beta_multiplicative: Check<PairWitness>,
    pub twists_commute: Check<CommuteWitness>,
    pub unit_laws: Option<Check<UnitWitness>>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.bihom_associative.is_pass()
            && self.alpha_multiplicative.is_pass()
            && self.beta_multiplicative.is_pass()
            && self.twists_commute.is_pass()
            && self.unit_laws.as_ref().map_or(true, Check::is_pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismIdentity {
    Product,
    AlphaIntertwines,
    BetaIntertwines,
    UnitImage,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismWitness {
    pub identity: MorphismIdentity,
    pub pair: Option<(usize, usize)>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

impl MorphismWitness {
    pub fn describe(&self) -> String {
        let site = match self.pair {
            Some((i, j)) => format!(" at basis pair (e{}, e{})", i + 1, j + 1),
            None => String::new(),
        };
        let law = match self.identity {
            MorphismIdentity::Product => "product identity",
            MorphismIdentity::AlphaIntertwines => "alpha intertwining",
            MorphismIdentity::BetaIntertwines => "beta intertwining",
            MorphismIdentity::UnitImage => "unit preservation",
        };
        format!("{law} violated{site}")
    }
}

/// Checks the three morphism identities of a linear map `phi : a -> b` on
/// basis elements: it carries products to products and intertwines both
/// twists.
pub fn is_morphism(
    a: &BiHomAlgebra,
    b: &BiHomAlgebra,
    phi: &Matrix,
) -> Result<Check<MorphismWitness>, ShapeError> {
    if phi.rows() != b.dim || phi.cols() != a.dim {
        return Err(ShapeError::Mismatch(format!(
            "morphism map must be {}x{}, got {}x{}",
            b.dim,
            a.dim,
            phi.rows(),
            phi.cols()
        )));
    }
    let n = a.dim;
    for i in 0..n {
        let phi_i = phi.apply(&vec_ops::basis(n, i)).unwrap();
        for j in 0..n {
            let phi_j = phi.apply(&vec_ops::basis(n, j)).unwrap();
            let lhs = phi.apply(a.mul.fiber(i, j)).unwrap();
            let rhs = b.eval_mul(&phi_i, &phi_j).unwrap();
            if lhs != rhs {
                return Ok(Check::Fail(MorphismWitness {
                    identity: MorphismIdentity::Product,
                    pair: Some((i, j)),
                    lhs,
                    rhs,
                }));
            }
        }
    }
    let lhs = b.alpha.mul(phi).unwrap();
    let rhs = phi.mul(&a.alpha).unwrap();
    if lhs != rhs {
        return Ok(Check::Fail(MorphismWitness {
            identity: MorphismIdentity::AlphaIntertwines,
            pair: None,
            lhs: lhs.entries().to_vec(),
            rhs: rhs.entries().to_vec(),
        }));
    }
    let lhs = b.beta.mul(phi).unwrap();
    let rhs = phi.mul(&a.beta).unwrap();
    if lhs != rhs {
        return Ok(Check::Fail(MorphismWitness {
            identity: MorphismIdentity::BetaIntertwines,
            pair: None,
            lhs: lhs.entries().to_vec(),
            rhs: rhs.entries().to_vec(),
        }));
    }
    Ok(Check::Pass)
}

/// Morphism check that additionally demands `phi(u_a) = u_b`; both algebras
/// must carry units.
pub fn is_unital_morphism(
    a: &BiHomAlgebra,
    b: &BiHomAlgebra,
    phi: &Matrix,
) -> Result<Check<MorphismWitness>, AlgebraError> {
    let (Some(ua), Some(ub)) = (&a.unit, &b.unit) else {
        return Err(AlgebraError::MissingUnit);
    };
    let image = phi.apply(ua).map_err(AlgebraError::Shape)?;
    if &image != ub {
        return Ok(Check::Fail(MorphismWitness {
            identity: MorphismIdentity::UnitImage,
            pair: None,
            lhs: image,
            rhs: ub.clone(),
        }));
    }
    is_morphism(a, b, phi).map_err(AlgebraError::Shape)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureWitness {
    pub kind: ClosureKind,
    pub indexes: (usize, Option<usize>),
    pub escaped: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureKind {
    Product,
    Alpha,
    Beta,
}

/// Closure of an independent spanning set under the product and both twists.
pub fn is_subalgebra(
    a: &BiHomAlgebra,
    span: &[Vec<Rational>],
) -> Result<Check<ClosureWitness>, AlgebraError> {
    for v in span {
        if v.len() != a.dim {
            return Err(ShapeError::Mismatch("span vector length".into()).into());
        }
    }
    // columns = span vectors; membership tests solve against this matrix
    let mut span_matrix = Matrix::zero(a.dim, span.len());
    for (c, v) in span.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            span_matrix.set(r, c, x.clone());
        }
    }
    if span_matrix.rank() != span.len() {
        return Err(AlgebraError::DependentSpan);
    }
    let contains = |v: &[Rational]| span_matrix.spans(v).unwrap();
    for (i, v) in span.iter().enumerate() {
        for (j, w) in span.iter().enumerate() {
            let prod = a.eval_mul(v, w).unwrap();
            if !contains(&prod) {
                return Ok(Check::Fail(ClosureWitness {
                    kind: ClosureKind::Product,
                    indexes: (i, Some(j)),
                    escaped: prod,
                }));
            }
        }
        let av = a.alpha.apply(v).unwrap();
        if !contains(&av) {
            return Ok(Check::Fail(ClosureWitness {
                kind: ClosureKind::Alpha,
                indexes: (i, None),
                escaped: av,
            }));
        }
        let bv = a.beta.apply(v).unwrap();
        if !contains(&bv) {
            return Ok(Check::Fail(ClosureWitness {
                kind: ClosureKind::Beta,
                indexes: (i, None),
                escaped: bv,
            }));
        }
    }
    Ok(Check::Pass)
}

/// Basis of the graph of `phi : a -> b` inside the direct sum, one vector
/// `(e_i, phi(e_i))` per basis element of `a`.
pub fn graph_basis(a_dim: usize, b_dim: usize, phi: &Matrix) -> Vec<Vec<Rational>> {
    (0..a_dim)
        .map(|i| {
            let mut v = vec_ops::basis(a_dim + b_dim, i);
            let image = phi.apply(&vec_ops::basis(a_dim, i)).unwrap();
            for (r, x) in image.iter().enumerate() {
                v[a_dim + r] = x.clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint, rone};

    fn tensor_from(dim: usize, products: &[(usize, usize, &[(usize, i64)])]) -> Tensor3 {
        let mut t = Tensor3::zero(dim);
        for &(i, j, terms) in products {
            for &(k, c) in terms {
                t.set(i, j, k, rint(c));
            }
        }
        t
    }

    fn alg(
        dim: usize,
        products: &[(usize, usize, &[(usize, i64)])],
        alpha: &[&[i64]],
        beta: &[&[i64]],
        unit: Option<&[i64]>,
    ) -> BiHomAlgebra {
        BiHomAlgebra::new(
            tensor_from(dim, products),
            Matrix::from_i64(alpha),
            Matrix::from_i64(beta),
            unit.map(|u| u.iter().map(|&x| rint(x)).collect()),
            None,
        )
        .unwrap()
    }

    /// dim-2 idempotent algebra with identity twists; e1 acts as identity.
    fn pointed_pair() -> BiHomAlgebra {
        alg(
            2,
            &[
                (0, 0, &[(0, 1)]),
                (0, 1, &[(1, 1)]),
                (1, 0, &[(1, 1)]),
                (1, 1, &[(1, 1)]),
            ],
            &[&[1, 0], &[0, 1]],
            &[&[1, 0], &[0, 1]],
            None,
        )
    }

    /// dim-2 nilpotent product e2*e2 = e1 with a defective alpha.
    fn nilpotent_shear() -> BiHomAlgebra {
        alg(
            2,
            &[(1, 1, &[(0, 1)])],
            &[&[1, 1], &[0, 1]],
            &[&[1, 0], &[0, 1]],
            None,
        )
    }

    /// A structure that violates the twisted associativity identity.
    fn broken_example() -> BiHomAlgebra {
        alg(
            2,
            &[
                (0, 0, &[(1, 1)]),
                (0, 1, &[(1, 1)]),
                (1, 0, &[(0, -1)]),
                (1, 1, &[(1, 1)]),
            ],
            &[&[1, 0], &[0, 1]],
            &[&[-1, 0], &[0, 1]],
            None,
        )
    }

    #[test]
    fn eval_mul_bilinear_contraction() {
        let a = pointed_pair();
        let e2 = vec_ops::basis(2, 1);
        assert_eq!(a.eval_mul(&e2, &e2).unwrap(), e2);
        let zero = vec_ops::zero(2);
        assert_eq!(a.eval_mul(&zero, &e2).unwrap(), zero);
        let b = nilpotent_shear();
        assert_eq!(b.eval_mul(&e2, &e2).unwrap(), vec_ops::basis(2, 0));
        assert!(a.eval_mul(&[rone()], &e2).is_err());
    }

    #[test]
    fn axioms_pass_on_valid_structures() {
        assert!(pointed_pair().check_axioms().passes());
        assert!(nilpotent_shear().check_axioms().passes());
    }

    #[test]
    fn axiom_failure_carries_reevaluatable_witness() {
        let a = broken_example();
        let report = a.check_axioms();
        let w = report.bihom_associative.witness().expect("must fail");
        assert_eq!(w.triple, (0, 0, 0));
        assert_eq!(w.lhs, vec![rint(0), rint(1)]); // e2
        assert_eq!(w.rhs, vec![rint(1), rint(0)]); // e1
        // replay through eval_mul
        let e1 = vec_ops::basis(2, 0);
        let inner = a.eval_mul(&e1, &e1).unwrap();
        let lhs = a
            .eval_mul(&a.alpha().apply(&e1).unwrap(), &inner)
            .unwrap();
        let rhs = a
            .eval_mul(&inner, &a.beta().apply(&e1).unwrap())
            .unwrap();
        assert_eq!(lhs, w.lhs);
        assert_eq!(rhs, w.rhs);
    }

    #[test]
    fn transport_by_identity_is_identity() {
        let a = nilpotent_shear();
        let t = a.transport(&Matrix::identity(2)).unwrap();
        assert_eq!(t.mul_tensor(), a.mul_tensor());
        assert_eq!(t.alpha(), a.alpha());
        assert_eq!(t.beta(), a.beta());
    }

    #[test]
    fn transport_by_swap_moves_the_idempotent() {
        let a = pointed_pair();
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let t = a.transport(&swap).unwrap();
        // after the swap e2 is the two-sided identity
        let expected = tensor_from(
            2,
            &[
                (0, 0, &[(0, 1)]),
                (0, 1, &[(0, 1)]),
                (1, 0, &[(0, 1)]),
                (1, 1, &[(1, 1)]),
            ],
        );
        assert_eq!(t.mul_tensor(), &expected);
        assert!(t.check_axioms().passes());
        assert!(is_morphism(&a, &t, &swap).unwrap().is_pass());
    }

    #[test]
    fn transport_rejects_singular_maps_and_preserves_verdicts() {
        let a = pointed_pair();
        let singular = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            a.transport(&singular).unwrap_err(),
            AlgebraError::SingularTransport
        );
        let phi = Matrix::from_i64(&[&[1, 2], &[1, 1]]);
        let good = nilpotent_shear().transport(&phi).unwrap();
        assert!(good.check_axioms().passes());
        let bad = broken_example().transport(&phi).unwrap();
        assert!(!bad.check_axioms().passes());
    }

    #[test]
    fn yau_twist_by_own_alpha() {
        let a = nilpotent_shear();
        let twisted = a.yau_twist(a.alpha()).unwrap();
        assert!(twisted.check_axioms().passes());
        // alpha^2 sends e2 to 2 e1 + e2
        assert_eq!(
            twisted.alpha().apply(&vec_ops::basis(2, 1)).unwrap(),
            vec![rint(2), rint(1)]
        );
        assert_eq!(
            twisted.mul_tensor().fiber(1, 1),
            &[rint(1), rint(0)]
        );
        let identity_twist = a.yau_twist(&Matrix::identity(2)).unwrap();
        assert_eq!(identity_twist.mul_tensor(), a.mul_tensor());
    }

    #[test]
    fn yau_twist_rejects_non_morphisms() {
        let a = pointed_pair();
        // e1 -> 0, e2 -> e2 breaks the product identity at (e1, e2)
        let gamma = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        let err = a.yau_twist(&gamma).unwrap_err();
        match err {
            AlgebraError::NotSelfMorphism(msg) => {
                assert!(msg.contains("(e1, e2)"), "unexpected witness: {msg}")
            }
            other => panic!("expected morphism rejection, got {other:?}"),
        }
        // projection onto e1 is a genuine self-morphism here and is accepted
        let proj = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert!(a.yau_twist(&proj).unwrap().check_axioms().passes());
    }

    #[test]
    fn direct_sum_blocks_and_witness_lifting() {
        let a = pointed_pair();
        let zero_dim = BiHomAlgebra::new(
            Tensor3::zero(0),
            Matrix::zero(0, 0),
            Matrix::zero(0, 0),
            None,
            None,
        )
        .unwrap();
        let same = a.direct_sum(&zero_dim);
        assert_eq!(same.mul_tensor(), a.mul_tensor());
        let sum = a.direct_sum(&a);
        assert_eq!(sum.dim(), 4);
        assert!(sum.check_axioms().passes());
        let broken_first = broken_example().direct_sum(&a);
        let report = broken_first.check_axioms();
        let w = report.bihom_associative.witness().unwrap();
        assert_eq!(w.triple, (0, 0, 0));
    }

    #[test]
    fn unital_extension_examples() {
        // 1-dim zero algebra with identity twists
        let zero1 = alg(1, &[], &[&[1]], &[&[1]], None);
        let ext = zero1.unital_extension().unwrap();
        assert_eq!(ext.dim(), 2);
        assert!(ext.check_axioms().passes());
        // products: e1*e2 = e1, e2*e1 = e1, e2*e2 = e2, e1*e1 = 0
        assert_eq!(ext.mul_tensor().fiber(0, 1), &[rint(1), rint(0)]);
        assert_eq!(ext.mul_tensor().fiber(1, 1), &[rint(0), rint(1)]);
        assert_eq!(ext.unit().unwrap(), &[rint(0), rint(1)]);

        let zero0 = BiHomAlgebra::new(
            Tensor3::zero(0),
            Matrix::zero(0, 0),
            Matrix::zero(0, 0),
            None,
            None,
        )
        .unwrap();
        let point = zero0.unital_extension().unwrap();
        assert_eq!(point.dim(), 1);
        assert_eq!(point.mul_tensor().get(0, 0, 0), &rone());

        assert!(nilpotent_shear().unital_extension().unwrap().check_axioms().passes());
        assert!(matches!(
            broken_example().unital_extension(),
            Err(AlgebraError::Precondition(_))
        ));
    }

    #[test]
    fn untwist_round_trip() {
        let a = nilpotent_shear();
        let UntwistOutcome::Associative(prime) = a.untwist().unwrap() else {
            panic!("expected associative untwist");
        };
        // single nonzero product e2*e2 = e1
        assert_eq!(prime.fiber(1, 1), &[rint(1), rint(0)]);
        assert_eq!(prime.fiber(0, 1), &[rint(0), rint(0)]);
        // rebuild mul(x, y) = mul'(alpha x, beta y)
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let ax = a.alpha().apply(&vec_ops::basis(n, i)).unwrap();
                let by = a.beta().apply(&vec_ops::basis(n, j)).unwrap();
                let mut rebuilt = vec_ops::zero(n);
                for (p, xp) in ax.iter().enumerate() {
                    for (q, yq) in by.iter().enumerate() {
                        for k in 0..n {
                            rebuilt[k] += xp * yq * prime.get(p, q, k);
                        }
                    }
                }
                assert_eq!(&rebuilt[..], a.mul_tensor().fiber(i, j));
            }
        }
    }

    #[test]
    fn untwist_identity_twists_and_singular() {
        let a = pointed_pair();
        let UntwistOutcome::Associative(prime) = a.untwist().unwrap() else {
            panic!()
        };
        assert_eq!(&prime, a.mul_tensor());
        let singular = alg(2, &[], &[&[0, 0], &[0, 0]], &[&[1, 0], &[0, 1]], None);
        assert_eq!(
            singular.untwist().unwrap_err(),
            AlgebraError::TwistsNotInvertible
        );
    }

    #[test]
    fn morphism_and_graph_criterion() {
        let a = pointed_pair();
        assert!(is_morphism(&a, &a, &Matrix::identity(2)).unwrap().is_pass());
        // swap is an isomorphism onto the transported structure
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let b = a.transport(&swap).unwrap();
        assert!(is_morphism(&a, &b, &swap).unwrap().is_pass());
        let sum = a.direct_sum(&b);
        let graph = graph_basis(2, 2, &swap);
        assert!(is_subalgebra(&sum, &graph).unwrap().is_pass());
        // a non-morphism's graph is not closed: e1 -> e1 + e2 breaks the
        // product identity at (e1, e1)
        let bad = Matrix::from_i64(&[&[1, 0], &[1, 0]]);
        assert!(matches!(is_morphism(&a, &b, &bad).unwrap(), Check::Fail(_)));
        let bad_graph = graph_basis(2, 2, &bad);
        assert!(matches!(
            is_subalgebra(&sum, &bad_graph).unwrap(),
            Check::Fail(_)
        ));
        // dependent span rejected
        let dep = vec![vec![rint(1), rint(0), rint(0), rint(0)]; 2];
        assert_eq!(
            is_subalgebra(&sum, &dep).unwrap_err(),
            AlgebraError::DependentSpan
        );
        // full basis closes trivially
        let full: Vec<_> = (0..4).map(|i| vec_ops::basis(4, i)).collect();
        assert!(is_subalgebra(&sum, &full).unwrap().is_pass());
    }

    #[test]
    fn unital_morphism_requires_unit_image() {
        let unital = pointed_pair().with_unit(Some(vec![rint(1), rint(0)]));
        let zero_map = Matrix::zero(2, 2);
        let verdict = is_unital_morphism(&unital, &unital, &zero_map).unwrap();
        let w = verdict.witness().expect("zero map must fail");
        assert_eq!(w.identity, MorphismIdentity::UnitImage);
        assert!(is_unital_morphism(&unital, &unital, &Matrix::identity(2))
            .unwrap()
            .is_pass());
        assert!(matches!(
            is_unital_morphism(&pointed_pair(), &unital, &Matrix::identity(2)),
            Err(AlgebraError::MissingUnit)
        ));
    }

    #[test]
    fn rational_coefficients_stay_exact() {
        let mut t = Tensor3::zero(1);
        t.set(0, 0, 0, rat(2, 3));
        let a = BiHomAlgebra::new(
            t,
            Matrix::from_rows(vec![vec![rat(1, 1)]]).unwrap(),
            Matrix::from_rows(vec![vec![rat(1, 1)]]).unwrap(),
            None,
            None,
        )
        .unwrap();
        assert!(a.check_axioms().passes());
        let x = vec![rat(3, 2)];
        assert_eq!(a.eval_mul(&x, &x).unwrap(), vec![rat(3, 2)]);
    }
}
