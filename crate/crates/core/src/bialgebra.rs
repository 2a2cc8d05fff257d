//! BiHom-bialgebras and antipodes.
//!
//! A bialgebra pairs an algebra and a coalgebra on the same space and asks
//! for nine compatibility relations: the comultiplication is multiplicative
//! with respect to the product, the four twist pairs commute, alpha and beta
//! are comultiplicative, and psi and omega are multiplicative. With a unit
//! and counit present there are further laws (grouplike unit, counit of the
//! unit is 1, twists fix the unit, counit absorbs both algebra twists and is
//! multiplicative).
//!
//! An antipode is a linear map S commuting with all four twists such that
//!
//!   (psi.omega)(S(h1)) * (alpha.beta)(h2) = eps(h) u
//!   (beta.psi)(h1) * (alpha.omega)(S(h2)) = eps(h) u
//!
//! in Sweedler notation; both conditions are linear in S, so existence is an
//! exact linear solve. The twist sandwiches are kept exactly as written (no
//! simplification assuming invertible twists, which several catalog twists
//! are not).

use crate::algebra::{BiHomAlgebra, Check, CommuteWitness, PairWitness};
use crate::coalgebra::{BiHomCoalgebra, ComultWitness};
use crate::exact::{rone, rzero, vec_ops, Matrix, Rational, ShapeError};
use num::Zero;

#[derive(Clone, PartialEq, Eq)]
pub struct BiHomBialgebra {
    alg: BiHomAlgebra,
    coa: BiHomCoalgebra,
}

impl std::fmt::Debug for BiHomBialgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BiHomBialgebra(dim {})", self.alg.dim())
    }
}

impl BiHomBialgebra {
    pub fn new(alg: BiHomAlgebra, coa: BiHomCoalgebra) -> Result<Self, ShapeError> {
        if alg.dim() != coa.dim() {
            return Err(ShapeError::Mismatch(format!(
                "algebra dim {} vs coalgebra dim {}",
                alg.dim(),
                coa.dim()
            )));
        }
        Ok(BiHomBialgebra { alg, coa })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn algebra(&self) -> &BiHomAlgebra {
        &self.alg
    }

    pub fn coalgebra(&self) -> &BiHomCoalgebra {
        &self.coa
    }

    pub fn unit(&self) -> Option<&[Rational]> {
        self.alg.unit()
    }

    pub fn counit(&self) -> Option<&[Rational]> {
        self.coa.counit()
    }

    /// The nine base compatibility relations, plus the unital/counital laws
    /// when both a unit and a counit are attached.
    pub fn check_compatibility(&self) -> CompatibilityReport {
        let n = self.dim();
        let alg = &self.alg;
        let coa = &self.coa;
        let (alpha, beta) = (alg.alpha(), alg.beta());
        let (psi, omega) = (coa.psi(), coa.omega());

        let mut comul_multiplicative = Check::Pass;
        'pairs: for i in 0..n {
            for j in 0..n {
                // comul(e_i e_j), entries (p, q)
                let mut lhs = vec![rzero(); n * n];
                for (k, c) in alg.mul_tensor().fiber(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for p in 0..n {
                        for q in 0..n {
                            let d = coa.comul_tensor().get(k, p, q);
                            if !d.is_zero() {
                                lhs[p * n + q] += c * d;
                            }
                        }
                    }
                }
                // (e_i)_1 (e_j)_1 (x) (e_i)_2 (e_j)_2
                let mut rhs = vec![rzero(); n * n];
                for r in 0..n {
                    for s in 0..n {
                        let di = coa.comul_tensor().get(i, r, s);
                        if di.is_zero() {
                            continue;
                        }
                        for u in 0..n {
                            for v in 0..n {
                                let dj = coa.comul_tensor().get(j, u, v);
                                if dj.is_zero() {
                                    continue;
                                }
                                let scale = di * dj;
                                for p in 0..n {
                                    let cp = alg.mul_tensor().get(r, u, p);
                                    if cp.is_zero() {
                                        continue;
                                    }
                                    for q in 0..n {
                                        let cq = alg.mul_tensor().get(s, v, q);
                                        if !cq.is_zero() {
                                            rhs[p * n + q] += &scale * cp * cq;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    comul_multiplicative = Check::Fail(ComulMulWitness {
                        pair: (i, j),
                        lhs,
                        rhs,
                    });
                    break 'pairs;
                }
            }
        }

        let commute = |a: &Matrix, b: &Matrix| -> Check<CommuteWitness> {
            let ab = a.mul(b).unwrap();
            let ba = b.mul(a).unwrap();
            if ab == ba {
                Check::Pass
            } else {
                Check::Fail(CommuteWitness { lhs: ab, rhs: ba })
            }
        };

        let unital_counital = match (alg.unit(), coa.counit()) {
            (Some(u), Some(eps)) => Some(self.check_unital_counital(u, eps)),
            _ => None,
        };

        CompatibilityReport {
            comul_multiplicative,
            alpha_psi_commute: commute(alpha, psi),
            alpha_omega_commute: commute(alpha, omega),
            beta_psi_commute: commute(beta, psi),
            beta_omega_commute: commute(beta, omega),
            alpha_comultiplicative: coa.check_comultiplicative(alpha),
            beta_comultiplicative: coa.check_comultiplicative(beta),
            psi_multiplicative: alg.check_multiplicative(psi),
            omega_multiplicative: alg.check_multiplicative(omega),
            unital_counital,
        }
    }

    fn check_unital_counital(&self, u: &[Rational], eps: &[Rational]) -> UnitalCounitalReport {
        let n = self.dim();
        let coa = &self.coa;
        let alg = &self.alg;

        // comul(u) = u (x) u
        let mut got = vec![rzero(); n * n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    let d = coa.comul_tensor().get(i, p, q);
                    if !d.is_zero() {
                        got[p * n + q] += ui * d;
                    }
                }
            }
        }
        let mut want = vec![rzero(); n * n];
        for (p, up) in u.iter().enumerate() {
            for (q, uq) in u.iter().enumerate() {
                want[p * n + q] = up * uq;
            }
        }
        let unit_grouplike = if got == want {
            Check::Pass
        } else {
            Check::Fail(LawWitness {
                site: None,
                lhs: got,
                rhs: want,
            })
        };

        let eps_u = vec_ops::dot(eps, u);
        let counit_of_unit = if eps_u == rone() {
            Check::Pass
        } else {
            Check::Fail(LawWitness {
                site: None,
                lhs: vec![eps_u],
                rhs: vec![rone()],
            })
        };

        let fixes = |m: &Matrix| -> Check<LawWitness> {
            let img = m.apply(u).unwrap();
            if img == u {
                Check::Pass
            } else {
                Check::Fail(LawWitness {
                    site: None,
                    lhs: img,
                    rhs: u.to_vec(),
                })
            }
        };

        let absorbs = |m: &Matrix| -> Check<LawWitness> {
            for i in 0..n {
                let mut acc = rzero();
                for (j, e) in eps.iter().enumerate() {
                    acc += e * m.get(j, i);
                }
                if acc != eps[i] {
                    return Check::Fail(LawWitness {
                        site: Some((i, None)),
                        lhs: vec![acc],
                        rhs: vec![eps[i].clone()],
                    });
                }
            }
            Check::Pass
        };

        let mut counit_multiplicative = Check::Pass;
        'outer: for i in 0..n {
            for j in 0..n {
                let mut lhs = rzero();
                for (k, c) in alg.mul_tensor().fiber(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        lhs += c * &eps[k];
                    }
                }
                let rhs = &eps[i] * &eps[j];
                if lhs != rhs {
                    counit_multiplicative = Check::Fail(LawWitness {
                        site: Some((i, Some(j))),
                        lhs: vec![lhs],
                        rhs: vec![rhs],
                    });
                    break 'outer;
                }
            }
        }

        UnitalCounitalReport {
            unit_grouplike,
            counit_of_unit,
            psi_fixes_unit: fixes(self.coa.psi()),
            omega_fixes_unit: fixes(self.coa.omega()),
            counit_absorbs_alpha: absorbs(alg.alpha()),
            counit_absorbs_beta: absorbs(alg.beta()),
            counit_multiplicative,
        }
    }

    /// Left-hand sides of both convolution identities evaluated at a given
    /// S, one pair of vectors per basis element. Kept separate from the
    /// solver's assembled matrix so solver and checker are independent
    /// routes.
    pub fn convolution_sides(&self, s: &Matrix) -> Result<Vec<(Vec<Rational>, Vec<Rational>)>, ShapeError> {
        let n = self.dim();
        if s.rows() != n || s.cols() != n {
            return Err(ShapeError::Mismatch("antipode candidate shape".into()));
        }
        let psi_omega = self.coa.psi().mul(self.coa.omega()).unwrap();
        let alpha_beta = self.alg.alpha().mul(self.alg.beta()).unwrap();
        let beta_psi = self.alg.beta().mul(self.coa.psi()).unwrap();
        let alpha_omega = self.alg.alpha().mul(self.coa.omega()).unwrap();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut first = vec_ops::zero(n);
            let mut second = vec_ops::zero(n);
            for j in 0..n {
                for k in 0..n {
                    let d = self.coa.comul_tensor().get(i, j, k);
                    if d.is_zero() {
                        continue;
                    }
                    let ej = vec_ops::basis(n, j);
                    let ek = vec_ops::basis(n, k);
                    let s_ej = s.apply(&ej).unwrap();
                    let left1 = psi_omega.apply(&s_ej).unwrap();
                    let right1 = alpha_beta.apply(&ek).unwrap();
                    let term1 = self.alg.eval_mul(&left1, &right1).unwrap();
                    first = vec_ops::add(&first, &vec_ops::scale(&term1, d));
                    let left2 = beta_psi.apply(&ej).unwrap();
                    let s_ek = s.apply(&ek).unwrap();
                    let right2 = alpha_omega.apply(&s_ek).unwrap();
                    let term2 = self.alg.eval_mul(&left2, &right2).unwrap();
                    second = vec_ops::add(&second, &vec_ops::scale(&term2, d));
                }
            }
            out.push((first, second));
        }
        Ok(out)
    }

    /// The exact linear system satisfied by an antipode: coefficient matrix
    /// over the n^2 unknowns S_{rc} (flattened r*n + c) and its right-hand
    /// side. Rows: both convolution identities on each basis element, then
    /// the four commuting constraints.
    pub fn antipode_system(&self) -> Result<(Matrix, Vec<Rational>), ShapeError> {
        let n = self.dim();
        let (Some(u), Some(eps)) = (self.alg.unit(), self.coa.counit()) else {
            return Err(ShapeError::Mismatch(
                "antipode system needs a unit and a counit".into(),
            ));
        };
        let unknowns = n * n;
        let flat = |r: usize, c: usize| r * n + c;
        let psi_omega = self.coa.psi().mul(self.coa.omega()).unwrap();
        let alpha_beta = self.alg.alpha().mul(self.alg.beta()).unwrap();
        let beta_psi = self.alg.beta().mul(self.coa.psi()).unwrap();
        let alpha_omega = self.alg.alpha().mul(self.coa.omega()).unwrap();

        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();

        for i in 0..n {
            // first identity at e_i, one equation per component t
            let mut coeffs = vec![vec![rzero(); unknowns]; n];
            for j in 0..n {
                for k in 0..n {
                    let d = self.coa.comul_tensor().get(i, j, k);
                    if d.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        for m in 0..n {
                            let w1 = psi_omega.get(m, l);
                            if w1.is_zero() {
                                continue;
                            }
                            for p in 0..n {
                                let w2 = alpha_beta.get(p, k);
                                if w2.is_zero() {
                                    continue;
                                }
                                for (t, row) in coeffs.iter_mut().enumerate() {
                                    let c = self.alg.mul_tensor().get(m, p, t);
                                    if !c.is_zero() {
                                        row[flat(l, j)] += d * w1 * w2 * c;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            for (t, row) in coeffs.into_iter().enumerate() {
                rows.push(row);
                rhs.push(&eps[i] * &u[t]);
            }
        }

        for i in 0..n {
            // second identity at e_i
            let mut coeffs = vec![vec![rzero(); unknowns]; n];
            for j in 0..n {
                for k in 0..n {
                    let d = self.coa.comul_tensor().get(i, j, k);
                    if d.is_zero() {
                        continue;
                    }
                    for m in 0..n {
                        let w1 = beta_psi.get(m, j);
                        if w1.is_zero() {
                            continue;
                        }
                        for l in 0..n {
                            for p in 0..n {
                                let w2 = alpha_omega.get(p, l);
                                if w2.is_zero() {
                                    continue;
                                }
                                for (t, row) in coeffs.iter_mut().enumerate() {
                                    let c = self.alg.mul_tensor().get(m, p, t);
                                    if !c.is_zero() {
                                        row[flat(l, k)] += d * w1 * w2 * c;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            for (t, row) in coeffs.into_iter().enumerate() {
                rows.push(row);
                rhs.push(&eps[i] * &u[t]);
            }
        }

        // S commutes with each of the four twists: S M - M S = 0
        for m in [
            self.alg.alpha(),
            self.alg.beta(),
            self.coa.psi(),
            self.coa.omega(),
        ] {
            for r in 0..n {
                for c in 0..n {
                    let mut row = vec![rzero(); unknowns];
                    for k in 0..n {
                        row[flat(r, k)] += m.get(k, c).clone();
                        row[flat(k, c)] -= m.get(r, k).clone();
                    }
                    rows.push(row);
                    rhs.push(rzero());
                }
            }
        }

        Ok((Matrix::from_rows(rows)?, rhs))
    }

    /// Solves for an antipode by exact Gaussian elimination. The canonical
    /// solution zeroes all free variables in reduced-echelon order;
    /// `solution_space_dim` counts those free variables.
    pub fn solve_antipode(&self) -> AntipodeResult {
        if self.unit().is_none() || self.counit().is_none() {
            return AntipodeResult::not_applicable("unit or counit missing");
        }
        let compat = self.check_compatibility();
        if !compat.passes() {
            return AntipodeResult::not_applicable(format!(
                "compatibility fails ({})",
                compat.first_failure_name().unwrap_or("unknown")
            ));
        }
        let (system, rhs) = self.antipode_system().expect("unit and counit present");
        match system.solve(&rhs).expect("consistent shapes") {
            None => AntipodeResult {
                status: AntipodeStatus::NoSolution,
                antipode: None,
                solution_space_dim: None,
            },
            Some((flat, nullspace)) => {
                let n = self.dim();
                let mut s = Matrix::zero(n, n);
                for r in 0..n {
                    for c in 0..n {
                        s.set(r, c, flat[r * n + c].clone());
                    }
                }
                AntipodeResult {
                    status: AntipodeStatus::Found,
                    antipode: Some(s),
                    solution_space_dim: Some(nullspace.len()),
                }
            }
        }
    }

    /// Independent re-evaluation of both convolution identities and the four
    /// commuting constraints for a given S.
    pub fn check_antipode(&self, s: &Matrix) -> Result<Check<AntipodeWitness>, ShapeError> {
        let (Some(u), Some(eps)) = (self.unit(), self.counit()) else {
            return Err(ShapeError::Mismatch(
                "antipode check needs a unit and a counit".into(),
            ));
        };
        let sides = self.convolution_sides(s)?;
        for (i, (first, second)) in sides.iter().enumerate() {
            let expected = vec_ops::scale(u, &eps[i]);
            if first != &expected {
                return Ok(Check::Fail(AntipodeWitness {
                    law: AntipodeLaw::FirstConvolution,
                    index: Some(i),
                    lhs: first.clone(),
                    rhs: expected,
                }));
            }
            if second != &expected {
                return Ok(Check::Fail(AntipodeWitness {
                    law: AntipodeLaw::SecondConvolution,
                    index: Some(i),
                    lhs: second.clone(),
                    rhs: expected,
                }));
            }
        }
        for (law, m) in [
            (AntipodeLaw::CommutesWithAlpha, self.alg.alpha()),
            (AntipodeLaw::CommutesWithBeta, self.alg.beta()),
            (AntipodeLaw::CommutesWithPsi, self.coa.psi()),
            (AntipodeLaw::CommutesWithOmega, self.coa.omega()),
        ] {
            let sm = s.mul(m).unwrap();
            let ms = m.mul(s).unwrap();
            if sm != ms {
                return Ok(Check::Fail(AntipodeWitness {
                    law,
                    index: None,
                    lhs: sm.entries().to_vec(),
                    rhs: ms.entries().to_vec(),
                }));
            }
        }
        Ok(Check::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComulMulWitness {
    pub pair: (usize, usize),
    /// Both sides as order-2 tensors, flattened p*n + q.
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawWitness {
    pub site: Option<(usize, Option<usize>)>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub comul_multiplicative: Check<ComulMulWitness>,
    pub alpha_psi_commute: Check<CommuteWitness>,
    pub alpha_omega_commute: Check<CommuteWitness>,
    pub beta_psi_commute: Check<CommuteWitness>,
    pub beta_omega_commute: Check<CommuteWitness>,
    pub alpha_comultiplicative: Check<ComultWitness>,
    pub beta_comultiplicative: Check<ComultWitness>,
    pub psi_multiplicative: Check<PairWitness>,
    pub omega_multiplicative: Check<PairWitness>,
    pub unital_counital: Option<UnitalCounitalReport>,
}

impl CompatibilityReport {
    pub fn base_passes(&self) -> bool {
        self.comul_multiplicative.is_pass()
            && self.alpha_psi_commute.is_pass()
            && self.alpha_omega_commute.is_pass()
            && self.beta_psi_commute.is_pass()
            && self.beta_omega_commute.is_pass()
            && self.alpha_comultiplicative.is_pass()
            && self.beta_comultiplicative.is_pass()
            && self.psi_multiplicative.is_pass()
            && self.omega_multiplicative.is_pass()
    }

    pub fn passes(&self) -> bool {
        self.base_passes()
            && self
                .unital_counital
                .as_ref()
                .map_or(true, UnitalCounitalReport::passes)
    }

    pub fn first_failure_name(&self) -> Option<&'static str> {
        if !self.comul_multiplicative.is_pass() {
            return Some("comul_multiplicative");
        }
        if !self.alpha_psi_commute.is_pass() {
            return Some("alpha_psi_commute");
        }
        if !self.alpha_omega_commute.is_pass() {
            return Some("alpha_omega_commute");
        }
        if !self.beta_psi_commute.is_pass() {
            return Some("beta_psi_commute");
        }
        if !self.beta_omega_commute.is_pass() {
            return Some("beta_omega_commute");
        }
        if !self.alpha_comultiplicative.is_pass() {
            return Some("alpha_comultiplicative");
        }
        if !self.beta_comultiplicative.is_pass() {
            return Some("beta_comultiplicative");
        }
        if !self.psi_multiplicative.is_pass() {
            return Some("psi_multiplicative");
        }
        if !self.omega_multiplicative.is_pass() {
            return Some("omega_multiplicative");
        }
        if let Some(uc) = &self.unital_counital {
            return uc.first_failure_name();
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitalCounitalReport {
    pub unit_grouplike: Check<LawWitness>,
    pub counit_of_unit: Check<LawWitness>,
    pub psi_fixes_unit: Check<LawWitness>,
    pub omega_fixes_unit: Check<LawWitness>,
    pub counit_absorbs_alpha: Check<LawWitness>,
    pub counit_absorbs_beta: Check<LawWitness>,
    pub counit_multiplicative: Check<LawWitness>,
}

impl UnitalCounitalReport {
    pub fn passes(&self) -> bool {
        self.unit_grouplike.is_pass()
            && self.counit_of_unit.is_pass()
            && self.psi_fixes_unit.is_pass()
            && self.omega_fixes_unit.is_pass()
            && self.counit_absorbs_alpha.is_pass()
            && self.counit_absorbs_beta.is_pass()
            && self.counit_multiplicative.is_pass()
    }

    pub fn first_failure_name(&self) -> Option<&'static str> {
        if !self.unit_grouplike.is_pass() {
            return Some("unit_grouplike");
        }
        if !self.counit_of_unit.is_pass() {
            return Some("counit_of_unit");
        }
        if !self.psi_fixes_unit.is_pass() {
            return Some("psi_fixes_unit");
        }
        if !self.omega_fixes_unit.is_pass() {
            return Some("omega_fixes_unit");
        }
        if !self.counit_absorbs_alpha.is_pass() {
            return Some("counit_absorbs_alpha");
        }
        if !self.counit_absorbs_beta.is_pass() {
            return Some("counit_absorbs_beta");
        }
        if !self.counit_multiplicative.is_pass() {
            return Some("counit_multiplicative");
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodeLaw {
    FirstConvolution,
    SecondConvolution,
    CommutesWithAlpha,
    CommutesWithBeta,
    CommutesWithPsi,
    CommutesWithOmega,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodeWitness {
    pub law: AntipodeLaw,
    pub index: Option<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AntipodeStatus {
    Found,
    NoSolution,
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodeResult {
    pub status: AntipodeStatus,
    pub antipode: Option<Matrix>,
    pub solution_space_dim: Option<usize>,
}

impl AntipodeResult {
    fn not_applicable(reason: impl Into<String>) -> Self {
        AntipodeResult {
            status: AntipodeStatus::NotApplicable(reason.into()),
            antipode: None,
            solution_space_dim: None,
        }
    }

    pub fn found(&self) -> bool {
        matches!(self.status, AntipodeStatus::Found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rint, Tensor3};

    /// Base field as a bialgebra: everything identity, grouplike basis
    /// vector, unit = counit = e1.
    fn base_field() -> BiHomBialgebra {
        let mut mul = Tensor3::zero(1);
        mul.set(0, 0, 0, rone());
        let alg = BiHomAlgebra::new(
            mul,
            Matrix::identity(1),
            Matrix::identity(1),
            Some(vec![rone()]),
            None,
        )
        .unwrap();
        let mut comul = Tensor3::zero(1);
        comul.set(0, 0, 0, rone());
        let coa = BiHomCoalgebra::new(
            comul,
            Matrix::identity(1),
            Matrix::identity(1),
            Some(vec![rone()]),
            None,
        )
        .unwrap();
        BiHomBialgebra::new(alg, coa).unwrap()
    }

    /// Order-two group algebra: e1 unit, e2*e2 = e1, grouplike comul,
    /// identity twists.
    fn group_of_order_two() -> BiHomBialgebra {
        let mut mul = Tensor3::zero(2);
        mul.set(0, 0, 0, rone());
        mul.set(0, 1, 1, rone());
        mul.set(1, 0, 1, rone());
        mul.set(1, 1, 0, rone());
        let alg = BiHomAlgebra::new(
            mul,
            Matrix::identity(2),
            Matrix::identity(2),
            Some(vec![rone(), rint(0)]),
            None,
        )
        .unwrap();
        let mut comul = Tensor3::zero(2);
        comul.set(0, 0, 0, rone());
        comul.set(1, 1, 1, rone());
        let coa = BiHomCoalgebra::new(
            comul,
            Matrix::identity(2),
            Matrix::identity(2),
            Some(vec![rone(), rone()]),
            None,
        )
        .unwrap();
        BiHomBialgebra::new(alg, coa).unwrap()
    }

    /// Idempotent e2 (e2*e2 = e2) with grouplike comul: compatible, but the
    /// convolution equation at e2 has no solution.
    fn idempotent_grouplike() -> BiHomBialgebra {
        let mut mul = Tensor3::zero(2);
        mul.set(0, 0, 0, rone());
        mul.set(0, 1, 1, rone());
        mul.set(1, 0, 1, rone());
        mul.set(1, 1, 1, rone());
        let alg = BiHomAlgebra::new(
            mul,
            Matrix::identity(2),
            Matrix::identity(2),
            Some(vec![rone(), rint(0)]),
            None,
        )
        .unwrap();
        let mut comul = Tensor3::zero(2);
        comul.set(0, 0, 0, rone());
        comul.set(1, 1, 1, rone());
        let coa = BiHomCoalgebra::new(
            comul,
            Matrix::identity(2),
            Matrix::identity(2),
            Some(vec![rone(), rone()]),
            None,
        )
        .unwrap();
        BiHomBialgebra::new(alg, coa).unwrap()
    }

    #[test]
    fn base_field_is_compatible_and_hopf() {
        let b = base_field();
        assert!(b.check_compatibility().passes());
        let result = b.solve_antipode();
        assert!(result.found());
        assert_eq!(result.antipode.unwrap(), Matrix::identity(1));
        assert_eq!(result.solution_space_dim, Some(0));
    }

    #[test]
    fn group_algebra_antipode_is_identity_here() {
        let b = group_of_order_two();
        assert!(b.check_compatibility().passes());
        let result = b.solve_antipode();
        assert!(result.found());
        let s = result.antipode.unwrap();
        // S(e2) e2 = e1 forces S(e2) = e2 because e2 e2 = e1 and e1 e2 = e2
        assert_eq!(s, Matrix::identity(2));
        assert_eq!(result.solution_space_dim, Some(0));
        assert!(b.check_antipode(&s).unwrap().is_pass());
        // flipping the sign breaks the convolution at e2
        let bad = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let verdict = b.check_antipode(&bad).unwrap();
        let w = verdict.witness().expect("sign flip must fail");
        assert_eq!(w.index, Some(1));
    }

    #[test]
    fn idempotent_grouplike_has_no_antipode() {
        let b = idempotent_grouplike();
        assert!(b.check_compatibility().passes());
        let result = b.solve_antipode();
        assert_eq!(result.status, AntipodeStatus::NoSolution);
        // random small-integer candidates all fail the checker
        for entries in [[0, 1, 1, 0], [1, 1, 0, 1], [-1, 0, 2, 1], [1, 0, 0, 1]] {
            let s = Matrix::from_i64(&[&entries[0..2], &entries[2..4]]);
            assert!(!b.check_antipode(&s).unwrap().is_pass());
        }
    }

    #[test]
    fn half_grouplike_comultiplication_fails_counit_not_compatibility() {
        // comul(e2) = e1 (x) e2 over the idempotent product: every
        // compatibility relation holds, the defect is in the counit laws
        // ((id (x) eps) comul gives e1 at e2 where omega gives e2)
        let mut mul = Tensor3::zero(2);
        mul.set(0, 0, 0, rone());
        mul.set(0, 1, 1, rone());
        mul.set(1, 0, 1, rone());
        mul.set(1, 1, 1, rone());
        let alg = BiHomAlgebra::new(
            mul,
            Matrix::identity(2),
            Matrix::identity(2),
            Some(vec![rone(), rint(0)]),
            None,
        )
        .unwrap();
        let mut comul = Tensor3::zero(2);
        comul.set(0, 0, 0, rone());
        comul.set(1, 0, 1, rone());
        let coa = BiHomCoalgebra::new(
            comul,
            Matrix::identity(2),
            Matrix::identity(2),
            Some(vec![rone(), rone()]),
            None,
        )
        .unwrap();
        let b = BiHomBialgebra::new(alg, coa).unwrap();
        let report = b.check_compatibility();
        assert!(report.comul_multiplicative.is_pass());
        assert!(report.passes());
        let counit_report = b.coalgebra().check_counit().unwrap();
        assert!(!counit_report.passes());
        let w = counit_report.right_slot_is_omega.witness().unwrap();
        assert_eq!(w.index, 1);
        assert_eq!(w.lhs, vec![rone(), rint(0)]); // e1
        assert_eq!(w.rhs, vec![rint(0), rone()]); // omega(e2) = e2
    }

    #[test]
    fn solver_refuses_on_broken_compatibility() {
        // swapping psi is not multiplicative against the idempotent product:
        // psi(e1 e2) = e1 but psi(e1) psi(e2) = e2 e1 = e2
        let mut mul = Tensor3::zero(2);
        mul.set(0, 0, 0, rone());
        mul.set(0, 1, 1, rone());
        mul.set(1, 0, 1, rone());
        mul.set(1, 1, 1, rone());
        let alg = BiHomAlgebra::new(
            mul,
            Matrix::identity(2),
            Matrix::identity(2),
            Some(vec![rone(), rint(0)]),
            None,
        )
        .unwrap();
        let mut comul = Tensor3::zero(2);
        comul.set(0, 0, 0, rone());
        comul.set(1, 1, 1, rone());
        let coa = BiHomCoalgebra::new(
            comul,
            Matrix::from_i64(&[&[0, 1], &[1, 0]]),
            Matrix::identity(2),
            Some(vec![rone(), rone()]),
            None,
        )
        .unwrap();
        let b = BiHomBialgebra::new(alg, coa).unwrap();
        let report = b.check_compatibility();
        assert!(!report.passes());
        let w = report.psi_multiplicative.witness().unwrap();
        assert_eq!(w.pair, (0, 1));
        assert!(matches!(
            b.solve_antipode().status,
            AntipodeStatus::NotApplicable(_)
        ));
    }

    #[test]
    fn assembled_system_is_linear_in_s() {
        let b = group_of_order_two();
        // residual at S = 0 is exactly the eps (x) unit right-hand side
        let zero_sides = b.convolution_sides(&Matrix::zero(2, 2)).unwrap();
        for (first, second) in &zero_sides {
            assert!(vec_ops::is_zero(first));
            assert!(vec_ops::is_zero(second));
        }
        let (system, rhs) = b.antipode_system().unwrap();
        let eps = b.counit().unwrap().to_vec();
        let u = b.unit().unwrap().to_vec();
        let n = b.dim();
        for i in 0..n {
            for t in 0..n {
                assert_eq!(rhs[i * n + t], &eps[i] * &u[t]);
                assert_eq!(rhs[n * n + i * n + t], &eps[i] * &u[t]);
            }
        }
        assert_eq!(rhs.len(), 2 * n * n + 4 * n * n);
        // doubling S doubles the homogeneous part
        let s = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let once = b.convolution_sides(&s).unwrap();
        let twice = b.convolution_sides(&s.scale(&rint(2))).unwrap();
        for ((f1, s1), (f2, s2)) in once.iter().zip(&twice) {
            assert_eq!(vec_ops::scale(f1, &rint(2)), *f2);
            assert_eq!(vec_ops::scale(s1, &rint(2)), *s2);
        }
        // and the assembled matrix agrees with the direct evaluation
        let flat: Vec<Rational> = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .map(|(r, c)| s.get(r, c).clone())
            .collect();
        let assembled = system.apply(&flat).unwrap();
        let direct = b.convolution_sides(&s).unwrap();
        for i in 0..n {
            for t in 0..n {
                assert_eq!(assembled[i * n + t], direct[i].0[t]);
                assert_eq!(assembled[n * n + i * n + t], direct[i].1[t]);
            }
        }
    }

    #[test]
    fn solver_agrees_with_checker_on_found() {
        for b in [base_field(), group_of_order_two()] {
            let result = b.solve_antipode();
            assert!(result.found());
            assert!(b.check_antipode(&result.antipode.unwrap()).unwrap().is_pass());
        }
    }
}
