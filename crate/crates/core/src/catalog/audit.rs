//! The audit harness: re-verifies every catalog claim and emits a
//! deterministic report with a discrepancy ledger.
//!
//! Per entry it runs the axiom checkers; per classification table it
//! decides pairwise isomorphism (the tables claim pairwise
//! non-isomorphism); per Hopf pair it solves for an antipode under every
//! resolvable reading of the printed reference. Every discrepancy cites an
//! entry id and a re-runnable operation. Budget exhaustion downgrades the
//! affected verdict to unknown, never to a guess.

use crate::algebra::{AxiomReport, Check};
use crate::bialgebra::{AntipodeStatus, BiHomBialgebra};
use crate::coalgebra::{CoalgebraReport, CounitReport};
use crate::exact::{format_rational, Matrix, Rational};
use crate::invariants::{fingerprint, Fingerprint};
use crate::polysys::{decide_isomorphic, IsoBudget, IsoCertificate, IsoVerdict};
use serde::Serialize;

use super::{Catalog, CatalogEntry, EntryKind};

#[derive(Debug, Clone)]
pub struct AuditBudget {
    pub iso: IsoBudget,
}

impl Default for AuditBudget {
    fn default() -> Self {
        AuditBudget {
            iso: IsoBudget::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditScope {
    All,
    Entry(String),
    Group(String),
    Pairwise(String),
    Hopf(String),
}

pub const PAIRWISE_GROUPS: &[&str] = &[
    "table_dim2",
    "table_dim2_unital",
    "table_dim3",
    "table_dim3_unital",
];

/// Scope strings: `all`, an entry id, a group name (e.g. `table_dim2`,
/// `comul_dim3_unital`), `pairwise:<table group>`, `hopf:2`, `hopf:3`,
/// `hopf:all`. Table shorthands `Table1`/`Table2`/`Dim3`/`Dim3u` map to the
/// four table groups.
pub fn parse_scope(s: &str) -> Result<AuditScope, String> {
    let canon_group = |g: &str| -> Option<String> {
        match g {
            "Table1" | "table1" => Some("table_dim2".into()),
            "Table2" | "table2" => Some("table_dim2_unital".into()),
            "Dim3" | "dim3" => Some("table_dim3".into()),
            "Dim3u" | "dim3u" => Some("table_dim3_unital".into()),
            g if super::CATALOG_FILES.iter().any(|(f, _)| *f == g) => Some(g.to_string()),
            _ => None,
        }
    };
    if s == "all" {
        return Ok(AuditScope::All);
    }
    if let Some(rest) = s.strip_prefix("pairwise:") {
        let g = canon_group(rest).ok_or_else(|| format!("unknown table group {rest:?}"))?;
        if !PAIRWISE_GROUPS.contains(&g.as_str()) {
            return Err(format!("{g} is not a classification table group"));
        }
        return Ok(AuditScope::Pairwise(g));
    }
    if let Some(rest) = s.strip_prefix("hopf:") {
        if ["2", "3", "all"].contains(&rest) {
            return Ok(AuditScope::Hopf(rest.to_string()));
        }
        return Err(format!("unknown hopf scope {rest:?}"));
    }
    if let Some(g) = canon_group(s) {
        return Ok(AuditScope::Group(g));
    }
    Ok(AuditScope::Entry(s.to_string()))
}

// ------------------------------------------------------------------ report

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessDoc {
    pub site: String,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerdictDoc {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

impl VerdictDoc {
    fn pass() -> Self {
        VerdictDoc {
            status: "pass".into(),
            witness: None,
        }
    }

    fn fail(site: String, lhs: Vec<String>, rhs: Vec<String>) -> Self {
        VerdictDoc {
            status: "fail".into(),
            witness: Some(WitnessDoc { site, lhs, rhs }),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

fn vecs(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn matrix_doc(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| vecs(m.row(r))).collect()
}

fn basis_name(i: usize) -> String {
    format!("e{}", i + 1)
}

fn check_doc<W>(check: &Check<W>, describe: impl Fn(&W) -> WitnessDoc) -> VerdictDoc {
    match check {
        Check::Pass => VerdictDoc::pass(),
        Check::Fail(w) => {
            let d = describe(w);
            VerdictDoc::fail(d.site, d.lhs, d.rhs)
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxiomsDoc {
    pub bihom_associative: VerdictDoc,
    pub alpha_multiplicative: VerdictDoc,
    pub beta_multiplicative: VerdictDoc,
    pub twists_commute: VerdictDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_laws: Option<VerdictDoc>,
    pub passes: bool,
}

pub fn axioms_doc(report: &AxiomReport) -> AxiomsDoc {
    AxiomsDoc {
        bihom_associative: check_doc(&report.bihom_associative, |w| WitnessDoc {
            site: format!(
                "({}, {}, {})",
                basis_name(w.triple.0),
                basis_name(w.triple.1),
                basis_name(w.triple.2)
            ),
            lhs: vecs(&w.lhs),
            rhs: vecs(&w.rhs),
        }),
        alpha_multiplicative: check_doc(&report.alpha_multiplicative, |w| WitnessDoc {
            site: format!("({}, {})", basis_name(w.pair.0), basis_name(w.pair.1)),
            lhs: vecs(&w.lhs),
            rhs: vecs(&w.rhs),
        }),
        beta_multiplicative: check_doc(&report.beta_multiplicative, |w| WitnessDoc {
            site: format!("({}, {})", basis_name(w.pair.0), basis_name(w.pair.1)),
            lhs: vecs(&w.lhs),
            rhs: vecs(&w.rhs),
        }),
        twists_commute: check_doc(&report.twists_commute, |w| WitnessDoc {
            site: "alpha.beta vs beta.alpha".into(),
            lhs: vecs(w.lhs.entries()),
            rhs: vecs(w.rhs.entries()),
        }),
        unit_laws: report.unit_laws.as_ref().map(|c| {
            check_doc(c, |w| WitnessDoc {
                site: format!(
                    "{}{}",
                    match w.law {
                        crate::algebra::UnitLaw::RightMulIsAlpha => "x*u = alpha(x)",
                        crate::algebra::UnitLaw::LeftMulIsBeta => "u*x = beta(x)",
                        crate::algebra::UnitLaw::AlphaFixesUnit => "alpha(u) = u",
                        crate::algebra::UnitLaw::BetaFixesUnit => "beta(u) = u",
                    },
                    w.index
                        .map(|i| format!(" at {}", basis_name(i)))
                        .unwrap_or_default()
                ),
                lhs: vecs(&w.lhs),
                rhs: vecs(&w.rhs),
            })
        }),
        passes: report.passes(),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CoalgebraAxiomsDoc {
    pub coassociative: VerdictDoc,
    pub psi_comultiplicative: VerdictDoc,
    pub omega_comultiplicative: VerdictDoc,
    pub twists_commute: VerdictDoc,
    pub passes: bool,
}

pub fn coalgebra_axioms_doc(report: &CoalgebraReport) -> CoalgebraAxiomsDoc {
    let comult = |w: &crate::coalgebra::ComultWitness| WitnessDoc {
        site: basis_name(w.index),
        lhs: vecs(&w.lhs),
        rhs: vecs(&w.rhs),
    };
    CoalgebraAxiomsDoc {
        coassociative: check_doc(&report.coassociative, |w| WitnessDoc {
            site: basis_name(w.index),
            lhs: vecs(&w.lhs),
            rhs: vecs(&w.rhs),
        }),
        psi_comultiplicative: check_doc(&report.psi_comultiplicative, comult),
        omega_comultiplicative: check_doc(&report.omega_comultiplicative, comult),
        twists_commute: check_doc(&report.twists_commute, |w| WitnessDoc {
            site: "psi.omega vs omega.psi".into(),
            lhs: vecs(w.lhs.entries()),
            rhs: vecs(w.rhs.entries()),
        }),
        passes: report.passes(),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CounitDoc {
    pub eps_psi: VerdictDoc,
    pub eps_omega: VerdictDoc,
    pub right_slot_is_omega: VerdictDoc,
    pub left_slot_is_psi: VerdictDoc,
    pub passes: bool,
}

pub fn counit_doc(report: &CounitReport) -> CounitDoc {
    let w = |w: &crate::coalgebra::CounitWitness| WitnessDoc {
        site: basis_name(w.index),
        lhs: vecs(&w.lhs),
        rhs: vecs(&w.rhs),
    };
    CounitDoc {
        eps_psi: check_doc(&report.eps_psi, w),
        eps_omega: check_doc(&report.eps_omega, w),
        right_slot_is_omega: check_doc(&report.right_slot_is_omega, w),
        left_slot_is_psi: check_doc(&report.left_slot_is_psi, w),
        passes: report.passes(),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FingerprintDoc {
    pub dim: usize,
    pub alpha_invariant_factors: Vec<String>,
    pub beta_invariant_factors: Vec<String>,
    pub mul_rank: usize,
    pub ann_left: usize,
    pub ann_right: usize,
    pub ann_two_sided: usize,
    pub commutative: bool,
    pub has_unit: bool,
}

pub fn fingerprint_doc(f: &Fingerprint) -> FingerprintDoc {
    FingerprintDoc {
        dim: f.dim,
        alpha_invariant_factors: f
            .alpha_invariant_factors
            .iter()
            .map(|p| p.to_string())
            .collect(),
        beta_invariant_factors: f
            .beta_invariant_factors
            .iter()
            .map(|p| p.to_string())
            .collect(),
        mul_rank: f.mul_rank,
        ann_left: f.ann_left,
        ann_right: f.ann_right,
        ann_two_sided: f.ann_two_sided,
        commutative: f.commutative,
        has_unit: f.has_unit,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ResolutionDoc {
    pub algebra: String,
    pub algebra_axioms_pass: bool,
    pub compatibility: String,
    /// Full validity: algebra axioms, coalgebra axioms, counit laws when a
    /// counit is present, and compatibility.
    pub bialgebra_valid: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct EntryDoc {
    pub id: String,
    pub kind: String,
    pub source: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra_axioms: Option<AxiomsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<FingerprintDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coalgebra_axioms: Option<CoalgebraAxiomsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counit_laws: Option<CounitDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub resolutions: Vec<ResolutionDoc>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PairDoc {
    pub a: String,
    pub b: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PairwiseGroupDoc {
    pub group: String,
    pub claim: String,
    pub pairs: Vec<PairDoc>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HopfResolutionDoc {
    pub algebra: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution_space_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checker_agrees: Option<bool>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HopfDoc {
    pub id: String,
    pub source: String,
    pub comul: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    pub resolutions: Vec<HopfResolutionDoc>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClaimDoc {
    pub claim: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DiscrepancyDoc {
    pub entry: String,
    pub claim: String,
    pub computed: String,
    pub replay_op: String,
    pub replay_inputs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AuditReport {
    pub schema_version: u64,
    pub tool: String,
    pub conventions: String,
    pub scope: String,
    pub groebner_step_budget: u64,
    pub entries: Vec<EntryDoc>,
    pub pairwise: Vec<PairwiseGroupDoc>,
    pub hopf: Vec<HopfDoc>,
    pub claims: Vec<ClaimDoc>,
    pub discrepancies: Vec<DiscrepancyDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Structured,
    Human,
}

// ------------------------------------------------------------------- audit

struct AuditContext<'a> {
    catalog: &'a Catalog,
    budget: &'a AuditBudget,
    discrepancies: Vec<DiscrepancyDoc>,
}

impl<'a> AuditContext<'a> {
    fn discrepancy(
        &mut self,
        entry: &str,
        claim: &str,
        computed: String,
        replay_op: &str,
        replay_inputs: Vec<String>,
    ) {
        self.discrepancies.push(DiscrepancyDoc {
            entry: entry.to_string(),
            claim: claim.to_string(),
            computed,
            replay_op: replay_op.to_string(),
            replay_inputs,
        });
    }

    fn audit_algebra_entry(&mut self, entry: &CatalogEntry) -> EntryDoc {
        let a = entry.as_algebra().expect("algebra payload");
        let report = a.check_axioms();
        let doc = axioms_doc(&report);
        if !doc.passes {
            let failing = [
                ("bihom_associative", &doc.bihom_associative),
                ("alpha_multiplicative", &doc.alpha_multiplicative),
                ("beta_multiplicative", &doc.beta_multiplicative),
                ("twists_commute", &doc.twists_commute),
            ]
            .iter()
            .find(|(_, v)| !v.passed())
            .map(|(n, v)| {
                format!(
                    "{n} fails{}",
                    v.witness
                        .as_ref()
                        .map(|w| format!(
                            " at {} with sides [{}] vs [{}]",
                            w.site,
                            w.lhs.join(", "),
                            w.rhs.join(", ")
                        ))
                        .unwrap_or_default()
                )
            })
            .or_else(|| {
                doc.unit_laws
                    .as_ref()
                    .filter(|v| !v.passed())
                    .map(|v| {
                        format!(
                            "unit_laws fail{}",
                            v.witness
                                .as_ref()
                                .map(|w| format!(" at {}", w.site))
                                .unwrap_or_default()
                        )
                    })
            })
            .unwrap_or_else(|| "axioms fail".into());
            self.discrepancy(
                &entry.id,
                "listed as a BiHom-associative algebra in its classification table",
                failing,
                "check_axioms",
                vec![entry.id.clone()],
            );
        }
        EntryDoc {
            id: entry.id.clone(),
            kind: entry.kind.as_str().into(),
            source: entry.source.clone(),
            flags: entry.flags.clone(),
            algebra_axioms: Some(doc),
            fingerprint: Some(fingerprint_doc(&fingerprint(a))),
            coalgebra_axioms: None,
            counit_laws: None,
            resolutions: Vec::new(),
        }
    }

    fn audit_coalgebra_entry(&mut self, entry: &CatalogEntry) -> EntryDoc {
        let c = entry.as_coalgebra().expect("coalgebra payload");
        let axioms = c.check_coalgebra_axioms();
        let axioms_doc_v = coalgebra_axioms_doc(&axioms);
        let counit = c.check_counit().map(|r| counit_doc(&r));
        if !axioms_doc_v.passes {
            self.discrepancy(
                &entry.id,
                "listed as a BiHom-coassociative comultiplication",
                "coalgebra axioms fail under the zero-convention".into(),
                "check_coalgebra_axioms",
                vec![entry.id.clone()],
            );
        }
        if let Some(cd) = &counit {
            if !cd.passes {
                self.discrepancy(
                    &entry.id,
                    "printed counit satisfies the counit laws",
                    "a counit law fails on the printed data".into(),
                    "check_counit",
                    vec![entry.id.clone()],
                );
            }
        }
        let mut resolutions = Vec::new();
        for algebra_ref in &entry.algebra_refs {
            let Some(alg) = self.catalog.algebra(algebra_ref) else {
                continue;
            };
            let alg_pass = alg.check_axioms().passes();
            let bial = BiHomBialgebra::new(alg.clone(), c.clone()).expect("same dimension");
            let compat = bial.check_compatibility();
            let compat_status = if compat.passes() {
                "pass".to_string()
            } else {
                format!(
                    "fail ({})",
                    compat.first_failure_name().unwrap_or("unknown")
                )
            };
            let valid = alg_pass
                && axioms_doc_v.passes
                && counit.as_ref().map_or(true, |cd| cd.passes)
                && compat.passes();
            if entry.kind == EntryKind::BialgebraPair && !valid {
                self.discrepancy(
                    &entry.id,
                    "listed as a BiHom-bialgebra over its underlying algebra",
                    format!("pairing with {algebra_ref} does not validate (compatibility {compat_status})"),
                    "check_compatibility",
                    vec![algebra_ref.clone(), entry.id.clone()],
                );
            }
            resolutions.push(ResolutionDoc {
                algebra: algebra_ref.clone(),
                algebra_axioms_pass: alg_pass,
                compatibility: compat_status,
                bialgebra_valid: valid,
            });
        }
        EntryDoc {
            id: entry.id.clone(),
            kind: entry.kind.as_str().into(),
            source: entry.source.clone(),
            flags: entry.flags.clone(),
            algebra_axioms: None,
            fingerprint: None,
            coalgebra_axioms: Some(axioms_doc_v),
            counit_laws: counit,
            resolutions,
        }
    }

    fn audit_pairwise(&mut self, group: &str) -> PairwiseGroupDoc {
        let entries = self.catalog.group(group);
        let mut pairs = Vec::new();
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                let (ea, eb) = (entries[i], entries[j]);
                let a = ea.as_algebra().expect("algebra payload");
                let b = eb.as_algebra().expect("algebra payload");
                let verdict = decide_isomorphic(a, b, &self.budget.iso)
                    .expect("equal dimensions inside one table");
                let doc = match &verdict {
                    IsoVerdict::Isomorphic(w) => PairDoc {
                        a: ea.id.clone(),
                        b: eb.id.clone(),
                        status: "isomorphic".into(),
                        witness: Some(matrix_doc(w)),
                        certificate: None,
                        reason: None,
                    },
                    IsoVerdict::NotIsomorphic(cert) => PairDoc {
                        a: ea.id.clone(),
                        b: eb.id.clone(),
                        status: "not_isomorphic".into(),
                        witness: None,
                        certificate: Some(match cert {
                            IsoCertificate::InvariantMismatch { field, left, right } => {
                                format!("invariant mismatch: {field} ({left} vs {right})")
                            }
                            IsoCertificate::TrivialIdeal { constant } => format!(
                                "trivial ideal (constant {})",
                                format_rational(constant)
                            ),
                        }),
                        reason: None,
                    },
                    IsoVerdict::Unknown(reason) => PairDoc {
                        a: ea.id.clone(),
                        b: eb.id.clone(),
                        status: "unknown".into(),
                        witness: None,
                        certificate: None,
                        reason: Some(reason.clone()),
                    },
                };
                if doc.status == "isomorphic" {
                    self.discrepancy(
                        &format!("{}/{}", ea.id, eb.id),
                        "classification table lists pairwise non-isomorphic structures",
                        format!("{} and {} are isomorphic (verified witness)", ea.id, eb.id),
                        "decide_isomorphic",
                        vec![ea.id.clone(), eb.id.clone()],
                    );
                }
                pairs.push(doc);
            }
        }
        PairwiseGroupDoc {
            group: group.to_string(),
            claim: "pairwise non-isomorphic".into(),
            pairs,
        }
    }

    fn audit_hopf_entry(&mut self, entry: &CatalogEntry) -> HopfDoc {
        let comul_id = entry.comul_ref.clone().expect("hopf pair has a comul ref");
        let comul_entry = self.catalog.get(&comul_id).expect("validated at load");
        let coa = comul_entry.as_coalgebra().expect("coalgebra payload");
        let mut resolutions = Vec::new();
        if entry.algebra_refs.is_empty() {
            resolutions.push(HopfResolutionDoc {
                algebra: "unresolved".into(),
                status: "unknown_reference".into(),
                reason: Some(
                    "printed algebra reference does not resolve to a table entry".into(),
                ),
                antipode: None,
                solution_space_dim: None,
                checker_agrees: None,
            });
        }
        for algebra_ref in &entry.algebra_refs {
            let alg = self
                .catalog
                .algebra(algebra_ref)
                .expect("validated at load");
            let bial = BiHomBialgebra::new(alg.clone(), coa.clone()).expect("same dimension");
            let result = bial.solve_antipode();
            let resolution = match result.status {
                AntipodeStatus::Found => {
                    let s = result.antipode.expect("found carries a matrix");
                    let agrees = bial
                        .check_antipode(&s)
                        .map(|c| c.is_pass())
                        .unwrap_or(false);
                    HopfResolutionDoc {
                        algebra: algebra_ref.clone(),
                        status: "found".into(),
                        reason: None,
                        antipode: Some(matrix_doc(&s)),
                        solution_space_dim: result.solution_space_dim,
                        checker_agrees: Some(agrees),
                    }
                }
                AntipodeStatus::NoSolution => HopfResolutionDoc {
                    algebra: algebra_ref.clone(),
                    status: "none".into(),
                    reason: Some("the antipode system is inconsistent".into()),
                    antipode: None,
                    solution_space_dim: None,
                    checker_agrees: None,
                },
                AntipodeStatus::NotApplicable(reason) => HopfResolutionDoc {
                    algebra: algebra_ref.clone(),
                    status: "not_applicable".into(),
                    reason: Some(reason),
                    antipode: None,
                    solution_space_dim: None,
                    checker_agrees: None,
                },
            };
            if resolution.status != "found" {
                self.discrepancy(
                    &entry.id,
                    "listed as a BiHom-Hopf algebra pair",
                    format!(
                        "antipode verdict for ({algebra_ref}, {comul_id}) is {}{}",
                        resolution.status,
                        resolution
                            .reason
                            .as_ref()
                            .map(|r| format!(": {r}"))
                            .unwrap_or_default()
                    ),
                    "solve_antipode",
                    vec![algebra_ref.clone(), comul_id.clone()],
                );
            }
            resolutions.push(resolution);
        }
        HopfDoc {
            id: entry.id.clone(),
            source: entry.source.clone(),
            comul: comul_id,
            flags: entry.flags.clone(),
            resolutions,
        }
    }
}

/// Algebras the source claims admit no (unital) bialgebra structure.
pub const NO_BIALGEBRA_CLAIMS: &[(&str, &str)] = &[
    ("H2_1", "no BiHom-bialgebra has underlying algebra H2_1"),
    ("Hu2_3", "no unital BiHom-bialgebra has underlying algebra Hu2_3"),
    ("H3_3", "no BiHom-bialgebra has underlying algebra H3_3"),
    ("H3_5", "no BiHom-bialgebra has underlying algebra H3_5"),
    ("Hu3_1", "no unital BiHom-bialgebra has underlying algebra Hu3_1"),
    ("Hu3_5", "no unital BiHom-bialgebra has underlying algebra Hu3_5"),
    ("Hu3_7", "no unital BiHom-bialgebra has underlying algebra Hu3_7"),
    ("Hu3_8", "no unital BiHom-bialgebra has underlying algebra Hu3_8"),
    ("Hu3_10", "no unital BiHom-bialgebra has underlying algebra Hu3_10"),
];

pub fn audit(catalog: &Catalog, scope: &AuditScope, budget: &AuditBudget) -> AuditReport {
    let mut ctx = AuditContext {
        catalog,
        budget,
        discrepancies: Vec::new(),
    };

    let entry_selected = |e: &CatalogEntry| -> bool {
        match scope {
            AuditScope::All => true,
            AuditScope::Entry(id) => &e.id == id,
            AuditScope::Group(g) => &e.group == g,
            AuditScope::Pairwise(_) | AuditScope::Hopf(_) => false,
        }
    };

    let mut entries = Vec::new();
    for entry in catalog.entries() {
        if !entry_selected(entry) {
            continue;
        }
        match entry.kind {
            EntryKind::Algebra | EntryKind::UnitalAlgebra => {
                entries.push(ctx.audit_algebra_entry(entry));
            }
            EntryKind::Comultiplication | EntryKind::BialgebraPair => {
                entries.push(ctx.audit_coalgebra_entry(entry));
            }
            EntryKind::HopfPair => {}
        }
    }

    let pairwise_groups: Vec<&str> = match scope {
        AuditScope::All => PAIRWISE_GROUPS.to_vec(),
        AuditScope::Pairwise(g) => vec![g.as_str()],
        _ => Vec::new(),
    };
    let pairwise: Vec<PairwiseGroupDoc> = pairwise_groups
        .iter()
        .map(|g| ctx.audit_pairwise(g))
        .collect();

    let hopf_selected = |e: &CatalogEntry| -> bool {
        match scope {
            AuditScope::All => true,
            AuditScope::Hopf(which) => {
                which == "all"
                    || (which == "2" && e.id.starts_with("Hopf2"))
                    || (which == "3" && e.id.starts_with("Hopf3"))
            }
            AuditScope::Entry(id) => &e.id == id,
            _ => false,
        }
    };
    let mut hopf = Vec::new();
    for entry in catalog.hopf_entries() {
        if hopf_selected(entry) {
            hopf.push(ctx.audit_hopf_entry(entry));
        }
    }

    // claims that span whole sections, judged only from computed verdicts
    let mut claims = Vec::new();
    for group_doc in &pairwise {
        let iso_pairs: Vec<String> = group_doc
            .pairs
            .iter()
            .filter(|p| p.status == "isomorphic")
            .map(|p| format!("{}/{}", p.a, p.b))
            .collect();
        claims.push(ClaimDoc {
            claim: format!("{}: pairwise non-isomorphic", group_doc.group),
            verdict: if iso_pairs.is_empty() {
                "consistent".into()
            } else {
                "contradicted".into()
            },
            evidence: iso_pairs,
        });
        let failing: Vec<String> = entries
            .iter()
            .filter(|e| {
                catalog
                    .get(&e.id)
                    .map(|ce| &ce.group == &group_doc.group)
                    .unwrap_or(false)
                    && e.algebra_axioms.as_ref().map_or(false, |a| !a.passes)
            })
            .map(|e| e.id.clone())
            .collect();
        claims.push(ClaimDoc {
            claim: format!("{}: every listed entry satisfies the axioms", group_doc.group),
            verdict: if failing.is_empty() {
                "consistent".into()
            } else {
                "contradicted".into()
            },
            evidence: failing,
        });
    }
    if matches!(scope, AuditScope::All) {
        for (algebra_id, claim) in NO_BIALGEBRA_CLAIMS {
            let evidence: Vec<String> = entries
                .iter()
                .filter(|e| {
                    e.resolutions
                        .iter()
                        .any(|r| &r.algebra == algebra_id && r.bialgebra_valid)
                })
                .map(|e| e.id.clone())
                .collect();
            let verdict = if evidence.is_empty() {
                "consistent-with-audited-entries"
            } else {
                "contradicted"
            };
            if !evidence.is_empty() {
                ctx.discrepancies.push(DiscrepancyDoc {
                    entry: (*algebra_id).into(),
                    claim: (*claim).into(),
                    computed: format!(
                        "a catalog comultiplication validates over {algebra_id}: {}",
                        evidence.join(", ")
                    ),
                    replay_op: "check_compatibility".into(),
                    replay_inputs: evidence.clone(),
                });
            }
            claims.push(ClaimDoc {
                claim: (*claim).into(),
                verdict: verdict.into(),
                evidence,
            });
        }
        for (dim, prefix) in [("2", "Hopf2"), ("3", "Hopf3")] {
            let failing: Vec<String> = hopf
                .iter()
                .filter(|h| h.id.starts_with(prefix))
                .filter(|h| {
                    h.resolutions
                        .iter()
                        .any(|r| r.status != "found" && r.status != "unknown_reference")
                })
                .map(|h| h.id.clone())
                .collect();
            claims.push(ClaimDoc {
                claim: format!("dim-{dim} Hopf list: every pair is a BiHom-Hopf algebra"),
                verdict: if failing.is_empty() {
                    "consistent".into()
                } else {
                    "contradicted".into()
                },
                evidence: failing,
            });
        }
    }

    let scope_string = match scope {
        AuditScope::All => "all".to_string(),
        AuditScope::Entry(id) => id.clone(),
        AuditScope::Group(g) => g.clone(),
        AuditScope::Pairwise(g) => format!("pairwise:{g}"),
        AuditScope::Hopf(w) => format!("hopf:{w}"),
    };

    AuditReport {
        schema_version: 1,
        tool: "bihom-audit".into(),
        conventions: "unlisted basis products and twist images are zero; e1 is the unit of every unital entry".into(),
        scope: scope_string,
        groebner_step_budget: budget.iso.groebner_steps,
        entries,
        pairwise,
        hopf,
        claims,
        discrepancies: ctx.discrepancies,
    }
}

/// Deterministic serialization; the structured form is machine-diffable and
/// byte-identical across runs on identical inputs and budgets.
pub fn emit_report(report: &AuditReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable report");
            s.push('\n');
            s
        }
        ReportFormat::Human => {
            let mut out = String::new();
            out.push_str(&format!(
                "audit scope: {} (conventions: {})\n",
                report.scope, report.conventions
            ));
            for e in &report.entries {
                let verdict = match (&e.algebra_axioms, &e.coalgebra_axioms) {
                    (Some(a), _) => {
                        if a.passes {
                            "axioms pass".to_string()
                        } else {
                            "axioms FAIL".to_string()
                        }
                    }
                    (_, Some(c)) => {
                        let counit = match &e.counit_laws {
                            None => String::new(),
                            Some(cd) if cd.passes => ", counit pass".into(),
                            Some(_) => ", counit FAIL".into(),
                        };
                        if c.passes {
                            format!("coalgebra pass{counit}")
                        } else {
                            format!("coalgebra FAIL{counit}")
                        }
                    }
                    _ => "no payload".to_string(),
                };
                out.push_str(&format!("entry {:<14} [{}] {}\n", e.id, e.kind, verdict));
                for r in &e.resolutions {
                    out.push_str(&format!(
                        "  over {:<8} compatibility {} bialgebra_valid={}\n",
                        r.algebra, r.compatibility, r.bialgebra_valid
                    ));
                }
            }
            for g in &report.pairwise {
                out.push_str(&format!("pairwise {}:\n", g.group));
                for p in &g.pairs {
                    out.push_str(&format!("  {} vs {}: {}\n", p.a, p.b, p.status));
                }
            }
            for h in &report.hopf {
                for r in &h.resolutions {
                    out.push_str(&format!(
                        "hopf {:<12} ({}, {}): {}{}\n",
                        h.id,
                        r.algebra,
                        h.comul,
                        r.status,
                        r.solution_space_dim
                            .map(|d| format!(" (solution space dim {d})"))
                            .unwrap_or_default()
                    ));
                }
            }
            for c in &report.claims {
                out.push_str(&format!("claim: {} -> {}\n", c.claim, c.verdict));
            }
            out.push_str(&format!(
                "discrepancies: {}\n",
                report.discrepancies.len()
            ));
            for d in &report.discrepancies {
                out.push_str(&format!(
                    "  [{}] {} | computed: {} | replay: {}({})\n",
                    d.entry,
                    d.claim,
                    d.computed,
                    d.replay_op,
                    d.replay_inputs.join(", ")
                ));
            }
            out
        }
    }
}
