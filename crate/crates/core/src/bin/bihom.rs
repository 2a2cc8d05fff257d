//! Command-line surface of the verification kernel.
//!
//! Exit codes are a total function of the verdict: 0 for success/pass,
//! 1 for a negative verdict (axiom failure, no antipode, not isomorphic),
//! 2 for input or parse errors, 3 for unknown / not-applicable / refused.
//! `audit` exits 0 even when discrepancies exist: a successful audit is not
//! an endorsement of the audited tables.

use bihom::algebra::BiHomAlgebra;
use bihom::bialgebra::{AntipodeStatus, BiHomBialgebra};
use bihom::catalog::{self, Catalog, EntryKind};
use bihom::exact::{parse_rational, MonomialOrder, Rational};
use bihom::format::{parse_ideal, parse_structure, write_ideal, write_structure, Structure};
use bihom::invariants;
use bihom::polysys::{
    self, buchberger, decide_isomorphic, enumerate_comultiplications, ComulSearchConfig,
    IsoBudget, IsoVerdict,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bihom",
    about = "Exact verification and audit kernel for BiHom-associative structures",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Structured,
    Human,
}

#[derive(Args)]
struct InputArg {
    /// Structure file path (JSON); omit when using --catalog.
    path: Option<PathBuf>,
    /// Catalog entry id (e.g. H2_3, Hu3_7, Delta2_4_1).
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check every defining identity of a structure.
    Verify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Decide whether two structures are isomorphic.
    Iso {
        /// File path or catalog id.
        a: String,
        /// File path or catalog id.
        b: String,
        /// Groebner reduction-step budget.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Witness-search grid values, comma separated rationals.
        #[arg(long)]
        grid: Option<String>,
    },
    /// Solve for an antipode of a unital counital bialgebra.
    Antipode {
        #[command(flatten)]
        input: InputArg,
    },
    /// Re-verify the catalog and emit the discrepancy ledger.
    Audit {
        /// all | entry id | group | pairwise:<table> | hopf:<2|3|all>
        #[arg(long, default_value = "all")]
        scope: String,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "structured")]
        format: OutputFormat,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Exhaustive comultiplication search over a coefficient grid.
    EnumComul {
        #[command(flatten)]
        input: InputArg,
        /// Grid values, comma separated rationals.
        #[arg(long, default_value = "-2,-1,0,1,2")]
        grid: String,
        /// Maximum nonzero coefficients per basis image.
        #[arg(long, default_value_t = 2)]
        sparsity: usize,
        /// Twist applied on the psi side.
        #[arg(long, value_enum, default_value = "identity")]
        psi: TwistChoice,
        /// Twist applied on the omega side.
        #[arg(long, value_enum, default_value = "identity")]
        omega: TwistChoice,
        /// Only keep candidates that admit a counit.
        #[arg(long)]
        counital: bool,
        /// Candidate-count refusal threshold.
        #[arg(long, default_value_t = 250_000)]
        cap: u64,
    },
    /// Dump the reduced Groebner basis of an ideal.
    Groebner {
        /// Ideal file (JSON); omit when using --iso-pair or --variety.
        path: Option<PathBuf>,
        /// Generate the isomorphism system of two structures (paths or
        /// catalog ids), comma separated.
        #[arg(long)]
        iso_pair: Option<String>,
        /// Generate the fully symbolic variety system of this dimension.
        #[arg(long)]
        variety: Option<usize>,
        #[arg(long, value_enum)]
        order: Option<OrderChoice>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Print transport-invariant fingerprints of an algebra.
    Fingerprint {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TwistChoice {
    Identity,
    Alpha,
    Beta,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderChoice {
    Lex,
    Degrevlex,
}

fn fail_input(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn load_catalog_or_exit() -> Result<Catalog, ExitCode> {
    catalog::load_catalog().map_err(fail_input)
}

/// Resolves a positional input: an existing file parses as a structure
/// file, otherwise the string is treated as a catalog id.
fn resolve_input(arg: &str, cat: &Catalog) -> Result<Structure, String> {
    let path = PathBuf::from(arg);
    if path.exists() {
        let text =
            std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        return parse_structure(&text).map_err(|e| format!("{}: {e}", path.display()));
    }
    if cat.get(arg).is_some() {
        return resolve_catalog_structure(arg, cat);
    }
    Err(format!("{arg}: no such file and no such catalog entry"))
}

fn structure_from_input(input: &InputArg, cat: &Catalog) -> Result<Structure, String> {
    match (&input.path, &input.catalog) {
        (Some(path), None) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_structure(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(id)) => resolve_catalog_structure(id, cat),
        (Some(_), Some(_)) => Err("give either a path or --catalog, not both".into()),
        (None, None) => Err("an input path or --catalog id is required".into()),
    }
}

/// Catalog ids resolve to a verifiable structure: algebras stay algebras,
/// comultiplication entries become coalgebras, bialgebra pairs and Hopf
/// pairs assemble a full bialgebra from their primary reading.
fn resolve_catalog_structure(id: &str, cat: &Catalog) -> Result<Structure, String> {
    let entry = cat
        .get(id)
        .ok_or_else(|| format!("no catalog entry named {id}"))?;
    match entry.kind {
        EntryKind::Algebra | EntryKind::UnitalAlgebra | EntryKind::Comultiplication => entry
            .structure
            .clone()
            .ok_or_else(|| format!("catalog entry {id} carries no structure payload")),
        EntryKind::BialgebraPair => {
            let coa = entry
                .as_coalgebra()
                .ok_or_else(|| format!("{id}: malformed payload"))?;
            match entry.algebra_refs.first() {
                None => Ok(Structure::Coalgebra(coa.clone())),
                Some(algebra_ref) => {
                    let alg = cat
                        .algebra(algebra_ref)
                        .ok_or_else(|| format!("{id}: algebra ref {algebra_ref} missing"))?;
                    BiHomBialgebra::new(alg.clone(), coa.clone())
                        .map(Structure::Bialgebra)
                        .map_err(|e| format!("{id}: {e}"))
                }
            }
        }
        EntryKind::HopfPair => {
            let comul_ref = entry
                .comul_ref
                .as_ref()
                .ok_or_else(|| format!("{id}: missing comultiplication reference"))?;
            let coa_entry = cat
                .get(comul_ref)
                .ok_or_else(|| format!("{id}: comul ref {comul_ref} missing"))?;
            let coa = coa_entry
                .as_coalgebra()
                .ok_or_else(|| format!("{comul_ref}: malformed payload"))?;
            let algebra_ref = entry
                .algebra_refs
                .first()
                .ok_or_else(|| format!("{id}: the printed algebra reference does not resolve"))?;
            let alg = cat
                .algebra(algebra_ref)
                .ok_or_else(|| format!("{id}: algebra ref {algebra_ref} missing"))?;
            BiHomBialgebra::new(alg.clone(), coa.clone())
                .map(Structure::Bialgebra)
                .map_err(|e| format!("{id}: {e}"))
        }
    }
}

fn parse_grid(csv: &str) -> Result<Vec<Rational>, String> {
    csv.split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<Vec<_>, _>>()
}

fn expect_algebra(s: Structure) -> Result<BiHomAlgebra, String> {
    match s {
        Structure::Algebra(a) => Ok(a),
        Structure::Bialgebra(b) => Ok(b.algebra().clone()),
        Structure::Coalgebra(_) => Err("expected an algebra structure".into()),
    }
}

fn cmd_verify(input: &InputArg, format: OutputFormat) -> ExitCode {
    let cat = match load_catalog_or_exit() {
        Ok(c) => c,
        Err(e) => return e,
    };
    let structure = match structure_from_input(input, &cat) {
        Ok(s) => s,
        Err(e) => return fail_input(e),
    };
    let (passes, doc) = verify_structure(&structure);
    match format {
        OutputFormat::Structured => {
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            print!("{s}");
        }
        OutputFormat::Human => print!("{}", render_verify(&doc)),
    }
    if passes {
        ExitCode::from(EXIT_PASS)
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

#[derive(serde::Serialize)]
struct VerifyDoc {
    kind: String,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    algebra_axioms: Option<catalog::audit::AxiomsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coalgebra_axioms: Option<catalog::audit::CoalgebraAxiomsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counit_laws: Option<catalog::audit::CounitDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    compatibility: Option<String>,
    passes: bool,
}

fn verify_structure(structure: &Structure) -> (bool, VerifyDoc) {
    let mut doc = VerifyDoc {
        kind: structure.kind().into(),
        dim: structure.dim(),
        label: structure.label().map(str::to_string),
        algebra_axioms: None,
        coalgebra_axioms: None,
        counit_laws: None,
        compatibility: None,
        passes: false,
    };
    let passes = match structure {
        Structure::Algebra(a) => {
            let report = a.check_axioms();
            doc.algebra_axioms = Some(catalog::audit::axioms_doc(&report));
            report.passes()
        }
        Structure::Coalgebra(c) => {
            let report = c.check_coalgebra_axioms();
            let counit = c.check_counit();
            let pass = report.passes() && counit.as_ref().map_or(true, |r| r.passes());
            doc.coalgebra_axioms = Some(catalog::audit::coalgebra_axioms_doc(&report));
            doc.counit_laws = counit.as_ref().map(catalog::audit::counit_doc);
            pass
        }
        Structure::Bialgebra(b) => {
            let alg_report = b.algebra().check_axioms();
            let coa_report = b.coalgebra().check_coalgebra_axioms();
            let counit = b.coalgebra().check_counit();
            let compat = b.check_compatibility();
            doc.algebra_axioms = Some(catalog::audit::axioms_doc(&alg_report));
            doc.coalgebra_axioms = Some(catalog::audit::coalgebra_axioms_doc(&coa_report));
            doc.counit_laws = counit.as_ref().map(catalog::audit::counit_doc);
            doc.compatibility = Some(if compat.passes() {
                "pass".into()
            } else {
                format!(
                    "fail ({})",
                    compat.first_failure_name().unwrap_or("unknown")
                )
            });
            alg_report.passes()
                && coa_report.passes()
                && counit.as_ref().map_or(true, |r| r.passes())
                && compat.passes()
        }
    };
    doc.passes = passes;
    (passes, doc)
}

fn render_verify(doc: &VerifyDoc) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "kind: {} (dim {}){}\n",
        doc.kind,
        doc.dim,
        doc.label
            .as_ref()
            .map(|l| format!(", label {l}"))
            .unwrap_or_default()
    ));
    let verdict_line = |name: &str, v: &catalog::audit::VerdictDoc| -> String {
        match &v.witness {
            None => format!("  {name}: {}\n", v.status),
            Some(w) => format!(
                "  {name}: {} at {} (sides [{}] vs [{}])\n",
                v.status,
                w.site,
                w.lhs.join(", "),
                w.rhs.join(", ")
            ),
        }
    };
    if let Some(a) = &doc.algebra_axioms {
        out.push_str(&verdict_line("bihom_associative", &a.bihom_associative));
        out.push_str(&verdict_line(
            "alpha_multiplicative",
            &a.alpha_multiplicative,
        ));
        out.push_str(&verdict_line("beta_multiplicative", &a.beta_multiplicative));
        out.push_str(&verdict_line("twists_commute", &a.twists_commute));
        if let Some(u) = &a.unit_laws {
            out.push_str(&verdict_line("unit_laws", u));
        }
    }
    if let Some(c) = &doc.coalgebra_axioms {
        out.push_str(&verdict_line("coassociative", &c.coassociative));
        out.push_str(&verdict_line(
            "psi_comultiplicative",
            &c.psi_comultiplicative,
        ));
        out.push_str(&verdict_line(
            "omega_comultiplicative",
            &c.omega_comultiplicative,
        ));
        out.push_str(&verdict_line("cotwists_commute", &c.twists_commute));
    }
    if let Some(c) = &doc.counit_laws {
        out.push_str(&verdict_line("eps_psi", &c.eps_psi));
        out.push_str(&verdict_line("eps_omega", &c.eps_omega));
        out.push_str(&verdict_line(
            "right_slot_is_omega",
            &c.right_slot_is_omega,
        ));
        out.push_str(&verdict_line("left_slot_is_psi", &c.left_slot_is_psi));
    }
    if let Some(compat) = &doc.compatibility {
        out.push_str(&format!("  compatibility: {compat}\n"));
    }
    out.push_str(&format!(
        "verdict: {}\n",
        if doc.passes { "PASS" } else { "FAIL" }
    ));
    out
}

fn cmd_iso(a: &str, b: &str, budget_steps: u64, grid: Option<&str>) -> ExitCode {
    let cat = match load_catalog_or_exit() {
        Ok(c) => c,
        Err(e) => return e,
    };
    let sa = match resolve_input(a, &cat) {
        Ok(s) => s,
        Err(e) => return fail_input(e),
    };
    let sb = match resolve_input(b, &cat) {
        Ok(s) => s,
        Err(e) => return fail_input(e),
    };
    let (alg_a, alg_b) = match (expect_algebra(sa), expect_algebra(sb)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return fail_input(e),
    };
    let mut budget = IsoBudget {
        groebner_steps: budget_steps,
        ..IsoBudget::default()
    };
    if let Some(csv) = grid {
        match parse_grid(csv) {
            Ok(g) => budget.grid = g,
            Err(e) => return fail_input(e),
        }
    }
    match decide_isomorphic(&alg_a, &alg_b, &budget) {
        Err(e) => fail_input(e),
        Ok(IsoVerdict::Isomorphic(w)) => {
            if w.is_identity() {
                println!("isomorphic (identity)");
            } else {
                println!("isomorphic");
            }
            for r in 0..w.rows() {
                let row: Vec<String> =
                    w.row(r).iter().map(bihom::exact::format_rational).collect();
                println!("  [{}]", row.join(", "));
            }
            ExitCode::from(EXIT_PASS)
        }
        Ok(IsoVerdict::NotIsomorphic(cert)) => {
            match cert {
                polysys::IsoCertificate::InvariantMismatch { field, left, right } => {
                    println!("not-isomorphic: {field} ({left} vs {right})");
                }
                polysys::IsoCertificate::TrivialIdeal { constant } => {
                    println!(
                        "not-isomorphic: trivial ideal (constant {})",
                        bihom::exact::format_rational(&constant)
                    );
                }
            }
            ExitCode::from(EXIT_FAIL)
        }
        Ok(IsoVerdict::Unknown(reason)) => {
            println!("unknown: {reason}");
            ExitCode::from(EXIT_UNKNOWN)
        }
    }
}

fn cmd_antipode(input: &InputArg) -> ExitCode {
    let cat = match load_catalog_or_exit() {
        Ok(c) => c,
        Err(e) => return e,
    };
    let structure = match structure_from_input(input, &cat) {
        Ok(s) => s,
        Err(e) => return fail_input(e),
    };
    let Structure::Bialgebra(b) = structure else {
        return fail_input("antipode needs a bialgebra structure");
    };
    let result = b.solve_antipode();
    match result.status {
        AntipodeStatus::Found => {
            let s = result.antipode.expect("found carries a matrix");
            println!(
                "antipode found (solution space dimension {})",
                result.solution_space_dim.unwrap_or(0)
            );
            for r in 0..s.rows() {
                let row: Vec<String> =
                    s.row(r).iter().map(bihom::exact::format_rational).collect();
                println!("  [{}]", row.join(", "));
            }
            ExitCode::from(EXIT_PASS)
        }
        AntipodeStatus::NoSolution => {
            println!("no antipode: the linear system is inconsistent");
            ExitCode::from(EXIT_FAIL)
        }
        AntipodeStatus::NotApplicable(reason) => {
            println!("not applicable: {reason}");
            ExitCode::from(EXIT_UNKNOWN)
        }
    }
}

fn cmd_audit(scope: &str, out: Option<&PathBuf>, format: OutputFormat, budget: u64) -> ExitCode {
    let cat = match load_catalog_or_exit() {
        Ok(c) => c,
        Err(e) => return e,
    };
    let scope = match catalog::parse_scope(scope) {
        Ok(s) => s,
        Err(e) => return fail_input(e),
    };
    if let catalog::AuditScope::Entry(id) = &scope {
        if cat.get(id).is_none() {
            return fail_input(format!("no catalog entry named {id}"));
        }
    }
    let audit_budget = catalog::AuditBudget {
        iso: IsoBudget {
            groebner_steps: budget,
            ..IsoBudget::default()
        },
    };
    let report = catalog::audit(&cat, &scope, &audit_budget);
    let rendered = catalog::emit_report(
        &report,
        match format {
            OutputFormat::Structured => catalog::ReportFormat::Structured,
            OutputFormat::Human => catalog::ReportFormat::Human,
        },
    );
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                return fail_input(format!("{}: {e}", path.display()));
            }
            println!(
                "audit complete: {} entries, {} discrepancies -> {}",
                report.entries.len(),
                report.discrepancies.len(),
                path.display()
            );
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(EXIT_PASS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_enum_comul(
    input: &InputArg,
    grid: &str,
    sparsity: usize,
    psi: TwistChoice,
    omega: TwistChoice,
    counital: bool,
    cap: u64,
) -> ExitCode {
    let cat = match load_catalog_or_exit() {
        Ok(c) => c,
        Err(e) => return e,
    };
    let structure = match structure_from_input(input, &cat) {
        Ok(s) => s,
        Err(e) => return fail_input(e),
    };
    let algebra = match expect_algebra(structure) {
        Ok(a) => a,
        Err(e) => return fail_input(e),
    };
    let grid = match parse_grid(grid) {
        Ok(g) => g,
        Err(e) => return fail_input(e),
    };
    let pick = |choice: TwistChoice| match choice {
        TwistChoice::Identity => bihom::exact::Matrix::identity(algebra.dim()),
        TwistChoice::Alpha => algebra.alpha().clone(),
        TwistChoice::Beta => algebra.beta().clone(),
    };
    let config = ComulSearchConfig {
        grid,
        max_nonzero_per_image: sparsity,
        candidate_cap: cap,
        require_counital: counital,
    };
    match enumerate_comultiplications(&algebra, &pick(psi), &pick(omega), &config) {
        Err(e) => {
            eprintln!("refused: {e}");
            ExitCode::from(EXIT_UNKNOWN)
        }
        Ok(found) => {
            println!("{} compatible comultiplications", found.len());
            for (i, b) in found.iter().enumerate() {
                println!("--- candidate {}", i + 1);
                print!("{}", write_structure(&Structure::Bialgebra(b.clone())));
            }
            ExitCode::from(EXIT_PASS)
        }
    }
}

fn cmd_groebner(
    path: Option<&PathBuf>,
    iso_pair: Option<&str>,
    variety: Option<usize>,
    order: Option<OrderChoice>,
    budget: u64,
    format: OutputFormat,
) -> ExitCode {
    let cat = match load_catalog_or_exit() {
        Ok(c) => c,
        Err(e) => return e,
    };
    let mut ideal = match (path, iso_pair, variety) {
        (Some(p), None, None) => {
            let text = match std::fs::read_to_string(p) {
                Ok(t) => t,
                Err(e) => return fail_input(format!("{}: {e}", p.display())),
            };
            match parse_ideal(&text) {
                Ok(i) => i,
                Err(e) => return fail_input(format!("{}: {e}", p.display())),
            }
        }
        (None, Some(pair), None) => {
            let Some((a, b)) = pair.split_once(',') else {
                return fail_input("--iso-pair wants two inputs separated by a comma");
            };
            let sa = match resolve_input(a.trim(), &cat).and_then(expect_algebra) {
                Ok(s) => s,
                Err(e) => return fail_input(e),
            };
            let sb = match resolve_input(b.trim(), &cat).and_then(expect_algebra) {
                Ok(s) => s,
                Err(e) => return fail_input(e),
            };
            match polysys::gen_iso_system(&sa, &sb) {
                Ok(i) => i,
                Err(e) => return fail_input(e),
            }
        }
        (None, None, Some(n)) => {
            match polysys::gen_variety_system(n, polysys::SymbolicParts::all(), None) {
                Ok(sys) => sys.ideal,
                Err(e) => return fail_input(e),
            }
        }
        _ => return fail_input("give exactly one of: an ideal file, --iso-pair, --variety"),
    };
    if let Some(choice) = order {
        ideal.order = match choice {
            OrderChoice::Lex => MonomialOrder::Lex,
            OrderChoice::Degrevlex => MonomialOrder::DegRevLex,
        };
    }
    match buchberger(&ideal, budget) {
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_UNKNOWN)
        }
        Ok(gb) => {
            match format {
                OutputFormat::Human => {
                    println!(
                        "reduced basis ({} polynomials, {} reduction steps):",
                        gb.basis.len(),
                        gb.steps
                    );
                    for g in &gb.basis {
                        println!("  {g}");
                    }
                    if polysys::ideal_is_trivial(&gb) {
                        println!("ideal is trivial: no solutions over the algebraic closure");
                    }
                }
                OutputFormat::Structured => {
                    let out = polysys::Ideal {
                        generators: gb.basis.clone(),
                        vars: gb.vars.clone(),
                        order: gb.order,
                    };
                    print!("{}", write_ideal(&out));
                }
            }
            ExitCode::from(EXIT_PASS)
        }
    }
}

fn cmd_fingerprint(input: &InputArg, format: OutputFormat) -> ExitCode {
    let cat = match load_catalog_or_exit() {
        Ok(c) => c,
        Err(e) => return e,
    };
    let structure = match structure_from_input(input, &cat) {
        Ok(s) => s,
        Err(e) => return fail_input(e),
    };
    let algebra = match expect_algebra(structure) {
        Ok(a) => a,
        Err(e) => return fail_input(e),
    };
    let doc = catalog::audit::fingerprint_doc(&invariants::fingerprint(&algebra));
    match format {
        OutputFormat::Structured => {
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            print!("{s}");
        }
        OutputFormat::Human => {
            println!("dim: {}", doc.dim);
            println!(
                "alpha invariant factors: [{}]",
                doc.alpha_invariant_factors.join(", ")
            );
            println!(
                "beta invariant factors: [{}]",
                doc.beta_invariant_factors.join(", ")
            );
            println!("mul rank: {}", doc.mul_rank);
            println!(
                "annihilators (left, right, two-sided): ({}, {}, {})",
                doc.ann_left, doc.ann_right, doc.ann_two_sided
            );
            println!("commutative: {}", doc.commutative);
            println!("has unit: {}", doc.has_unit);
        }
    }
    ExitCode::from(EXIT_PASS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { input, format } => cmd_verify(&input, format),
        Command::Iso { a, b, budget, grid } => cmd_iso(&a, &b, budget, grid.as_deref()),
        Command::Antipode { input } => cmd_antipode(&input),
        Command::Audit {
            scope,
            out,
            format,
            budget,
        } => cmd_audit(&scope, out.as_ref(), format, budget),
        Command::EnumComul {
            input,
            grid,
            sparsity,
            psi,
            omega,
            counital,
            cap,
        } => cmd_enum_comul(&input, &grid, sparsity, psi, omega, counital, cap),
        Command::Groebner {
            path,
            iso_pair,
            variety,
            order,
            budget,
            format,
        } => cmd_groebner(
            path.as_ref(),
            iso_pair.as_deref(),
            variety,
            order,
            budget,
            format,
        ),
        Command::Fingerprint { input, format } => cmd_fingerprint(&input, format),
    }
}
