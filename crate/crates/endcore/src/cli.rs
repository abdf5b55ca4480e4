//! Command implementations behind the `endcore` binary.
//!
//! Every command produces a [`Report`]: the command name, an ordered list of
//! checks (name, equation, pass/fail, witness, timing) and notes. Exit codes
//! follow one contract everywhere: `0` all checks passed, `1` some axiom
//! check failed, `2` the input could not be parsed or validated.

use crate::builtins;
use crate::document::{parse_document, Document, DocumentError};
use crate::report::{Check, CheckReport};
use crate::setcore::{self, SetCensus, SizeError};
use crate::tannaka::{
    self, check_e_i_axiom, check_e_r_axiom, check_outer_diagram, check_relations, check_trace,
    compute_coend, verify_conclusion, FunctorStructure, MonoidalPresentation, TannakaError,
    ValidationError,
};
use crate::vncore::{check_all, group_algebra, hopf_to_vncore, GroupTable, NotAGroupError, VNCoreData};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Input or validation failure; always exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("not a group table: {0}")]
    NotAGroup(#[from] NotAGroupError),
    #[error(transparent)]
    Size(#[from] SizeError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// Machine-readable command outcome. Serialization is deterministic for a
/// fixed input modulo the per-check `micros` fields.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    /// True when the failure is a validation failure rather than an axiom
    /// failure (drives exit code 2 instead of 1).
    #[serde(default)]
    pub invalid_input: bool,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<SetCensus>,
}

impl Report {
    fn new(command: &str) -> Report {
        Report {
            command: command.into(),
            passed: true,
            invalid_input: false,
            checks: Vec::new(),
            notes: Vec::new(),
            census: None,
        }
    }

    fn absorb(&mut self, report: CheckReport) {
        self.checks.extend(report.checks);
        self.recompute();
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.recompute();
    }

    fn recompute(&mut self) {
        self.passed = self.checks.iter().all(|c| c.passed);
    }

    /// 0 = all checks passed, 1 = axiom failure, 2 = validation failure.
    pub fn exit_code(&self) -> i32 {
        if self.invalid_input {
            2
        } else if !self.passed {
            1
        } else {
            0
        }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.command)?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{tag}] {:<52} {}", c.name, c.equation)?;
            if let Some(w) = &c.witness {
                writeln!(f, "       witness: {w}")?;
            }
        }
        let verdict = if self.passed { "all checks passed" } else { "FAILURES present" };
        writeln!(
            f,
            "{} checks, {} failed — {verdict}",
            self.checks.len(),
            self.checks.iter().filter(|c| !c.passed).count()
        )
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// `check <file>`: run the full check suite for the document's kind.
pub fn cmd_check(path: &Path) -> Result<Report, CliError> {
    let doc = parse_document(&read_file(path)?)?;
    check_document(&doc)
}

/// Dispatches a parsed document to its checkers.
pub fn check_document(doc: &Document) -> Result<Report, CliError> {
    let mut report = Report::new(&format!("check ({})", doc.kind()));
    match doc {
        Document::VnCore(core) => report.absorb(check_all(core)),
        Document::Hopf(h) => {
            report.absorb(h.check());
            if report.passed {
                let core = VNCoreData::new(h.algebra.clone(), h.coalgebra.clone(), h.antipode.clone());
                report.absorb(check_all(&core));
            } else {
                report.notes.push("hopf laws failed; VN-core checks skipped".into());
            }
        }
        Document::Group(g) => {
            let table = GroupTable::new(g.table.clone())?;
            let hopf = group_algebra(&table);
            report.absorb(hopf.check());
            let core = hopf_to_vncore(&hopf).expect("group algebras are Hopf algebras");
            report.absorb(check_all(&core));
        }
        Document::SetCore(core) => {
            report.push(Check::run("monoid laws", "associativity and two-sided unit", || {
                core.magma.monoid_violation().map(|v| match v {
                    setcore::MonoidViolation::Associativity { a, b, c } => {
                        crate::report::Witness::Element { element: a, lhs: vec![a, b, c], rhs: vec![] }
                    }
                    setcore::MonoidViolation::LeftUnit { a }
                    | setcore::MonoidViolation::RightUnit { a } => {
                        crate::report::Witness::Element { element: a, lhs: vec![a], rhs: vec![] }
                    }
                })
            }));
            report.absorb(setcore::check_set_core(core));
        }
        Document::Tannaka { presentation, functor } => {
            return run_tannaka(presentation, functor.as_ref(), functor.is_none());
        }
    }
    Ok(report)
}

/// `enumerate --size N`: exhaustive Set census, oracle comparison, optional
/// census file.
pub fn cmd_enumerate(n: usize, census_path: Option<&Path>) -> Result<Report, CliError> {
    let census = setcore::enumerate_unital_cores(n)?;
    let mut report = Report::new(&format!("enumerate n={n}"));
    report.absorb(census.to_report());
    report.notes.push(format!(
        "{} surviving tables, {} group tables, {} isomorphism orbits",
        census.survivors.len(),
        census.group_tables.len(),
        census.orbits.len()
    ));
    if let Some(path) = census_path {
        let text = serde_json::to_string_pretty(&census).expect("census serializes");
        std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        })?;
        report.notes.push(format!("census written to {}", path.display()));
    }
    report.census = Some(census);
    Ok(report)
}

/// `tannaka <file>`: the full pipeline, or `--coend-only` to stop after the
/// coend computation (the only mode available without monoidal data).
pub fn cmd_tannaka(
    path: &Path,
    coend_only: bool,
    report_path: Option<&Path>,
) -> Result<Report, CliError> {
    let doc = parse_document(&read_file(path)?)?;
    let Document::Tannaka { presentation, functor } = doc else {
        return Err(CliError::Validation(ValidationError {
            what: format!("expected a tannaka document, found kind {:?}", doc.kind()),
            location: path.display().to_string(),
        }));
    };
    let report = run_tannaka(&presentation, functor.as_ref(), coend_only)?;
    if let Some(out) = report_path {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        std::fs::write(out, text).map_err(|source| CliError::Write {
            path: out.to_path_buf(),
            source,
        })?;
    }
    Ok(report)
}

/// The staged pipeline: validate → duality axioms → trace → coend →
/// structure maps → antipode → outer diagram → conclusion.
pub fn run_tannaka(
    p: &MonoidalPresentation,
    f: Option<&FunctorStructure>,
    coend_only: bool,
) -> Result<Report, CliError> {
    tannaka::validate_presentation(p)?;
    let mut report = Report::new(if coend_only { "tannaka (coend only)" } else { "tannaka" });

    if coend_only {
        report.absorb(check_relations(p).prefixed("validate: "));
        let coend = compute_coend(p);
        report.push(Check {
            name: format!("coend: dimension = {}", coend.dim()),
            equation: "E = ⊕ U(A)*⊗U(A) / dinaturality".into(),
            passed: true,
            witness: None,
            micros: 0,
        });
        report.notes.push(format!(
            "ambient dimension {}, {} relations, coend dimension {}",
            coend.ambient_dim(),
            coend.quotient.relations.len(),
            coend.dim()
        ));
        if !report.passed {
            report.invalid_input = true;
        }
        return Ok(report);
    }

    let Some(f) = f else {
        return Err(CliError::Validation(ValidationError {
            what: "document has no monoidal/functor data; rerun with --coend-only".into(),
            location: "tannaka pipeline".into(),
        }));
    };

    let validation = tannaka::validate(p, f)?;
    let validation_ok = validation.passed();
    report.absorb(validation.prefixed("validate: "));
    if !validation_ok {
        report.invalid_input = true;
        report.notes.push("validation failed; pipeline stopped".into());
        return Ok(report);
    }

    report.absorb(check_e_r_axiom(p, f).prefixed("axiom: "));
    report.absorb(check_e_i_axiom(p, f).prefixed("axiom: "));

    let mut dims: Vec<usize> = (0..p.n_objects()).map(|a| p.dim(a)).collect();
    dims.sort_unstable();
    dims.dedup();
    report.absorb(check_trace(&dims).prefixed("axiom: "));

    let coend = compute_coend(p);
    report.push(Check {
        name: format!("coend: dimension = {}", coend.dim()),
        equation: "E = ⊕ U(A)*⊗U(A) / dinaturality".into(),
        passed: true,
        witness: None,
        micros: 0,
    });

    let structure = match tannaka::build_structure(p, f, coend) {
        Ok((structure, checks)) => {
            report.absorb(checks.prefixed("structure: "));
            structure
        }
        Err(e) => {
            report.push(stage_failure("structure", e));
            return Ok(report);
        }
    };
    let algebra = match tannaka::build_antipode(p, f, structure) {
        Ok((algebra, checks)) => {
            report.absorb(checks.prefixed("antipode: "));
            algebra
        }
        Err(e) => {
            report.push(stage_failure("antipode", e));
            return Ok(report);
        }
    };

    for a in 0..p.n_objects() {
        report.absorb(check_outer_diagram(p, f, &algebra.coend, a).prefixed("diagram: "));
    }
    report.absorb(verify_conclusion(&algebra).prefixed("conclusion: "));
    Ok(report)
}

fn stage_failure(stage: &str, e: TannakaError) -> Check {
    Check {
        name: format!("{stage}: construction failed"),
        equation: "structure maps must annihilate every coend relation".into(),
        passed: false,
        witness: None,
        micros: 0,
    }
    .with_note(e.to_string())
}

impl Check {
    fn with_note(mut self, note: String) -> Check {
        self.name = format!("{} — {note}", self.name);
        self
    }
}

/// `examples`: runs the entire built-in suite. `only` filters example names
/// by substring; an empty match set is a vacuous pass with a warning.
/// `perturb` adds the sign-flipped `Ue` fixture, whose targeted duality
/// checks are expected to fail — demonstrating failure detection.
pub fn cmd_examples(only: Option<&str>, perturb: bool) -> Report {
    let mut report = Report::new("examples");
    let matches = |name: &str| only.is_none_or(|pat| name.contains(pat));
    let mut ran_any = false;

    for ex in builtins::monoidal_examples() {
        if !matches(ex.name) {
            continue;
        }
        ran_any = true;
        match run_tannaka(&ex.presentation, ex.functor.as_ref(), false) {
            Ok(sub) => {
                for c in sub.checks {
                    report.push(Check {
                        name: format!("{}: {}", ex.name, c.name),
                        ..c
                    });
                }
                report.push(coend_dim_check(ex.name, &ex.presentation, ex.expected_coend_dim));
            }
            Err(e) => report.push(Check {
                name: format!("{}: pipeline error — {e}", ex.name),
                equation: String::new(),
                passed: false,
                witness: None,
                micros: 0,
            }),
        }
    }

    let reps = builtins::z2_representations();
    if matches(reps.name) {
        ran_any = true;
        report.absorb(check_relations(&reps.presentation).prefixed("z2-representations: "));
        report.push(coend_dim_check(reps.name, &reps.presentation, reps.expected_coend_dim));
        let redundant = builtins::z2_representations_with_redundant_generators();
        let base_coend = compute_coend(&reps.presentation);
        let red_coend = compute_coend(&redundant.presentation);
        report.push(Check::run(
            "z2-representations: redundant generators leave quotient unchanged",
            "composite relations lie in the generator span",
            || {
                (base_coend.quotient.q != red_coend.quotient.q
                    || base_coend.dim() != red_coend.dim())
                .then(|| crate::report::Witness::Element {
                    element: red_coend.dim(),
                    lhs: vec![base_coend.dim()],
                    rhs: vec![red_coend.dim()],
                })
            },
        ));
    }

    for (name, table) in builtins::groups_up_to_order_6() {
        let label = format!("Q[{name}]");
        if !matches(&label) {
            continue;
        }
        ran_any = true;
        let hopf = group_algebra(&table);
        let mut merged = hopf.check();
        match hopf_to_vncore(&hopf) {
            Ok(core) => merged.merge(check_all(&core)),
            Err(e) => merged.push(Check {
                name: format!("containment failed — {e}"),
                equation: String::new(),
                passed: false,
                witness: None,
                micros: 0,
            }),
        }
        report.absorb(merged.prefixed(&format!("{label}: ")));
    }

    for n in 1..=setcore::MAX_ENUMERATION_SIZE {
        let label = format!("set census n={n}");
        if !matches(&label) {
            continue;
        }
        ran_any = true;
        match setcore::enumerate_unital_cores(n) {
            Ok(census) => report.absorb(census.to_report()),
            Err(e) => report.push(Check {
                name: format!("{label}: {e}"),
                equation: String::new(),
                passed: false,
                witness: None,
                micros: 0,
            }),
        }
    }

    if perturb {
        ran_any = true;
        let flipped = builtins::with_ue_sign_flip(&builtins::z2_characters(), 1);
        report.notes.push(
            "perturbation fixture: Ue sign flipped at object s of z2-characters; \
             the (e,r,r₀) and (e,i,i₀) checks at s are expected to fail"
                .into(),
        );
        match run_tannaka(&flipped.presentation, flipped.functor.as_ref(), false) {
            Ok(sub) => {
                for c in sub.checks {
                    report.push(Check {
                        name: format!("perturbed-z2: {}", c.name),
                        ..c
                    });
                }
            }
            Err(e) => report.push(Check {
                name: format!("perturbed-z2: pipeline error — {e}"),
                equation: String::new(),
                passed: false,
                witness: None,
                micros: 0,
            }),
        }
    }

    if !ran_any {
        report.notes.push("warning: no example matched the filter; vacuous pass".into());
    }
    report
}

fn coend_dim_check(name: &str, p: &MonoidalPresentation, expected: usize) -> Check {
    Check::run(
        format!("{name}: coend dimension = {expected}"),
        "rank computation over the exact quotient",
        || {
            let got = compute_coend(p).dim();
            (got != expected).then(|| crate::report::Witness::Element {
                element: got,
                lhs: vec![got],
                rhs: vec![expected],
            })
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_suite_is_green() {
        let report = cmd_examples(None, false);
        assert!(report.passed, "{report}");
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn perturbed_suite_fails_exactly_the_two_targeted_checks() {
        let report = cmd_examples(Some("nothing-matches"), true);
        assert_eq!(report.exit_code(), 1);
        let failures: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(
            failures,
            vec![
                "perturbed-z2: axiom: (e,r,r₀) at s",
                "perturbed-z2: axiom: (e,i,i₀) at s"
            ],
            "{report}"
        );
    }

    #[test]
    fn empty_filter_is_a_vacuous_pass_with_warning() {
        let report = cmd_examples(Some("no-such-example"), false);
        assert!(report.passed);
        assert_eq!(report.exit_code(), 0);
        assert!(report.notes.iter().any(|n| n.contains("vacuous")));
    }

    #[test]
    fn law_failures_in_validation_stop_the_pipeline_with_exit_two() {
        // Flip the sign of r at (s, s): the splitting r∘i = 1 fails, which is
        // a validation failure, not an axiom failure.
        let ex = crate::builtins::z2_characters();
        let mut f = ex.functor.clone().unwrap();
        f.r[3] = f.r[3].scale(&crate::linalg::rat_int(-1));
        let report = run_tannaka(&ex.presentation, Some(&f), false).unwrap();
        assert!(report.invalid_input);
        assert_eq!(report.exit_code(), 2);
        assert!(!report.get("validate: splitting at (s, s)").unwrap().passed);
        // The pipeline stopped before the duality axioms.
        assert!(report.get("axiom: (e,r,r₀) at s").is_none());
    }

    #[test]
    fn check_dispatches_coend_only_documents() {
        let doc = crate::document::parse_document(
            &std::fs::read_to_string(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/fixtures/z2_representations.json"
            ))
            .unwrap(),
        )
        .unwrap();
        let report = check_document(&doc).unwrap();
        assert!(report.passed);
        assert!(report.get("coend: dimension = 2").is_some());
    }

    #[test]
    fn enumerate_rejects_out_of_range_sizes() {
        assert!(matches!(cmd_enumerate(5, None), Err(CliError::Size(_))));
        assert!(cmd_enumerate(2, None).unwrap().passed);
    }

    #[test]
    fn report_json_round_trips() {
        let report = cmd_examples(Some("Q[Z/2]"), false);
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        let json2 = serde_json::to_string_pretty(&back).unwrap();
        assert_eq!(json, json2);
    }

    #[test]
    fn reports_are_deterministic_modulo_timing() {
        let mut a = cmd_examples(Some("set census"), false);
        let mut b = cmd_examples(Some("set census"), false);
        for c in a.checks.iter_mut().chain(b.checks.iter_mut()) {
            c.micros = 0;
        }
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
