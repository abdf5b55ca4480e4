//! End-to-end tests of the `endcore` binary: exit codes, JSON reports,
//! census files, and the shipped fixtures.

use endcore::cli::Report;
use endcore::document::{parse_document, Document};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn endcore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_endcore"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn check_passing_documents_exit_zero() {
    for name in ["z2_group.json", "z2_hopf.json", "z2_characters.json"] {
        let out = endcore(&["check", fixture(name).to_str().unwrap()]);
        assert_eq!(exit_code(&out), 0, "{name}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn check_failing_axioms_exit_one_with_witness() {
    let out = endcore(&["check", fixture("z3_vncore_s_identity.json").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[FAIL] unital axiom"), "{text}");
    assert!(text.contains("witness"), "{text}");

    let out = endcore(&["check", fixture("semilattice_set_core.json").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn parse_errors_exit_two() {
    let dir = std::env::temp_dir();
    let bad = dir.join("endcore_bad_rational.json");
    std::fs::write(
        &bad,
        r#"{"kind": "vncore", "dim": 1,
            "mu": {"rows": 1, "cols": 1, "entries": ["1/0"]},
            "eta": {"rows": 1, "cols": 1, "entries": ["1"]},
            "delta": {"rows": 1, "cols": 1, "entries": ["1"]},
            "eps": {"rows": 1, "cols": 1, "entries": ["1"]},
            "s": {"rows": 1, "cols": 1, "entries": ["1"]}}"#,
    )
    .unwrap();
    let out = endcore(&["check", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("rational"));

    let missing = dir.join("endcore_no_such_file.json");
    let out = endcore(&["check", missing.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn group_document_with_broken_table_exits_two() {
    let dir = std::env::temp_dir();
    let path = dir.join("endcore_not_a_group.json");
    std::fs::write(&path, r#"{"kind": "group", "table": [[0, 0], [1, 1]]}"#).unwrap();
    let out = endcore(&["check", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("identity"));
}

#[test]
fn enumerate_writes_a_census_and_enforces_the_bound() {
    let census_path = std::env::temp_dir().join("endcore_census_3.json");
    let out = endcore(&[
        "enumerate",
        "--size",
        "3",
        "--census",
        census_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let census: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&census_path).unwrap()).unwrap();
    assert_eq!(census["n"], 3);
    assert_eq!(census["matches_oracle"], true);
    assert_eq!(census["survivors"].as_array().unwrap().len(), 3);

    let out = endcore(&["enumerate", "--size", "5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("1..=4"));
}

#[test]
fn tannaka_pipeline_runs_from_a_document() {
    let out = endcore(&[
        "tannaka",
        fixture("z2_characters.json").to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report: Report = serde_json::from_slice(&out.stdout).expect("json report parses");
    assert!(report.passed);
    assert!(report.get("coend: dimension = 2").is_some());
    assert!(report
        .checks
        .iter()
        .any(|c| c.name == "conclusion: End∨U unital axiom" && c.passed));
}

#[test]
fn tannaka_coend_only_handles_presentations_without_monoidal_data() {
    let file = fixture("z2_representations.json");
    let report_path = std::env::temp_dir().join("endcore_reps_report.json");
    let out = endcore(&[
        "tannaka",
        file.to_str().unwrap(),
        "--coend-only",
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let report: Report =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert!(report.passed);
    assert!(report.get("coend: dimension = 2").is_some());

    // Without --coend-only the same document is a validation error (exit 2).
    let out = endcore(&["tannaka", file.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn tannaka_rejects_dim_zero_objects_at_validation() {
    let dir = std::env::temp_dir();
    let path = dir.join("endcore_dim_zero.json");
    std::fs::write(
        &path,
        r#"{"kind": "tannaka", "objects": [{"name": "I", "dim": 0}]}"#,
    )
    .unwrap();
    let out = endcore(&["tannaka", path.to_str().unwrap(), "--coend-only"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension 0"));
}

#[test]
fn examples_command_is_green_and_perturbation_is_detected() {
    let out = endcore(&["examples", "--only", "Q[Z/3]"]);
    assert_eq!(exit_code(&out), 0);

    let out = endcore(&["examples", "--only", "no-match-at-all", "--perturb"]);
    assert_eq!(exit_code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[FAIL] perturbed-z2: axiom: (e,r,r₀) at s"), "{text}");
}

#[test]
fn fixtures_match_the_builtin_catalog() {
    let text = std::fs::read_to_string(fixture("z2_characters.json")).unwrap();
    let Document::Tannaka { presentation, functor } = parse_document(&text).unwrap() else {
        panic!("wrong kind");
    };
    let builtin = endcore::builtins::z2_characters();
    assert_eq!(presentation, builtin.presentation);
    assert_eq!(functor, builtin.functor);

    let text = std::fs::read_to_string(fixture("z2_representations.json")).unwrap();
    let Document::Tannaka { presentation, functor } = parse_document(&text).unwrap() else {
        panic!("wrong kind");
    };
    let builtin = endcore::builtins::z2_representations();
    assert_eq!(presentation, builtin.presentation);
    assert!(functor.is_none());

    // The hopf fixture is exactly the group algebra of the group fixture.
    let text = std::fs::read_to_string(fixture("z2_hopf.json")).unwrap();
    let Document::Hopf(hopf) = parse_document(&text).unwrap() else {
        panic!("wrong kind");
    };
    let expected = endcore::vncore::group_algebra(&endcore::vncore::GroupTable::cyclic(2));
    assert_eq!(hopf.algebra, expected.algebra);
    assert_eq!(hopf.coalgebra, expected.coalgebra);
    assert_eq!(hopf.antipode, expected.antipode);

    let text = std::fs::read_to_string(fixture("z3_vncore_s_identity.json")).unwrap();
    let Document::VnCore(core) = parse_document(&text).unwrap() else {
        panic!("wrong kind");
    };
    let z3 = endcore::vncore::group_algebra(&endcore::vncore::GroupTable::cyclic(3));
    assert_eq!(core.algebra, z3.algebra);
    assert_eq!(core.coalgebra, z3.coalgebra);
    assert_eq!(core.s, endcore::linalg::LinMap::identity(3));
}

#[test]
fn json_reports_are_deterministic_modulo_timing() {
    let file = fixture("z2_characters.json");
    let mut runs = Vec::new();
    for _ in 0..2 {
        let out = endcore(&["tannaka", file.to_str().unwrap(), "--json"]);
        let mut report: Report = serde_json::from_slice(&out.stdout).unwrap();
        for c in &mut report.checks {
            c.micros = 0;
        }
        runs.push(serde_json::to_string(&report).unwrap());
    }
    assert_eq!(runs[0], runs[1]);
}
