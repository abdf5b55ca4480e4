//! The JSON document interface: parse the shipped fixtures and run the same
//! checks the `endcore check` subcommand runs.
//!
//! Run with: `cargo run --example json_documents`

use endcore::cli::check_document;
use endcore::document::parse_document;

fn main() {
    let fixtures = [
        ("fixtures/z2_group.json", true),
        ("fixtures/z2_hopf.json", true),
        ("fixtures/z2_characters.json", true),
        ("fixtures/z3_vncore_s_identity.json", false),
        ("fixtures/semilattice_set_core.json", false),
    ];
    for (path, expect_pass) in fixtures {
        let full = format!("{}/{path}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&full).expect("fixture readable");
        let doc = parse_document(&text).expect("fixture parses");
        let report = check_document(&doc).expect("fixture checkable");
        println!(
            "{path} ({}): {} checks, {}",
            doc.kind(),
            report.checks.len(),
            if report.passed { "all pass" } else { "failures (expected for negative fixtures)" }
        );
        for c in report.checks.iter().filter(|c| !c.passed) {
            println!("    failing: {} — {}", c.name, c.equation);
            if let Some(w) = &c.witness {
                println!("    witness: {w}");
            }
        }
        assert_eq!(report.passed, expect_pass, "{path}");
    }
    println!("\nfixtures behave as documented (exit codes 0 / 1 via the CLI)");
}
