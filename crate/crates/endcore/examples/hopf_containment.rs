//! Group algebras are unital VN-cores: build ℚ[G] for every group of order
//! at most 6, convert it to a core with S = antipode, and run the full axiom
//! suite.
//!
//! Run with: `cargo run --example hopf_containment`

use endcore::builtins::groups_up_to_order_6;
use endcore::vncore::{check_all, group_algebra, hopf_to_vncore};

fn main() {
    let mut all_ok = true;
    for (name, table) in groups_up_to_order_6() {
        let hopf = group_algebra(&table);
        let hopf_report = hopf.check();
        let core = hopf_to_vncore(&hopf).expect("group algebras satisfy the Hopf laws");
        let core_report = check_all(&core);
        let ok = hopf_report.passed() && core_report.passed();
        all_ok &= ok;
        println!(
            "Q[{name}] (dim {}): hopf laws {}, VN-core axioms {}",
            table.order(),
            if hopf_report.passed() { "pass" } else { "FAIL" },
            if core_report.passed() { "pass" } else { "FAIL" },
        );
        for check in core_report.checks {
            println!("    [{}] {:<28} {}", if check.passed { "ok" } else { "!!" }, check.name, check.equation);
        }
    }
    assert!(all_ok, "every group algebra must pass");
    println!("\nevery group algebra of order ≤ 6 is a unital VN-core");
}
