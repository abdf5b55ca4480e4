//! Failure detection: replace the antipode of ℚ[ℤ/3] by the identity map and
//! watch the axioms break with a concrete grouplike witness, then look at the
//! 2-element semilattice algebra, which satisfies the VN axiom but not the
//! unital one.
//!
//! Run with: `cargo run --example negative_control`

use endcore::linalg::{rat_int, LinMap};
use endcore::vncore::{
    check_compat, check_unital, check_vn, group_algebra, AlgebraData, CoalgebraData, GroupTable,
    VNCoreData,
};

fn main() {
    let hopf = group_algebra(&GroupTable::cyclic(3));
    let broken = VNCoreData::new(hopf.algebra.clone(), hopf.coalgebra.clone(), LinMap::identity(3));

    println!("Q[Z/3] with S replaced by the identity map:");
    println!("  compatibility: {}", verdict(check_compat(&broken).passed()));
    println!("  vn axiom:      {}", verdict(check_vn(&broken).passed()));
    let unital = check_unital(&broken);
    println!("  unital axiom:  {}", verdict(unital.passed()));
    let failing = unital.get("unital axiom").expect("check ran");
    println!(
        "  witness: {}",
        failing.witness.as_ref().expect("failure carries a witness")
    );
    println!("  (basis vector 1 is the grouplike g: lhs is g⊗e, rhs is g⊗g²)");
    assert!(!check_vn(&broken).passed(), "S = 1 is not von Neumann regular on Z/3");
    assert!(!unital.passed());

    // The semilattice {e, z} with z absorbing: grouplike δ, S = identity.
    // VN holds (z·z·z = z) but S(z)·z = z can never be e.
    let n = 2;
    let table = [[0usize, 1], [1, 1]];
    let mut mu = LinMap::zero(n, n * n);
    for (a, row) in table.iter().enumerate() {
        for (b, &product) in row.iter().enumerate() {
            mu.set(product, a * n + b, rat_int(1));
        }
    }
    let mut eta = LinMap::zero(n, 1);
    eta.set(0, 0, rat_int(1));
    let mut delta = LinMap::zero(n * n, n);
    let mut eps = LinMap::zero(1, n);
    for a in 0..n {
        delta.set(a * n + a, a, rat_int(1));
        eps.set(0, a, rat_int(1));
    }
    let semilattice = VNCoreData::new(
        AlgebraData::new(n, mu, eta),
        CoalgebraData::new(n, delta, eps),
        LinMap::identity(n),
    );
    println!("\nsemilattice algebra Q[{{e, z}}] with S = identity:");
    println!("  vn axiom:      {}", verdict(check_vn(&semilattice).passed()));
    println!("  unital axiom:  {}", verdict(check_unital(&semilattice).passed()));
    assert!(check_vn(&semilattice).passed());
    assert!(!check_unital(&semilattice).passed());
    println!("\nthe unital axiom is strictly stronger than the VN axiom");
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL (expected)"
    }
}
