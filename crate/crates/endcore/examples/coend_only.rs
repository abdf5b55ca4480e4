//! Coend computation on a morphism-rich presentation without monoidal data:
//! the objects `I`, `s`, `ρ = I⊕s` of the ℤ/2 direct-sum picture with the
//! injections and projections as generators. The dinaturality relations glue
//! the diagonal of the `ρ` block to the two character blocks and kill the
//! off-diagonal, leaving a 2-dimensional coend. Adding redundant composite
//! generators changes nothing.
//!
//! Run with: `cargo run --example coend_only`

use endcore::builtins::{z2_representations, z2_representations_with_redundant_generators};
use endcore::tannaka::compute_coend;

fn main() {
    let ex = z2_representations();
    let coend = compute_coend(&ex.presentation);
    println!(
        "{}: ambient dim {}, {} relations, coend dim {}",
        ex.name,
        coend.ambient_dim(),
        coend.quotient.relations.len(),
        coend.dim()
    );
    println!("  projection q = {}", coend.quotient.q);
    println!("  section    s = {}", coend.quotient.s);
    assert_eq!(coend.dim(), 2);

    let redundant = z2_representations_with_redundant_generators();
    let again = compute_coend(&redundant.presentation);
    println!(
        "{}: ambient dim {}, {} relations, coend dim {}",
        redundant.name,
        again.ambient_dim(),
        again.quotient.relations.len(),
        again.dim()
    );
    assert_eq!(again.dim(), coend.dim());
    assert_eq!(again.quotient.q, coend.quotient.q);
    assert_eq!(again.quotient.s, coend.quotient.s);
    println!("  projection and section unchanged by the redundant generators");
}
