//! The trace identity `e∘c∘n = dim·1` and the snake identity, evaluated as
//! exact matrix composites for small dimensions.
//!
//! Run with: `cargo run --example trace_identity`

use endcore::linalg::{coevaluation, evaluation, symmetry, LinMap};

fn main() {
    for n in 1..=5 {
        let trace = evaluation(n).compose(&symmetry(n, n)).compose(&coevaluation(n));
        println!("dim {n}: e∘c∘n = {trace}");
        assert_eq!(trace, LinMap::scalar(endcore::linalg::rat_int(n as i64)));

        let snake = evaluation(n)
            .kron(&LinMap::identity(n))
            .compose(&LinMap::identity(n).kron(&coevaluation(n)));
        assert_eq!(snake, LinMap::identity(n));
        println!("dim {n}: (e⊗1)∘(1⊗n) = identity");
    }
    println!("\ntrace and snake identities hold exactly for dims 1..=5");
}
