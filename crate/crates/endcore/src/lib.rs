//! Exact-arithmetic verification and construction of VN-cores.
//!
//! A VN-core is an algebra `(A, μ, η)` and coalgebra `(A, δ, ε)` on one
//! carrier satisfying `δμ = (μ⊗μ)(1⊗c⊗1)(δ⊗δ)`, together with a map
//! `S: A → A` such that `μ₃(1⊗S⊗1)δ₃ = 1`; it is *unital* when moreover
//! `1⊗η = (1⊗μ)(1⊗S⊗1)δ₃`. In Set the unital ones are exactly the groups;
//! in vector spaces they contain the Hopf algebras.
//!
//! The crate provides, over exact rationals:
//!
//! - [`linalg`] — dense rational matrices, tensor combinators, duals,
//!   evaluation/coevaluation, symmetries, and quotient presentations with
//!   induced maps;
//! - [`vncore`] — (co)algebra structure-constant data, the three VN-core
//!   axiom checkers, and Hopf/group-algebra constructors;
//! - [`setcore`] — the Set-based axioms and a brute-force classification of
//!   unital VN-cores on carriers of size ≤ 4;
//! - [`tannaka`] — the endomorphism object `End∨(U) = ∫ U(B)*⊗U(B)` of a
//!   presented functor with abstract duality: coend computation, the five
//!   structure maps, the duality diagram checks, and verification that the
//!   result is a unital VN-core;
//! - [`builtins`] — the built-in example suite;
//! - [`document`] / [`cli`] — the JSON interchange schema and the command
//!   front end used by the `endcore` binary.
//!
//! Every check compares canonical-form rationals for exact equality; there is
//! no tolerance parameter anywhere. Failures carry a witness basis vector on
//! which the two sides of the offending equation can be re-evaluated.
//!
//! ```
//! use endcore::vncore::{check_all, group_algebra, hopf_to_vncore, GroupTable};
//!
//! // Q[Z/3] with the inverse-map antipode is a unital VN-core.
//! let core = hopf_to_vncore(&group_algebra(&GroupTable::cyclic(3))).unwrap();
//! assert!(check_all(&core).passed());
//! ```

// Index loops mirror the matrix formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod builtins;
pub mod cli;
pub mod document;
pub mod linalg;
pub mod report;
pub mod setcore;
pub mod tannaka;
pub mod vncore;

pub use linalg::{LinMap, QuotientPresentation, Rational};
pub use report::{Check, CheckReport, Witness};
