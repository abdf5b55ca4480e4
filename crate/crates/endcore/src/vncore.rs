//! Finite-dimensional algebra/coalgebra data over the rationals and the
//! VN-core axiom checkers.
//!
//! A VN-core is a carrier with an algebra structure (μ, η), a coalgebra
//! structure (δ, ε) satisfying the compatibility law
//! `δμ = (μ⊗μ)(1⊗c⊗1)(δ⊗δ)`, and an endomorphism S with
//! `μ₃(1⊗S⊗1)δ₃ = 1`. It is unital when additionally
//! `1⊗η = (1⊗μ)(1⊗S⊗1)δ₃`. Group algebras with the inverse-map antipode
//! are the motivating instances; [`hopf_to_vncore`] realizes the containment
//! of Hopf algebras among unital VN-cores.

use crate::linalg::{LinMap, Rational};
use crate::report::{column_witness, Check, CheckReport, Witness};
use num_traits::One;
use thiserror::Error;

pub const EQ_ASSOC: &str = "μ(μ⊗1) = μ(1⊗μ)";
pub const EQ_UNIT: &str = "μ(η⊗1) = 1 = μ(1⊗η)";
pub const EQ_COASSOC: &str = "(δ⊗1)δ = (1⊗δ)δ";
pub const EQ_COUNIT: &str = "(ε⊗1)δ = 1 = (1⊗ε)δ";
pub const EQ_COMPAT: &str = "δμ = (μ⊗μ)(1⊗c⊗1)(δ⊗δ)";
pub const EQ_VN: &str = "μ₃(1⊗S⊗1)δ₃ = 1";
pub const EQ_UNITAL: &str = "1⊗η = (1⊗μ)(1⊗S⊗1)δ₃";
pub const EQ_ANTIPODE: &str = "μ(S⊗1)δ = ηε = μ(1⊗S)δ";

/// An axiom that was required to hold did not.
#[derive(Debug, Clone, Error)]
#[error("axiom failed: {check}{}", witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default())]
pub struct AxiomError {
    pub check: String,
    pub witness: Option<Witness>,
}

/// An associative unital algebra `(A, μ, η)` given by structure matrices:
/// `μ: A⊗A → A` is `n × n²`, `η: k → A` is `n × 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraData {
    pub dim: usize,
    pub mu: LinMap,
    pub eta: LinMap,
}

impl AlgebraData {
    pub fn new(dim: usize, mu: LinMap, eta: LinMap) -> Self {
        assert_eq!((mu.rows(), mu.cols()), (dim, dim * dim), "μ must be n×n²");
        assert_eq!((eta.rows(), eta.cols()), (dim, 1), "η must be n×1");
        AlgebraData { dim, mu, eta }
    }

    /// Associativity and both unit laws.
    pub fn check(&self) -> CheckReport {
        let n = self.dim;
        let id = LinMap::identity(n);
        let mut report = CheckReport::new();
        report.push(Check::equality("algebra associativity", EQ_ASSOC, || {
            (
                self.mu.compose(&self.mu.kron(&id)),
                self.mu.compose(&id.kron(&self.mu)),
            )
        }));
        report.push(Check::equality("algebra left unit", EQ_UNIT, || {
            (self.mu.compose(&self.eta.kron(&id)), id.clone())
        }));
        report.push(Check::equality("algebra right unit", EQ_UNIT, || {
            (self.mu.compose(&id.kron(&self.eta)), id.clone())
        }));
        report
    }
}

/// A coassociative counital coalgebra `(A, δ, ε)`:
/// `δ: A → A⊗A` is `n² × n`, `ε: A → k` is `1 × n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoalgebraData {
    pub dim: usize,
    pub delta: LinMap,
    pub eps: LinMap,
}

impl CoalgebraData {
    pub fn new(dim: usize, delta: LinMap, eps: LinMap) -> Self {
        assert_eq!(
            (delta.rows(), delta.cols()),
            (dim * dim, dim),
            "δ must be n²×n"
        );
        assert_eq!((eps.rows(), eps.cols()), (1, dim), "ε must be 1×n");
        CoalgebraData { dim, delta, eps }
    }

    /// Coassociativity and both counit laws.
    pub fn check(&self) -> CheckReport {
        let n = self.dim;
        let id = LinMap::identity(n);
        let mut report = CheckReport::new();
        report.push(Check::equality("coalgebra coassociativity", EQ_COASSOC, || {
            (
                self.delta.kron(&id).compose(&self.delta),
                id.kron(&self.delta).compose(&self.delta),
            )
        }));
        report.push(Check::equality("coalgebra left counit", EQ_COUNIT, || {
            (self.eps.kron(&id).compose(&self.delta), id.clone())
        }));
        report.push(Check::equality("coalgebra right counit", EQ_COUNIT, || {
            (id.kron(&self.eps).compose(&self.delta), id.clone())
        }));
        report
    }
}

/// Algebra and coalgebra on one carrier together with a map `S: A → A`.
#[derive(Debug, Clone, PartialEq)]
pub struct VNCoreData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub s: LinMap,
}

impl VNCoreData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData, s: LinMap) -> Self {
        assert_eq!(algebra.dim, coalgebra.dim, "carrier dimensions must agree");
        assert_eq!(
            (s.rows(), s.cols()),
            (algebra.dim, algebra.dim),
            "S must be n×n"
        );
        VNCoreData { algebra, coalgebra, s }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }
}

/// Hopf-algebra data: a bialgebra with an antipode.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: LinMap,
}

impl HopfData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData, antipode: LinMap) -> Self {
        assert_eq!(algebra.dim, coalgebra.dim, "carrier dimensions must agree");
        assert_eq!(
            (antipode.rows(), antipode.cols()),
            (algebra.dim, algebra.dim),
            "antipode must be n×n"
        );
        HopfData {
            algebra,
            coalgebra,
            antipode,
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// All Hopf laws: (co)algebra laws, the bialgebra compatibility law and
    /// both antipode laws.
    pub fn check(&self) -> CheckReport {
        let n = self.dim();
        let id = LinMap::identity(n);
        let mu = &self.algebra.mu;
        let eta = &self.algebra.eta;
        let delta = &self.coalgebra.delta;
        let eps = &self.coalgebra.eps;

        let mut report = self.algebra.check();
        report.merge(self.coalgebra.check());
        report.push(Check::equality("bialgebra compatibility", EQ_COMPAT, || {
            (delta.compose(mu), compat_rhs(mu, delta, n))
        }));
        let eta_eps = eta.compose(eps);
        report.push(Check::equality("left antipode law", EQ_ANTIPODE, || {
            (
                mu.compose(&self.antipode.kron(&id)).compose(delta),
                eta_eps.clone(),
            )
        }));
        report.push(Check::equality("right antipode law", EQ_ANTIPODE, || {
            (
                mu.compose(&id.kron(&self.antipode)).compose(delta),
                eta_eps.clone(),
            )
        }));
        report
    }
}

/// The permutation `1⊗c⊗1` on `A⊗A⊗A⊗A` as a flat-index map
/// `e_a⊗e_b⊗e_c⊗e_d ↦ e_a⊗e_c⊗e_b⊗e_d`, applied by row reindexing so the
/// `n⁴ × n⁴` matrix is never materialized.
fn middle_swap_perm(n: usize) -> Vec<usize> {
    let n2 = n * n;
    (0..n2 * n2)
        .map(|idx| {
            let d = idx % n;
            let c = (idx / n) % n;
            let b = (idx / n2) % n;
            let a = idx / (n2 * n);
            ((a * n + c) * n + b) * n + d
        })
        .collect()
}

/// RHS of the compatibility law, `(μ⊗μ)(1⊗c⊗1)(δ⊗δ)`.
fn compat_rhs(mu: &LinMap, delta: &LinMap, n: usize) -> LinMap {
    mu.kron(mu)
        .compose(&delta.kron(delta).permute_rows(&middle_swap_perm(n)))
}

/// Triple multiplication `μ₃ = μ(μ⊗1): A⊗A⊗A → A`, with the opposite
/// association checked to give the same matrix.
pub fn mu3(a: &AlgebraData) -> Result<LinMap, AxiomError> {
    let id = LinMap::identity(a.dim);
    let left = a.mu.compose(&a.mu.kron(&id));
    let right = a.mu.compose(&id.kron(&a.mu));
    match column_witness(&left, &right) {
        None => Ok(left),
        Some(w) => Err(AxiomError {
            check: "μ₃ association independence".into(),
            witness: Some(w),
        }),
    }
}

/// Triple comultiplication `δ₃ = (δ⊗1)δ: A → A⊗A⊗A`, association-checked.
pub fn delta3(c: &CoalgebraData) -> Result<LinMap, AxiomError> {
    let id = LinMap::identity(c.dim);
    let left = c.delta.kron(&id).compose(&c.delta);
    let right = id.kron(&c.delta).compose(&c.delta);
    match column_witness(&left, &right) {
        None => Ok(left),
        Some(w) => Err(AxiomError {
            check: "δ₃ association independence".into(),
            witness: Some(w),
        }),
    }
}

/// The compatibility axiom `δμ = (μ⊗μ)(1⊗c⊗1)(δ⊗δ)` as an exact equality
/// of `n² × n²` matrices.
pub fn check_compat(v: &VNCoreData) -> CheckReport {
    let n = v.dim();
    let mu = &v.algebra.mu;
    let delta = &v.coalgebra.delta;
    let mut report = CheckReport::new();
    report.push(Check::equality("compatibility", EQ_COMPAT, || {
        (delta.compose(mu), compat_rhs(mu, delta, n))
    }));
    report
}

fn middle_s(v: &VNCoreData) -> LinMap {
    let id = LinMap::identity(v.dim());
    id.kron(&v.s).kron(&id)
}

/// The VN axiom `μ₃(1⊗S⊗1)δ₃ = 1`. A failed triple-association check is
/// reported as a failing entry rather than an error.
pub fn check_vn(v: &VNCoreData) -> CheckReport {
    let mut report = CheckReport::new();
    match (mu3(&v.algebra), delta3(&v.coalgebra)) {
        (Ok(m3), Ok(d3)) => {
            report.push(Check::equality("vn axiom", EQ_VN, || {
                (
                    m3.compose(&middle_s(v)).compose(&d3),
                    LinMap::identity(v.dim()),
                )
            }));
        }
        (m, d) => {
            for err in [m.err(), d.err()].into_iter().flatten() {
                report.push(Check {
                    name: err.check,
                    equation: EQ_VN.into(),
                    passed: false,
                    witness: err.witness,
                    micros: 0,
                });
            }
        }
    }
    report
}

/// The unital axiom `1⊗η = (1⊗μ)(1⊗S⊗1)δ₃`, with `A ≅ A⊗k` realized as
/// `a ↦ a⊗η(1)`, i.e. the `n² × n` matrix `1⊗η`.
pub fn check_unital(v: &VNCoreData) -> CheckReport {
    let mut report = CheckReport::new();
    match delta3(&v.coalgebra) {
        Ok(d3) => {
            let id = LinMap::identity(v.dim());
            report.push(Check::equality("unital axiom", EQ_UNITAL, || {
                (
                    id.kron(&v.algebra.eta),
                    id.kron(&v.algebra.mu)
                        .compose(&middle_s(v))
                        .compose(&d3),
                )
            }));
        }
        Err(err) => report.push(Check {
            name: err.check,
            equation: EQ_UNITAL.into(),
            passed: false,
            witness: err.witness,
            micros: 0,
        }),
    }
    report
}

/// Runs the (co)algebra law checks and all three core axioms.
pub fn check_all(v: &VNCoreData) -> CheckReport {
    let mut report = v.algebra.check();
    report.merge(v.coalgebra.check());
    report.merge(check_compat(v));
    report.merge(check_vn(v));
    report.merge(check_unital(v));
    report
}

/// A table that fails to be a group, with the offending data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotAGroupError {
    #[error("table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("table row count {rows} does not match order {order}")]
    BadShape { rows: usize, order: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("associativity fails on ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A validated group multiplication table on `{0, …, n−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates associativity, a two-sided identity, and inverses.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, NotAGroupError> {
        let order = rows.len();
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(NotAGroupError::BadShape { rows: row.len(), order });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(NotAGroupError::EntryOutOfRange { row: i, col: j, value: v });
                }
                table.push(v);
            }
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or(NotAGroupError::NoIdentity)?;
        for a in 0..order {
            if !(0..order).any(|b| mul(a, b) == identity && mul(b, a) == identity) {
                return Err(NotAGroupError::NoInverse { element: a });
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(NotAGroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(GroupTable { order, table, identity })
    }

    /// ℤ/n with addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(rows).expect("cyclic table is a group")
    }

    /// The Klein four-group as XOR on {0,1,2,3}.
    pub fn klein_four() -> Self {
        let rows = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Self::new(rows).expect("xor table is a group")
    }

    /// The symmetric group on three letters; elements are the permutations of
    /// {0,1,2} in lexicographic order, multiplied by composition
    /// `(σ·τ)(x) = σ(τ(x))`.
    pub fn symmetric_3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let rows = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                    .collect()
            })
            .collect();
        Self::new(rows).expect("permutation composition is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn identity_element(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("validated group has inverses")
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// The group algebra ℚ[G]: basis indexed by group elements, μ from the table,
/// grouplike δ, ε ≡ 1, and the inverse map as antipode.
pub fn group_algebra(g: &GroupTable) -> HopfData {
    let n = g.order();
    let mut mu = LinMap::zero(n, n * n);
    for a in 0..n {
        for b in 0..n {
            mu.set(g.mul(a, b), a * n + b, Rational::one());
        }
    }
    let mut eta = LinMap::zero(n, 1);
    eta.set(g.identity_element(), 0, Rational::one());
    let mut delta = LinMap::zero(n * n, n);
    for a in 0..n {
        delta.set(a * n + a, a, Rational::one());
    }
    let mut eps = LinMap::zero(1, n);
    for a in 0..n {
        eps.set(0, a, Rational::one());
    }
    let mut antipode = LinMap::zero(n, n);
    for a in 0..n {
        antipode.set(g.inverse(a), a, Rational::one());
    }
    HopfData::new(
        AlgebraData::new(n, mu, eta),
        CoalgebraData::new(n, delta, eps),
        antipode,
    )
}

/// Views Hopf data as a VN-core with `S` = antipode. The input laws are
/// checked, and the resulting core is verified against all three VN-core
/// axioms — Hopf algebras are unital VN-cores, and this function asserts it.
pub fn hopf_to_vncore(h: &HopfData) -> Result<VNCoreData, AxiomError> {
    let hopf_report = h.check();
    if let Some(fail) = hopf_report.failures().next() {
        return Err(AxiomError {
            check: fail.name.clone(),
            witness: fail.witness.clone(),
        });
    }
    let core = VNCoreData::new(h.algebra.clone(), h.coalgebra.clone(), h.antipode.clone());
    let core_report = check_all(&core);
    if let Some(fail) = core_report.failures().next() {
        return Err(AxiomError {
            check: fail.name.clone(),
            witness: fail.witness.clone(),
        });
    }
    Ok(core)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;

    fn trivial_core() -> VNCoreData {
        let one = LinMap::scalar(rat_int(1));
        VNCoreData::new(
            AlgebraData::new(1, one.clone(), one.clone()),
            CoalgebraData::new(1, one.clone(), one.clone()),
            one,
        )
    }

    fn group_core(g: &GroupTable) -> VNCoreData {
        hopf_to_vncore(&group_algebra(g)).unwrap()
    }

    fn with_s(core: &VNCoreData, s: LinMap) -> VNCoreData {
        VNCoreData::new(core.algebra.clone(), core.coalgebra.clone(), s)
    }

    #[test]
    fn trivial_core_passes_everything() {
        let report = check_all(&trivial_core());
        assert!(report.passed(), "{report}");
        assert_eq!(mu3(&trivial_core().algebra).unwrap(), LinMap::scalar(rat_int(1)));
    }

    #[test]
    fn mu3_folds_the_group_table_twice() {
        // Grouplike oracle: column g⊗g⊗g of μ₃ must be (g·g)·g = g for ℤ/2.
        let core = group_core(&GroupTable::cyclic(2));
        let m3 = mu3(&core.algebra).unwrap();
        let g = 1usize;
        let col = m3.column(g * 4 + g * 2 + g);
        assert_eq!(col, vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn mu3_rejects_non_associative_tables() {
        // Subtraction mod 3 is not associative.
        let n = 3;
        let mut mu = LinMap::zero(n, n * n);
        for a in 0..n {
            for b in 0..n {
                mu.set((a + 2 * b) % n, a * n + b, rat_int(1));
            }
        }
        let mut eta = LinMap::zero(n, 1);
        eta.set(0, 0, rat_int(1));
        let alg = AlgebraData::new(n, mu, eta);
        let err = mu3(&alg).unwrap_err();
        assert_eq!(err.check, "μ₃ association independence");
        assert!(err.witness.is_some());
    }

    #[test]
    fn group_algebra_of_z2_passes_compat() {
        let report = check_compat(&group_core(&GroupTable::cyclic(2)));
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn compat_rhs_matches_the_explicit_symmetry_composite() {
        // Oracle: materialize 1⊗c⊗1 and compose; the permutation route must
        // produce the identical matrix.
        for g in [GroupTable::cyclic(2), GroupTable::cyclic(3)] {
            let core = group_core(&g);
            let n = core.dim();
            let id = LinMap::identity(n);
            let mu = &core.algebra.mu;
            let delta = &core.coalgebra.delta;
            let explicit = mu
                .kron(mu)
                .compose(&id.kron(&crate::linalg::symmetry(n, n)).kron(&id))
                .compose(&delta.kron(delta));
            assert_eq!(compat_rhs(mu, delta, n), explicit);
        }
    }

    #[test]
    fn non_injective_grouplike_delta_fails_compat() {
        // Componentwise μ on Q² with δ(e₀) = δ(e₁) = e₀⊗e₀: the two sides
        // differ on e₀⊗e₁ (lhs 0, rhs e₀⊗e₀). Direct 4×4 computation.
        let n = 2;
        let mut mu = LinMap::zero(n, n * n);
        for a in 0..n {
            mu.set(a, a * n + a, rat_int(1));
        }
        let mut eta = LinMap::zero(n, 1);
        eta.set(0, 0, rat_int(1));
        eta.set(1, 0, rat_int(1));
        let mut delta = LinMap::zero(n * n, n);
        delta.set(0, 0, rat_int(1));
        delta.set(0, 1, rat_int(1));
        let mut eps = LinMap::zero(1, n);
        eps.set(0, 0, rat_int(1));
        let core = VNCoreData::new(
            AlgebraData::new(n, mu, eta),
            CoalgebraData::new(n, delta, eps),
            LinMap::identity(n),
        );
        let report = check_compat(&core);
        let check = report.get("compatibility").unwrap();
        assert!(!check.passed);
        match check.witness.as_ref().unwrap() {
            Witness::Columns { basis_index, .. } => assert_eq!(*basis_index, 1),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn z3_with_antipode_passes_vn_and_unital() {
        let core = group_core(&GroupTable::cyclic(3));
        assert!(check_vn(&core).passed());
        assert!(check_unital(&core).passed());
    }

    #[test]
    fn z3_with_identity_s_fails_vn_and_unital_but_passes_compat() {
        // On a group algebra both axioms force S(g) = g⁻¹: with S = 1 the
        // vn composite sends g ↦ g·g·g = g³ = e, so the map is not the
        // identity. (Direct grouplike computation; mul-table oracle below.)
        let base = group_core(&GroupTable::cyclic(3));
        let core = with_s(&base, LinMap::identity(3));

        assert!(check_compat(&core).passed());

        let vn = check_vn(&core);
        assert!(!vn.passed());

        let unital = check_unital(&core);
        let check = unital.get("unital axiom").unwrap();
        assert!(!check.passed);
        // Witness is the grouplike g (basis index 1): lhs g⊗e (flat 3),
        // rhs g⊗g² (flat 5) in the 9-dimensional codomain.
        match check.witness.as_ref().unwrap() {
            Witness::Columns { basis_index, lhs, rhs } => {
                assert_eq!(*basis_index, 1);
                assert_eq!(lhs[3], "1");
                assert_eq!(rhs[5], "1");
            }
            other => panic!("unexpected witness {other:?}"),
        }

        // Independent oracle: fold the table directly.
        let g = GroupTable::cyclic(3);
        for a in 0..3 {
            let folded = g.mul(g.mul(a, a), a);
            let expected_identity_map = folded == a;
            assert_eq!(expected_identity_map, a == 0);
        }
    }

    #[test]
    fn z2_with_identity_s_is_the_antipode_case() {
        // Every element of ℤ/2 is self-inverse, so S = 1 is the antipode.
        let base = group_core(&GroupTable::cyclic(2));
        let core = with_s(&base, LinMap::identity(2));
        assert!(check_all(&core).passed());
    }

    #[test]
    fn semilattice_algebra_separates_vn_from_unital() {
        // The 2-element meet-semilattice monoid {e, z} with grouplike δ and
        // S = 1 satisfies the VN axiom (z·z·z = z) but not the unital axiom
        // (S(z)·z = z ≠ e) — the axioms are inequivalent in Vect.
        let n = 2;
        let table = [[0usize, 1], [1, 1]];
        let mut mu = LinMap::zero(n, n * n);
        for a in 0..n {
            for b in 0..n {
                mu.set(table[a][b], a * n + b, rat_int(1));
            }
        }
        let mut eta = LinMap::zero(n, 1);
        eta.set(0, 0, rat_int(1));
        let mut delta = LinMap::zero(n * n, n);
        for a in 0..n {
            delta.set(a * n + a, a, rat_int(1));
        }
        let mut eps = LinMap::zero(1, n);
        for a in 0..n {
            eps.set(0, a, rat_int(1));
        }
        let core = VNCoreData::new(
            AlgebraData::new(n, mu, eta),
            CoalgebraData::new(n, delta, eps),
            LinMap::identity(n),
        );
        assert!(check_compat(&core).passed());
        assert!(check_vn(&core).passed());
        assert!(!check_unital(&core).passed());
    }

    #[test]
    fn check_all_on_s3_group_algebra() {
        let g = GroupTable::symmetric_3();
        // Table-fold oracle: a·a⁻¹·a = a for every element.
        for a in 0..g.order() {
            assert_eq!(g.mul(g.mul(a, g.inverse(a)), a), a);
        }
        let report = check_all(&group_core(&g));
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn group_table_constructors_and_errors() {
        let z3 = GroupTable::cyclic(3);
        assert_eq!(z3.identity_element(), 0);
        assert_eq!(z3.inverse(1), 2);

        let v4 = GroupTable::klein_four();
        for a in 0..4 {
            assert_eq!(v4.inverse(a), a);
        }

        // Left-zero semigroup: no identity.
        let err = GroupTable::new(vec![vec![0, 0], vec![1, 1]]).unwrap_err();
        assert_eq!(err, NotAGroupError::NoIdentity);

        // Identity present but an element has no inverse.
        let err = GroupTable::new(vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, NotAGroupError::NoInverse { element: 1 });

        let err = GroupTable::new(vec![vec![0, 7], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, NotAGroupError::EntryOutOfRange { .. }));
    }

    #[test]
    fn z3_antipode_is_the_transposition_matrix() {
        let h = group_algebra(&GroupTable::cyclic(3));
        let expected = LinMap::from_int_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(h.antipode, expected);
        let z2 = group_algebra(&GroupTable::cyclic(2));
        assert_eq!(z2.antipode, LinMap::identity(2));
    }

    #[test]
    fn hopf_containment_for_small_groups() {
        let groups = [
            GroupTable::cyclic(1),
            GroupTable::cyclic(2),
            GroupTable::cyclic(3),
            GroupTable::cyclic(4),
            GroupTable::klein_four(),
            GroupTable::symmetric_3(),
        ];
        for g in &groups {
            let h = group_algebra(g);
            assert!(h.check().passed());
            let core = hopf_to_vncore(&h).unwrap();
            assert!(check_compat(&core).passed());
            assert!(check_vn(&core).passed());
            assert!(check_unital(&core).passed());
        }
    }

    #[test]
    fn hopf_to_vncore_rejects_broken_antipode() {
        let mut h = group_algebra(&GroupTable::cyclic(3));
        h.antipode = LinMap::identity(3);
        let err = hopf_to_vncore(&h).unwrap_err();
        assert_eq!(err.check, "left antipode law");
    }

    #[test]
    fn unital_implies_vn_on_builtin_cores() {
        // μ applied to the unital equation yields the vn equation, so a
        // unital pass must come with a vn pass.
        let cores = [
            group_core(&GroupTable::cyclic(2)),
            group_core(&GroupTable::cyclic(3)),
            group_core(&GroupTable::klein_four()),
            group_core(&GroupTable::symmetric_3()),
            with_s(&group_core(&GroupTable::cyclic(3)), LinMap::identity(3)),
            with_s(&group_core(&GroupTable::cyclic(2)), LinMap::identity(2)),
        ];
        for core in &cores {
            if check_unital(core).passed() {
                assert!(check_vn(core).passed());
            }
        }
    }
}
