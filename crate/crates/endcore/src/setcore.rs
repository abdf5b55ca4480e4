//! VN-cores in Set, and the brute-force classification of unital ones.
//!
//! Pointwise, the axioms on a carrier `A` with multiplication table `·`,
//! diagonal comultiplication and a map `S` read: compatibility is automatic,
//! the VN axiom is `(a·S(a))·a = a`, and the unital axiom is `S(a)·a = e`.
//! Exhaustive search over all labeled monoid tables on `n ≤ 4` elements shows
//! that exactly the group tables admit a valid `S` — and on each of them the
//! valid `S` is unique and equals the inverse map.

use crate::report::{Check, CheckReport, Witness};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A finite magma with a designated unit candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetMagma {
    pub n: usize,
    /// Row-major: `table[a*n + b] = a·b`.
    pub table: Vec<usize>,
    pub unit: usize,
}

/// Why a magma is not a monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidViolation {
    Associativity { a: usize, b: usize, c: usize },
    LeftUnit { a: usize },
    RightUnit { a: usize },
}

impl SetMagma {
    pub fn new(n: usize, rows: Vec<Vec<usize>>, unit: usize) -> Self {
        assert_eq!(rows.len(), n, "row count");
        assert!(unit < n, "unit out of range");
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "column count");
            for v in row {
                assert!(v < n, "entry out of range");
                table.push(v);
            }
        }
        SetMagma { n, table, unit }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// First monoid-law violation, if any.
    pub fn monoid_violation(&self) -> Option<MonoidViolation> {
        for a in 0..self.n {
            if self.mul(self.unit, a) != a {
                return Some(MonoidViolation::LeftUnit { a });
            }
            if self.mul(a, self.unit) != a {
                return Some(MonoidViolation::RightUnit { a });
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                let ab = self.mul(a, b);
                for c in 0..self.n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some(MonoidViolation::Associativity { a, b, c });
                    }
                }
            }
        }
        None
    }

    pub fn is_monoid(&self) -> bool {
        self.monoid_violation().is_none()
    }
}

/// A candidate comultiplication `δ(a) = (left(a), right(a))` on a finite
/// carrier. The counit laws force both components to be the identity; the
/// type stores arbitrary candidates so that this can be checked, not assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoalgebraCandidate {
    pub n: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl SetCoalgebraCandidate {
    pub fn diagonal(n: usize) -> Self {
        SetCoalgebraCandidate {
            n,
            left: (0..n).collect(),
            right: (0..n).collect(),
        }
    }
}

/// The counit laws in Set: `(ε⊗1)δ = 1` forces `right = id` and `(1⊗ε)δ = 1`
/// forces `left = id`.
pub fn check_set_counit(c: &SetCoalgebraCandidate) -> bool {
    (0..c.n).all(|a| c.left[a] == a && c.right[a] == a)
}

/// A Set-based VN-core candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetVNCore {
    pub magma: SetMagma,
    pub coalgebra: SetCoalgebraCandidate,
    pub s: Vec<usize>,
}

/// Checks the compatibility, VN and unital axioms pointwise, evaluating δ as
/// the stored `(left, right)` pair (for the diagonal δ the compatibility
/// check is automatic, but it is still executed).
pub fn check_set_core(v: &SetVNCore) -> CheckReport {
    let n = v.magma.n;
    let m = &v.magma;
    let c = &v.coalgebra;
    let mut report = CheckReport::new();

    report.push(Check::run("counit forces diagonal", crate::vncore::EQ_COUNIT, || {
        (0..n).find_map(|a| {
            if c.left[a] != a || c.right[a] != a {
                Some(Witness::Element {
                    element: a,
                    lhs: vec![c.left[a], c.right[a]],
                    rhs: vec![a, a],
                })
            } else {
                None
            }
        })
    }));

    report.push(Check::run("compatibility (pointwise)", crate::vncore::EQ_COMPAT, || {
        for a in 0..n {
            for b in 0..n {
                let ab = m.mul(a, b);
                let lhs = [c.left[ab], c.right[ab]];
                let rhs = [m.mul(c.left[a], c.left[b]), m.mul(c.right[a], c.right[b])];
                if lhs != rhs {
                    return Some(Witness::Element {
                        element: a * n + b,
                        lhs: lhs.to_vec(),
                        rhs: rhs.to_vec(),
                    });
                }
            }
        }
        None
    }));

    // δ₃(a) = (left(left a), right(left a), right a), left-associated.
    report.push(Check::run("vn axiom (pointwise)", crate::vncore::EQ_VN, || {
        (0..n).find_map(|a| {
            let (x, y, z) = (c.left[c.left[a]], c.right[c.left[a]], c.right[a]);
            let got = m.mul(m.mul(x, v.s[y]), z);
            if got != a {
                Some(Witness::Element { element: a, lhs: vec![got], rhs: vec![a] })
            } else {
                None
            }
        })
    }));

    report.push(Check::run("unital axiom (pointwise)", crate::vncore::EQ_UNITAL, || {
        (0..n).find_map(|a| {
            let (x, y, z) = (c.left[c.left[a]], c.right[c.left[a]], c.right[a]);
            let got = (x, m.mul(v.s[y], z));
            let want = (a, m.unit);
            if got != want {
                Some(Witness::Element {
                    element: a,
                    lhs: vec![got.0, got.1],
                    rhs: vec![want.0, want.1],
                })
            } else {
                None
            }
        })
    }));

    report
}

/// Requested carrier size is outside the supported enumeration range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("carrier size {requested} outside supported range 1..={max}")]
pub struct SizeError {
    pub requested: usize,
    pub max: usize,
}

pub const MAX_ENUMERATION_SIZE: usize = 4;

/// A table that admits unital VN-core structure, with every valid `S` found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurvivingTable {
    pub magma: SetMagma,
    pub valid_s: Vec<Vec<usize>>,
}

/// An isomorphism class of surviving tables under relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    /// Lexicographically least table in the orbit.
    pub representative: Vec<usize>,
    pub size: usize,
}

/// Outcome of the exhaustive scan on `n` labeled elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCensus {
    pub n: usize,
    pub survivors: Vec<SurvivingTable>,
    /// Group tables from the independent oracle, sorted.
    pub group_tables: Vec<Vec<usize>>,
    pub matches_oracle: bool,
    /// On every survivor: exactly one valid S, equal to the inverse map.
    pub s_unique_and_inverse: bool,
    pub orbits: Vec<Orbit>,
}

impl SetCensus {
    /// Check-report view for the cli layer.
    pub fn to_report(&self) -> CheckReport {
        let mut report = CheckReport::new();
        report.push(Check {
            name: format!("census n={} matches group oracle", self.n),
            equation: "unital VN-cores in Set = groups".into(),
            passed: self.matches_oracle,
            witness: None,
            micros: 0,
        });
        report.push(Check {
            name: format!("census n={}: S unique and equals inverse", self.n),
            equation: "S(a)·a = e ⟹ S(a) = a⁻¹".into(),
            passed: self.s_unique_and_inverse,
            witness: None,
            micros: 0,
        });
        report
    }
}

/// Enumerates all monoid tables on a labeled `n`-set (every unit position),
/// keeps those admitting some `S` that satisfies the unital VN-core axioms,
/// and compares the survivors with the group tables produced by an
/// independent Latin-square-plus-associativity oracle.
pub fn enumerate_unital_cores(n: usize) -> Result<SetCensus, SizeError> {
    if n == 0 || n > MAX_ENUMERATION_SIZE {
        return Err(SizeError { requested: n, max: MAX_ENUMERATION_SIZE });
    }

    let mut survivors: Vec<SurvivingTable> = Vec::new();
    for unit in 0..n {
        // Free cells are the (a, b) with a ≠ unit and b ≠ unit; the unit row
        // and column are forced. Odometer over n^((n-1)²) fills.
        let free: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != unit && b != unit)
            .collect();
        let mut digits = vec![0usize; free.len()];
        loop {
            let mut table = vec![0usize; n * n];
            for a in 0..n {
                table[unit * n + a] = a;
                table[a * n + unit] = a;
            }
            for (&(a, b), &d) in free.iter().zip(&digits) {
                table[a * n + b] = d;
            }
            if associative(n, &table) {
                let magma = SetMagma { n, table, unit };
                let valid_s = valid_antipodes(&magma);
                if !valid_s.is_empty() {
                    survivors.push(SurvivingTable { magma, valid_s });
                }
            }
            // Advance the odometer.
            let mut i = 0;
            loop {
                if i == digits.len() {
                    break;
                }
                digits[i] += 1;
                if digits[i] < n {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
    }
    survivors.sort_by(|a, b| a.magma.table.cmp(&b.magma.table));

    let group_tables = group_table_oracle(n);
    let survivor_tables: Vec<Vec<usize>> =
        survivors.iter().map(|s| s.magma.table.clone()).collect();
    let matches_oracle = survivor_tables == group_tables;

    let s_unique_and_inverse = survivors.iter().all(|s| {
        s.valid_s.len() == 1 && {
            let inv: Vec<usize> = (0..n)
                .map(|a| {
                    (0..n)
                        .find(|&b| s.magma.mul(b, a) == s.magma.unit)
                        .expect("survivor admits left inverses")
                })
                .collect();
            s.valid_s[0] == inv
        }
    });

    let orbits = orbit_classes(n, &survivor_tables);

    Ok(SetCensus {
        n,
        survivors,
        group_tables,
        matches_oracle,
        s_unique_and_inverse,
        orbits,
    })
}

fn associative(n: usize, table: &[usize]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b];
            for c in 0..n {
                if table[ab * n + c] != table[a * n + table[b * n + c]] {
                    return false;
                }
            }
        }
    }
    true
}

/// All maps `S` satisfying the three pointwise axioms with diagonal δ.
fn valid_antipodes(m: &SetMagma) -> Vec<Vec<usize>> {
    let n = m.n;
    let mut found = Vec::new();
    let mut s = vec![0usize; n];
    loop {
        let ok = (0..n).all(|a| {
            m.mul(m.mul(a, s[a]), a) == a && m.mul(s[a], a) == m.unit
        });
        if ok {
            found.push(s.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return found;
            }
            s[i] += 1;
            if s[i] < n {
                break;
            }
            s[i] = 0;
            i += 1;
        }
    }
}

/// Independent group-table oracle: tables on `{0,…,n−1}` where every row and
/// every column is a permutation (a Latin square) and the operation is
/// associative. Built by row-wise search with column pruning; never consults
/// units or antipodes.
pub fn group_table_oracle(n: usize) -> Vec<Vec<usize>> {
    let perms = permutations(n);
    let mut out = Vec::new();
    let mut chosen: Vec<&[usize]> = Vec::new();
    fn extend<'a>(
        n: usize,
        perms: &'a [Vec<usize>],
        chosen: &mut Vec<&'a [usize]>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == n {
            let table: Vec<usize> = chosen.iter().flat_map(|r| r.iter().copied()).collect();
            if associative(n, &table) {
                out.push(table);
            }
            return;
        }
        'rows: for p in perms {
            for col in 0..n {
                for prev in chosen.iter() {
                    if prev[col] == p[col] {
                        continue 'rows;
                    }
                }
            }
            chosen.push(p);
            extend(n, perms, chosen, out);
            chosen.pop();
        }
    }
    extend(n, &perms, &mut chosen, &mut out);
    out.sort();
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n];
    fn go(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                go(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut out);
    out
}

/// Partitions tables into orbits under simultaneous relabeling
/// `table[a][b] ↦ σ(table[σ⁻¹(a)][σ⁻¹(b)])`.
fn orbit_classes(n: usize, tables: &[Vec<usize>]) -> Vec<Orbit> {
    let perms = permutations(n);
    let mut remaining: Vec<Vec<usize>> = tables.to_vec();
    let mut orbits = Vec::new();
    while let Some(seed) = remaining.first().cloned() {
        let mut orbit: Vec<Vec<usize>> = Vec::new();
        for sigma in &perms {
            let mut relabeled = vec![0usize; n * n];
            for a in 0..n {
                for b in 0..n {
                    relabeled[sigma[a] * n + sigma[b]] = sigma[seed[a * n + b]];
                }
            }
            if !orbit.contains(&relabeled) {
                orbit.push(relabeled);
            }
        }
        orbit.sort();
        let size = remaining.iter().filter(|t| orbit.contains(t)).count();
        orbits.push(Orbit { representative: orbit[0].clone(), size });
        remaining.retain(|t| !orbit.contains(t));
    }
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    orbits
}
