//! Check results with reproducible failure witnesses.
//!
//! Every axiom checker in the crate produces a [`CheckReport`]: a list of
//! named checks, each tagged with the equation it verifies, a pass flag, an
//! optional witness, and the time the check took. A witness pins down one
//! basis vector (or one carrier element, in the Set world) on which the two
//! sides of the equation disagree, with both values recorded so the failure
//! can be reproduced independently.

use crate::linalg::{format_rational, LinMap};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Instant;

/// Where two sides of a check disagree, and what they evaluate to there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    /// Matrix-equality failure: the first differing column, with both columns
    /// as canonical rational strings.
    Columns {
        basis_index: usize,
        lhs: Vec<String>,
        rhs: Vec<String>,
    },
    /// Pointwise failure on a finite carrier: the element and both images.
    Element {
        element: usize,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Columns { basis_index, lhs, rhs } => write!(
                f,
                "basis vector {basis_index}: lhs = [{}], rhs = [{}]",
                lhs.join(", "),
                rhs.join(", ")
            ),
            Witness::Element { element, lhs, rhs } => {
                write!(f, "element {element}: lhs = {lhs:?}, rhs = {rhs:?}")
            }
        }
    }
}

/// One named check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The equation this check decides, in the notation used throughout
    /// the crate (μ, δ, ε, η, S, c, ⊗).
    pub equation: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// Wall-clock duration of the check in microseconds. Reports are
    /// deterministic modulo this field.
    pub micros: u64,
}

impl Check {
    /// Runs `body`, which returns a witness on failure, and records timing.
    pub fn run(
        name: impl Into<String>,
        equation: impl Into<String>,
        body: impl FnOnce() -> Option<Witness>,
    ) -> Check {
        let start = Instant::now();
        let witness = body();
        Check {
            name: name.into(),
            equation: equation.into(),
            passed: witness.is_none(),
            witness,
            micros: start.elapsed().as_micros() as u64,
        }
    }

    /// Matrix-equality check: builds both sides inside the timed body.
    pub fn equality(
        name: impl Into<String>,
        equation: impl Into<String>,
        body: impl FnOnce() -> (LinMap, LinMap),
    ) -> Check {
        Check::run(name, equation, || {
            let (lhs, rhs) = body();
            column_witness(&lhs, &rhs)
        })
    }
}

/// Witness for the first column where two maps differ, if any.
pub fn column_witness(lhs: &LinMap, rhs: &LinMap) -> Option<Witness> {
    lhs.first_column_difference(rhs).map(|j| Witness::Columns {
        basis_index: j,
        lhs: lhs.column(j).iter().map(format_rational).collect(),
        rhs: rhs.column(j).iter().map(format_rational).collect(),
    })
}

/// An ordered list of checks; passes iff every check passes.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Same checks with `prefix` prepended to every name.
    pub fn prefixed(mut self, prefix: &str) -> CheckReport {
        for c in &mut self.checks {
            c.name = format!("{prefix}{}", c.name);
        }
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{tag}] {:<44} {}", c.name, c.equation)?;
            if let Some(w) = &c.witness {
                writeln!(f, "       witness: {w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::LinMap;

    #[test]
    fn equality_check_records_first_differing_column() {
        let c = Check::equality("demo", "x = y", || {
            (LinMap::identity(2), LinMap::from_int_rows(&[&[1, 0], &[1, 1]]))
        });
        assert!(!c.passed);
        match c.witness.unwrap() {
            Witness::Columns { basis_index, lhs, rhs } => {
                assert_eq!(basis_index, 0);
                assert_eq!(lhs, vec!["1", "0"]);
                assert_eq!(rhs, vec!["1", "1"]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn report_passes_iff_all_checks_pass() {
        let mut r = CheckReport::new();
        r.push(Check::equality("ok", "1 = 1", || {
            (LinMap::identity(1), LinMap::identity(1))
        }));
        assert!(r.passed());
        r.push(Check::equality("bad", "1 = 0", || {
            (LinMap::identity(1), LinMap::zero(1, 1))
        }));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert!(r.get("bad").is_some());
    }
}
