//! Exact linear algebra over the rationals.
//!
//! Everything downstream computes with [`LinMap`]: a dense matrix of
//! arbitrary-precision rationals representing a linear map between
//! coordinatized spaces. Tensor products use one fixed flat-index
//! convention throughout the crate: `e_i ⊗ e_j ↦ i·dim(right) + j`
//! (row-major, left factor slow). Equality of maps is exact entrywise
//! equality of canonical-form rationals; there is no tolerance anywhere.

mod quotient;

pub use quotient::{cokernel, QuotientPresentation, WellDefinednessError};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Scalar type: arbitrary-precision rational in canonical form
/// (positive denominator, gcd(|num|, den) = 1 — maintained by `num-rational`).
pub type Rational = num_rational::BigRational;

/// Integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` in canonical form. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"p"` or `"p/q"` with `q > 0` into canonical form.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let malformed = || RationalParseError::Malformed(s.to_string());
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| malformed())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| malformed())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| malformed())?;
            if den.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            if den.is_negative() {
                return Err(RationalParseError::Malformed(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A linear map as a dense `rows × cols` rational matrix
/// (codomain dimension × domain dimension).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl LinMap {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows·cols");
        LinMap { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        LinMap { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        LinMap {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer-valued matrix, handy in tests and table-driven constructions.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| rat_int(n)).collect())
                .collect(),
        )
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinMap {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// The 1×1 matrix `[q]`.
    pub fn scalar(q: Rational) -> Self {
        LinMap { rows: 1, cols: 1, entries: vec![q] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn is_zero_map(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Composition `self ∘ rhs` (matrix product). Inner dimensions must agree.
    pub fn compose(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(
            self.cols, rhs.rows,
            "composition shape mismatch: {}×{} ∘ {}×{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = LinMap::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "addition shape mismatch");
        LinMap {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "subtraction shape mismatch");
        LinMap {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> LinMap {
        LinMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * q).collect(),
        }
    }

    /// Kronecker product realizing `⊗` on maps under the flat-index convention.
    pub fn kron(&self, rhs: &LinMap) -> LinMap {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = LinMap::zero(rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.entry(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = rhs.entry(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        let v = if a.is_one() { b.clone() } else { a * b };
                        out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, v);
                    }
                }
            }
        }
        out
    }

    /// Transpose, i.e. the dual map in the dual bases.
    /// Satisfies `dual(f ∘ g) = dual(g) ∘ dual(f)` and `dual(dual(f)) = f`.
    pub fn dual(&self) -> LinMap {
        LinMap::from_fn(self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    /// Applies the map to a coordinate vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        let a = self.entry(i, j);
                        if !a.is_zero() {
                            acc += a * x;
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation; all parts must share a row count.
    pub fn hstack(parts: &[LinMap]) -> LinMap {
        assert!(!parts.is_empty(), "hstack of nothing");
        let rows = parts[0].rows;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
        }
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = LinMap::zero(rows, cols);
        let mut base = 0;
        for p in parts {
            for i in 0..rows {
                for j in 0..p.cols {
                    if !p.entry(i, j).is_zero() {
                        out.set(i, base + j, p.entry(i, j).clone());
                    }
                }
            }
            base += p.cols;
        }
        out
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        rref_rows(rows).0.len()
    }

    /// Exact inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<LinMap> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        // Augment with the identity and reduce.
        let mut work: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = (0..n).map(|j| self.entry(i, j).clone()).collect();
                for j in 0..n {
                    row.push(if i == j { Rational::one() } else { Rational::zero() });
                }
                row
            })
            .collect();
        for (pivot_row, col) in (0..n).enumerate() {
            let p = (pivot_row..n).find(|&r| !work[r][col].is_zero())?;
            work.swap(pivot_row, p);
            let inv = work[pivot_row][col].recip();
            for x in work[pivot_row].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            for r in 0..n {
                if r != pivot_row && !work[r][col].is_zero() {
                    let factor = work[r][col].clone();
                    for j in 0..2 * n {
                        let t = &work[pivot_row][j] * &factor;
                        work[r][j] -= t;
                    }
                }
            }
        }
        Some(LinMap::from_fn(n, n, |i, j| work[i][n + j].clone()))
    }

    /// Composes with the permutation matrix `P` (`P·e_k = e_{perm[k]}`) on
    /// the left without materializing it: row `perm[k]` of the result is row
    /// `k` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> LinMap {
        assert_eq!(perm.len(), self.rows, "permutation length mismatch");
        let mut out = LinMap::zero(self.rows, self.cols);
        for k in 0..self.rows {
            for j in 0..self.cols {
                let v = self.entry(k, j);
                if !v.is_zero() {
                    out.set(perm[k], j, v.clone());
                }
            }
        }
        out
    }

    /// Index of the first column where `self` and `other` differ, if any.
    pub fn first_column_difference(&self, other: &LinMap) -> Option<usize> {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "comparison shape mismatch"
        );
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.entry(i, j) != other.entry(i, j)))
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_rational(self.entry(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

/// The symmetry `c: V⊗W → W⊗V` on flat indices: `e_i⊗e_j ↦ e_j⊗e_i`
/// for `i < m = dim V`, `j < n = dim W`. An `mn × mn` permutation matrix.
pub fn symmetry(m: usize, n: usize) -> LinMap {
    let mut out = LinMap::zero(m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            out.set(j * m + i, i * n + j, Rational::one());
        }
    }
    out
}

/// The pairing `V*⊗V → k`, `e_i*⊗e_j ↦ δ_ij`, as a `1 × n²` matrix.
pub fn evaluation(n: usize) -> LinMap {
    let mut out = LinMap::zero(1, n * n);
    for i in 0..n {
        out.set(0, i * n + i, Rational::one());
    }
    out
}

/// The copairing `k → V⊗V*`, `1 ↦ Σ_j e_j⊗e_j*`, as an `n² × 1` matrix.
/// (The coordinates are the same for the order-adjusted variant `k → V*⊗V`.)
pub fn coevaluation(n: usize) -> LinMap {
    let mut out = LinMap::zero(n * n, 1);
    for j in 0..n {
        out.set(j * n + j, 0, Rational::one());
    }
    out
}

/// Reduced row echelon form. Returns the nonzero rows (pivots normalized to 1,
/// pivot columns eliminated everywhere else) together with the pivot column of
/// each returned row, in ascending order. Deterministic in the input order.
pub(crate) fn rref_rows(mut rows: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(p) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let inv = rows[next][col].recip();
        for x in rows[next].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for r in 0..rows.len() {
            if r != next && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for j in 0..width {
                    let t = &rows[next][j] * &factor;
                    rows[r][j] -= t;
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    (rows, pivots)
}
