//! Quotients of coordinatized rational spaces by a span of relation vectors,
//! presented by a projection with a deterministic section. The computational
//! form of a coequalizer / coend: maps out of the quotient are produced by
//! [`QuotientPresentation::induce`], which checks well-definedness instead of
//! assuming it.

use super::{rref_rows, LinMap, Rational};
use num_traits::Zero;
use thiserror::Error;

/// A map defined on the ambient space fails to annihilate a relation, so it
/// does not factor through the quotient. In coend language: the defining
/// family is not dinatural.
#[derive(Debug, Clone, Error)]
#[error("map does not annihilate relation {relation}; image {image:?}")]
pub struct WellDefinednessError {
    /// Index into the presentation's relation list.
    pub relation: usize,
    /// The nonzero image of that relation vector.
    pub image: Vec<Rational>,
}

/// An ambient space, relation generators, a projection `q` onto the quotient
/// and a section `s` with `q∘s = id`.
///
/// The section is deterministic: the relation matrix is brought to reduced
/// row echelon form, the quotient basis is the set of non-pivot ambient
/// coordinates in ascending order, and `s` embeds them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub ambient_dim: usize,
    pub relations: Vec<Vec<Rational>>,
    /// Projection, `quotient_dim × ambient_dim`.
    pub q: LinMap,
    /// Section, `ambient_dim × quotient_dim`.
    pub s: LinMap,
}

/// Builds the quotient of `Q^ambient_dim` by the span of `relations`.
pub fn cokernel(ambient_dim: usize, relations: Vec<Vec<Rational>>) -> QuotientPresentation {
    for (idx, r) in relations.iter().enumerate() {
        assert_eq!(r.len(), ambient_dim, "relation {idx} has the wrong length");
    }
    let (reduced, pivots) = rref_rows(relations.clone());
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let quotient_dim = free.len();

    let mut s = LinMap::zero(ambient_dim, quotient_dim);
    for (k, &f) in free.iter().enumerate() {
        s.set(f, k, Rational::from_integer(1.into()));
    }

    // Each reduced row e_p + Σ c_j e_j (j free) says [e_p] = −Σ c_j [e_j].
    let mut q = LinMap::zero(quotient_dim, ambient_dim);
    for (k, &f) in free.iter().enumerate() {
        q.set(k, f, Rational::from_integer(1.into()));
    }
    for (row, &p) in reduced.iter().zip(&pivots) {
        for (k, &f) in free.iter().enumerate() {
            if !row[f].is_zero() {
                q.set(k, p, -row[f].clone());
            }
        }
    }

    QuotientPresentation {
        ambient_dim,
        relations,
        q,
        s,
    }
}

impl QuotientPresentation {
    pub fn quotient_dim(&self) -> usize {
        self.q.rows()
    }

    /// Factors `f` (defined on the ambient space) through the quotient:
    /// returns `f̄` with `f̄ ∘ q = f`, computed as `f ∘ s`.
    ///
    /// Fails with the first relation `f` does not annihilate. The defining
    /// equation is re-verified on every ambient basis vector.
    pub fn induce(&self, f: &LinMap) -> Result<LinMap, WellDefinednessError> {
        assert_eq!(
            f.cols(),
            self.ambient_dim,
            "induce: map domain must be the ambient space"
        );
        for (idx, r) in self.relations.iter().enumerate() {
            let image = f.apply(r);
            if image.iter().any(|x| !x.is_zero()) {
                return Err(WellDefinednessError { relation: idx, image });
            }
        }
        let induced = f.compose(&self.s);
        // With the relations annihilated, factoring is automatic; verify anyway.
        assert_eq!(
            induced.compose(&self.q),
            *f,
            "induced map does not satisfy f̄∘q = f; presentation invariants are broken"
        );
        Ok(induced)
    }

    /// The tensor-square-style product presentation: ambient spaces multiply,
    /// `q` and `s` are Kronecker products, and the relation span of the result
    /// is `R₁⊗basis ∪ basis⊗R₂`, which spans `ker(q₁⊗q₂)`.
    pub fn tensor(&self, other: &QuotientPresentation) -> QuotientPresentation {
        let ambient_dim = self.ambient_dim * other.ambient_dim;
        let mut relations = Vec::new();
        for r in &self.relations {
            for j in 0..other.ambient_dim {
                let mut v = vec![Rational::zero(); ambient_dim];
                for (i, x) in r.iter().enumerate() {
                    if !x.is_zero() {
                        v[i * other.ambient_dim + j] = x.clone();
                    }
                }
                relations.push(v);
            }
        }
        for i in 0..self.ambient_dim {
            for r in &other.relations {
                let mut v = vec![Rational::zero(); ambient_dim];
                for (j, x) in r.iter().enumerate() {
                    if !x.is_zero() {
                        v[i * other.ambient_dim + j] = x.clone();
                    }
                }
                relations.push(v);
            }
        }
        QuotientPresentation {
            ambient_dim,
            relations,
            q: self.q.kron(&other.q),
            s: self.s.kron(&other.s),
        }
    }

    /// Invariant check used by tests: `q∘s = id`, `q` annihilates every
    /// relation, and `rank(q) = quotient_dim`.
    pub fn verify(&self) -> bool {
        if self.q.compose(&self.s) != LinMap::identity(self.quotient_dim()) {
            return false;
        }
        if self.q.rank() != self.quotient_dim() {
            return false;
        }
        self.relations
            .iter()
            .all(|r| self.q.apply(r).iter().all(Zero::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat_int, LinMap};
    use proptest::prelude::*;

    fn v(entries: &[i64]) -> Vec<Rational> {
        entries.iter().map(|&n| rat_int(n)).collect()
    }

    #[test]
    fn no_relations_gives_identity_projection() {
        let q = cokernel(2, vec![]);
        assert_eq!(q.q, LinMap::identity(2));
        assert_eq!(q.s, LinMap::identity(2));
        assert_eq!(q.quotient_dim(), 2);
        assert!(q.verify());
    }

    #[test]
    fn single_relation_drops_one_dimension() {
        // Rank-nullity by hand: dim 2, one independent relation, quotient dim 1.
        let q = cokernel(2, vec![v(&[1, 1])]);
        assert_eq!(q.quotient_dim(), 1);
        assert!(q.verify());
        // Design decision: pivot column 0, free column 1, so s embeds e_1.
        assert_eq!(q.s, LinMap::from_int_rows(&[&[0], &[1]]));
        assert_eq!(q.q, LinMap::from_int_rows(&[&[-1, 1]]));
    }

    #[test]
    fn spanning_relations_give_zero_quotient() {
        let q = cokernel(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 1])]);
        assert_eq!(q.quotient_dim(), 0);
        assert!(q.verify());
    }

    #[test]
    fn induce_projection_is_identity() {
        let q = cokernel(3, vec![v(&[1, -1, 0])]);
        let induced = q.induce(&q.q.clone()).unwrap();
        assert_eq!(induced, LinMap::identity(q.quotient_dim()));
    }

    #[test]
    fn induce_solves_the_defining_equation() {
        // f = (1, −1) annihilates the relation (1,1); with the deterministic
        // section s = (0,1)ᵀ and q = (−1, 1), the induced map is f∘s = [−1],
        // and f̄∘q = (1,−1) = f. (Hand-solved 1×2 system.)
        let q = cokernel(2, vec![v(&[1, 1])]);
        let f = LinMap::from_int_rows(&[&[1, -1]]);
        let induced = q.induce(&f).unwrap();
        assert_eq!(induced, LinMap::from_int_rows(&[&[-1]]));
        assert_eq!(induced.compose(&q.q), f);
    }

    #[test]
    fn induce_rejects_non_annihilating_map() {
        let q = cokernel(2, vec![v(&[1, 1])]);
        let f = LinMap::from_int_rows(&[&[1, 0]]);
        let err = q.induce(&f).unwrap_err();
        assert_eq!(err.relation, 0);
        assert_eq!(err.image, v(&[1]));
    }

    #[test]
    fn tensor_presentation_verifies() {
        let a = cokernel(2, vec![v(&[1, 1])]);
        let b = cokernel(3, vec![v(&[1, 0, -1])]);
        let t = a.tensor(&b);
        assert_eq!(t.ambient_dim, 6);
        assert_eq!(t.quotient_dim(), 2);
        assert!(t.verify());
    }

    #[test]
    fn tensor_induction_of_compatible_bilinear_map() {
        // Q²/(e0+e1) ⊗ itself; the map (x0,x1)⊗(y0,y1) ↦ (x0−x1)(y0−y1)
        // annihilates both relation families and induces a 1×1 map on E⊗E.
        let a = cokernel(2, vec![v(&[1, 1])]);
        let t = a.tensor(&a);
        let f = LinMap::from_int_rows(&[&[1, -1, -1, 1]]);
        let induced = t.induce(&f).unwrap();
        assert_eq!(induced.rows(), 1);
        assert_eq!(induced.cols(), 1);
        assert_eq!(induced, LinMap::from_int_rows(&[&[1]]));
    }

    fn small_relations(dim: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
        proptest::collection::vec(
            proptest::collection::vec((-3i64..=3).prop_map(rat_int), dim),
            0..4,
        )
    }

    proptest! {
        #[test]
        fn cokernel_invariants_hold(rels in small_relations(4)) {
            let q = cokernel(4, rels);
            prop_assert!(q.verify());
            let rel_rank = LinMap::from_rows(q.relations.clone()).rank();
            prop_assert_eq!(q.quotient_dim(), 4 - rel_rank);
        }
    }
}
