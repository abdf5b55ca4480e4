//! The main construction: from a presented monoidal category with abstract
//! duality and a split functor `U` into rational vector spaces, compute the
//! endomorphism object `End∨(U) = ∫ U(B)*⊗U(B)`, equip it with
//! `μ, η, δ, ε, S`, check the duality diagram axioms, and verify that the
//! result is a unital VN-core.
//!
//! A presentation lists objects with their `U`-dimensions and generating
//! morphisms with their `U`-matrices. Monoidal data (unit, tensor and dual
//! tables, the splitting `(r, r₀, i, i₀)`, the duality iso `u` and the pairing
//! images `U(e)`) is optional: a presentation without it still supports the
//! coend computation, while the structure maps and diagram checks require it.

mod coend;

pub use coend::{
    build_antipode, build_structure, check_outer_diagram, compute_coend, verify_conclusion,
    Coend, CoendAlgebra, CoendStructure, RelationSource,
};

use crate::linalg::{evaluation, LinMap};
use crate::report::{column_witness, Check, CheckReport, Witness};
use thiserror::Error;

pub const EQ_E_R: &str = "Ue∘r = r₀∘e∘(u⊗1)";
pub const EQ_E_I: &str = "i₀∘Ue = e∘(u⊗1)∘i";
pub const EQ_TRACE: &str = "e∘c∘n = (dim)·1";
pub const EQ_OUTER: &str = "copr∘(i*⊗r)∘((u⊗1)*⊗(u⁻¹⊗1))∘(e*⊗1⊗1)∘(1⊗c)∘(1⊗dim⁻¹·n) = copr∘(i₀*⊗r₀)";
pub const EQ_SPLIT: &str = "r∘i = 1";
pub const EQ_SPLIT0: &str = "i₀∘r₀ = 1";

/// An object of the generating category with its image dimension under `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresObject {
    pub name: String,
    pub dim: usize,
}

/// A generating morphism with its `U`-matrix (`dim(target) × dim(source)`).
#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub map: LinMap,
}

/// A formal equality between composites of generators. Paths list generator
/// indices in application order (the first entry acts first); an empty side
/// denotes the identity on the other side's source object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRelation {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

/// A reference to a morphism: either a generator or an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorRef {
    Generator(usize),
    Identity(usize),
}

/// Declares that `result` is the tensor product `left ⊗ right` of two
/// morphisms, making the naturality squares of `r` and `i` computable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismTensorWitness {
    pub left: MorRef,
    pub right: MorRef,
    pub result: usize,
}

/// Strict monoidal structure on the object set: unit, total tensor table and
/// total dual table (all as object indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalTables {
    pub unit: usize,
    /// `tensor[a*n + b]` = index of `a⊗b`.
    pub tensor: Vec<usize>,
    /// `dual[a]` = index of `a*`.
    pub dual: Vec<usize>,
    pub morphism_tensor: Vec<MorphismTensorWitness>,
}

impl MonoidalTables {
    pub fn tensor_of(&self, a: usize, b: usize, n_objects: usize) -> usize {
        self.tensor[a * n_objects + b]
    }
}

/// Objects, generators and relations, with optional monoidal tables.
#[derive(Debug, Clone, PartialEq)]
pub struct MonoidalPresentation {
    pub objects: Vec<PresObject>,
    pub generators: Vec<Generator>,
    pub relations: Vec<PathRelation>,
    pub monoidal: Option<MonoidalTables>,
}

impl MonoidalPresentation {
    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn dim(&self, obj: usize) -> usize {
        self.objects[obj].dim
    }

    pub fn object_name(&self, obj: usize) -> &str {
        &self.objects[obj].name
    }

    fn tables(&self) -> &MonoidalTables {
        self.monoidal
            .as_ref()
            .expect("operation requires monoidal tables")
    }

    pub fn dual_of(&self, a: usize) -> usize {
        self.tables().dual[a]
    }

    pub fn unit_object(&self) -> usize {
        self.tables().unit
    }

    pub fn tensor_of(&self, a: usize, b: usize) -> usize {
        self.tables().tensor_of(a, b, self.n_objects())
    }

    /// `U` on a composable path of generators (first entry applied first);
    /// `None` for an empty path (identity) — the caller supplies the object.
    fn path_matrix(&self, path: &[usize]) -> Option<LinMap> {
        let mut acc: Option<LinMap> = None;
        for &g in path {
            let m = &self.generators[g].map;
            acc = Some(match acc {
                None => m.clone(),
                Some(prev) => m.compose(&prev),
            });
        }
        acc
    }
}

/// The split-functor data of `U` on a monoidal presentation.
///
/// Shapes, with `dᴬ = dim U(A)`:
/// `r[a,b]: dᴬ⊗ᴮ × dᴬdᴮ`, `i[a,b]: dᴬdᴮ × dᴬ⊗ᴮ`, `r₀: dᴵ × 1`, `i₀: 1 × dᴵ`,
/// `u[a]: dᴬ × dᴬ*` (invertible), `ue[a]: dᴵ × dᴬ*⊗ᴬ`.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctorStructure {
    /// Indexed `a*n + b` like the tensor table.
    pub r: Vec<LinMap>,
    pub r0: LinMap,
    pub i: Vec<LinMap>,
    pub i0: LinMap,
    pub u: Vec<LinMap>,
    pub ue: Vec<LinMap>,
}

impl FunctorStructure {
    pub fn r_at(&self, p: &MonoidalPresentation, a: usize, b: usize) -> &LinMap {
        &self.r[a * p.n_objects() + b]
    }

    pub fn i_at(&self, p: &MonoidalPresentation, a: usize, b: usize) -> &LinMap {
        &self.i[a * p.n_objects() + b]
    }
}

/// A structural defect that prevents the checks from even being evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid presentation: {what} at {location}")]
pub struct ValidationError {
    pub what: String,
    pub location: String,
}

/// Construction failures in the coend pipeline.
#[derive(Debug, Clone, Error)]
pub enum TannakaError {
    #[error("{map} is not well defined on the coend: relation {relation} from generator {generator} is not annihilated")]
    WellDefinedness {
        map: String,
        generator: String,
        relation: usize,
    },
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// Shape-level validation of a bare presentation (no monoidal data needed):
/// positive dimensions, generator matrix shapes, and well-formed relations.
pub fn validate_presentation(p: &MonoidalPresentation) -> Result<(), ValidationError> {
    for (idx, o) in p.objects.iter().enumerate() {
        if o.dim == 0 {
            return Err(ValidationError {
                what: "object has dimension 0".into(),
                location: format!("object {idx} ({})", o.name),
            });
        }
    }
    for (idx, g) in p.generators.iter().enumerate() {
        let loc = format!("generator {idx} ({})", g.name);
        if g.source >= p.n_objects() || g.target >= p.n_objects() {
            return Err(ValidationError {
                what: "generator endpoint out of range".into(),
                location: loc,
            });
        }
        if (g.map.rows(), g.map.cols()) != (p.dim(g.target), p.dim(g.source)) {
            return Err(ValidationError {
                what: format!(
                    "matrix is {}×{}, expected {}×{}",
                    g.map.rows(),
                    g.map.cols(),
                    p.dim(g.target),
                    p.dim(g.source)
                ),
                location: loc,
            });
        }
    }
    for (idx, rel) in p.relations.iter().enumerate() {
        let loc = format!("relation {idx}");
        let endpoints = |path: &[usize]| -> Result<Option<(usize, usize)>, ValidationError> {
            let mut current: Option<(usize, usize)> = None;
            for &g in path {
                let gen = p.generators.get(g).ok_or_else(|| ValidationError {
                    what: format!("relation references missing generator {g}"),
                    location: loc.clone(),
                })?;
                current = Some(match current {
                    None => (gen.source, gen.target),
                    Some((src, tgt)) => {
                        if gen.source != tgt {
                            return Err(ValidationError {
                                what: "relation path is not composable".into(),
                                location: loc.clone(),
                            });
                        }
                        (src, gen.target)
                    }
                });
            }
            Ok(current)
        };
        let lhs = endpoints(&rel.lhs)?;
        let rhs = endpoints(&rel.rhs)?;
        match (lhs, rhs) {
            (None, None) => {
                return Err(ValidationError {
                    what: "relation with two empty sides".into(),
                    location: loc,
                })
            }
            (Some((ls, lt)), Some((rs, rt))) if (ls, lt) != (rs, rt) => {
                return Err(ValidationError {
                    what: "relation sides have different endpoints".into(),
                    location: loc,
                })
            }
            (Some((s, t)), None) | (None, Some((s, t))) if s != t => {
                return Err(ValidationError {
                    what: "identity side of relation needs an endomorphism path".into(),
                    location: loc,
                })
            }
            _ => {}
        }
    }
    if let Some(m) = &p.monoidal {
        let n = p.n_objects();
        if m.unit >= n {
            return Err(ValidationError {
                what: "unit object out of range".into(),
                location: "monoidal tables".into(),
            });
        }
        if m.tensor.len() != n * n || m.tensor.iter().any(|&x| x >= n) {
            return Err(ValidationError {
                what: "tensor table must be a total n×n table of object indices".into(),
                location: "monoidal tables".into(),
            });
        }
        if m.dual.len() != n || m.dual.iter().any(|&x| x >= n) {
            return Err(ValidationError {
                what: "dual table must be a total list of object indices".into(),
                location: "monoidal tables".into(),
            });
        }
        for w in &m.morphism_tensor {
            let check = |mr: MorRef| match mr {
                MorRef::Generator(g) => g < p.generators.len(),
                MorRef::Identity(o) => o < n,
            };
            if !check(w.left) || !check(w.right) || w.result >= p.generators.len() {
                return Err(ValidationError {
                    what: "morphism tensor witness references missing data".into(),
                    location: "monoidal tables".into(),
                });
            }
        }
    }
    Ok(())
}

/// Shape validation of the functor structure against the presentation
/// (which must carry monoidal tables).
pub fn validate_functor_shapes(
    p: &MonoidalPresentation,
    f: &FunctorStructure,
) -> Result<(), ValidationError> {
    let n = p.n_objects();
    let m = p.monoidal.as_ref().ok_or_else(|| ValidationError {
        what: "functor structure supplied without monoidal tables".into(),
        location: "presentation".into(),
    })?;
    let unit_dim = p.dim(m.unit);
    if f.r.len() != n * n || f.i.len() != n * n {
        return Err(ValidationError {
            what: "r and i must have one entry per object pair".into(),
            location: "functor structure".into(),
        });
    }
    if f.u.len() != n || f.ue.len() != n {
        return Err(ValidationError {
            what: "u and ue must have one entry per object".into(),
            location: "functor structure".into(),
        });
    }
    for a in 0..n {
        for b in 0..n {
            let ab = m.tensor_of(a, b, n);
            let (dr, dc) = (p.dim(ab), p.dim(a) * p.dim(b));
            let r = &f.r[a * n + b];
            if (r.rows(), r.cols()) != (dr, dc) {
                return Err(ValidationError {
                    what: format!("r is {}×{}, expected {dr}×{dc}", r.rows(), r.cols()),
                    location: format!("r[{}, {}]", p.object_name(a), p.object_name(b)),
                });
            }
            let i = &f.i[a * n + b];
            if (i.rows(), i.cols()) != (dc, dr) {
                return Err(ValidationError {
                    what: format!("i is {}×{}, expected {dc}×{dr}", i.rows(), i.cols()),
                    location: format!("i[{}, {}]", p.object_name(a), p.object_name(b)),
                });
            }
        }
    }
    if (f.r0.rows(), f.r0.cols()) != (unit_dim, 1) {
        return Err(ValidationError {
            what: "r₀ must be dim U(I) × 1".into(),
            location: "r₀".into(),
        });
    }
    if (f.i0.rows(), f.i0.cols()) != (1, unit_dim) {
        return Err(ValidationError {
            what: "i₀ must be 1 × dim U(I)".into(),
            location: "i₀".into(),
        });
    }
    for a in 0..n {
        let astar = m.dual[a];
        let u = &f.u[a];
        if (u.rows(), u.cols()) != (p.dim(a), p.dim(astar)) {
            return Err(ValidationError {
                what: format!(
                    "u is {}×{}, expected {}×{}",
                    u.rows(),
                    u.cols(),
                    p.dim(a),
                    p.dim(astar)
                ),
                location: format!("u[{}]", p.object_name(a)),
            });
        }
        let aa = m.tensor_of(astar, a, n);
        let ue = &f.ue[a];
        if (ue.rows(), ue.cols()) != (unit_dim, p.dim(aa)) {
            return Err(ValidationError {
                what: format!(
                    "ue is {}×{}, expected {}×{}",
                    ue.rows(),
                    ue.cols(),
                    unit_dim,
                    p.dim(aa)
                ),
                location: format!("ue[{}]", p.object_name(a)),
            });
        }
    }
    Ok(())
}

fn mor_matrix(p: &MonoidalPresentation, mr: MorRef) -> (usize, usize, LinMap) {
    match mr {
        MorRef::Generator(g) => {
            let gen = &p.generators[g];
            (gen.source, gen.target, gen.map.clone())
        }
        MorRef::Identity(o) => (o, o, LinMap::identity(p.dim(o))),
    }
}

/// Full validation: structural shape checks, positive dimensions, the
/// splitting laws `r∘i = 1` and `i₀∘r₀ = 1`, invertibility of `u`,
/// naturality of `r`/`i` on declared morphism tensors, tensor-table unit
/// laws, and the functor respecting the declared relations.
///
/// Returns `Err` only for structural defects that make the checks impossible
/// to evaluate; law failures are reported as failing checks.
pub fn validate(
    p: &MonoidalPresentation,
    f: &FunctorStructure,
) -> Result<CheckReport, ValidationError> {
    validate_presentation(p)?;
    validate_functor_shapes(p, f)?;
    let n = p.n_objects();
    let m = p.tables();
    let mut report = CheckReport::new();

    report.push(Check::run("object dimensions positive", "dim U(A) ≠ 0", || {
        None // enforced structurally by validate_presentation
    }));

    report.push(Check::run("tensor unit laws", "I⊗A = A = A⊗I", || {
        (0..n).find_map(|a| {
            let l = m.tensor_of(m.unit, a, n);
            let r = m.tensor_of(a, m.unit, n);
            if l != a || r != a {
                Some(Witness::Element { element: a, lhs: vec![l, r], rhs: vec![a, a] })
            } else {
                None
            }
        })
    }));

    for a in 0..n {
        for b in 0..n {
            let ab = p.tensor_of(a, b);
            report.push(Check::equality(
                format!("splitting at ({}, {})", p.object_name(a), p.object_name(b)),
                EQ_SPLIT,
                || {
                    (
                        f.r_at(p, a, b).compose(f.i_at(p, a, b)),
                        LinMap::identity(p.dim(ab)),
                    )
                },
            ));
        }
    }
    report.push(Check::equality("unit splitting", EQ_SPLIT0, || {
        (f.i0.compose(&f.r0), LinMap::identity(1))
    }));

    for a in 0..n {
        report.push(Check::run(
            format!("duality iso invertible at {}", p.object_name(a)),
            "u: U(A*) ≅ U(A)*",
            || match f.u[a].inverse() {
                Some(_) => None,
                None => column_witness(&f.u[a], &LinMap::zero(f.u[a].rows(), f.u[a].cols())),
            },
        ));
    }

    // Naturality of r and i on every declared morphism tensor
    // U(f⊗g) = result: r∘(U(f)⊗U(g)) = U(f⊗g)∘r and i∘U(f⊗g) = (U(f)⊗U(g))∘i.
    let witnesses = &m.morphism_tensor;
    if witnesses.is_empty() {
        report.push(Check::run(
            "r/i naturality on generators (no declared morphism tensors)",
            "r∘(Uf⊗Ug) = U(f⊗g)∘r",
            || None,
        ));
    }
    for (k, w) in witnesses.iter().enumerate() {
        let (ls, lt, lm) = mor_matrix(p, w.left);
        let (rs, rt, rm) = mor_matrix(p, w.right);
        let result = &p.generators[w.result];
        let src = p.tensor_of(ls, rs);
        let tgt = p.tensor_of(lt, rt);
        if (result.source, result.target) != (src, tgt) {
            return Err(ValidationError {
                what: "declared morphism tensor has mismatched endpoints".into(),
                location: format!("morphism tensor witness {k}"),
            });
        }
        let block = lm.kron(&rm);
        report.push(Check::equality(
            format!("r naturality at {}", result.name),
            "r∘(Uf⊗Ug) = U(f⊗g)∘r",
            || {
                (
                    result.map.compose(f.r_at(p, ls, rs)),
                    f.r_at(p, lt, rt).compose(&block),
                )
            },
        ));
        report.push(Check::equality(
            format!("i naturality at {}", result.name),
            "i∘U(f⊗g) = (Uf⊗Ug)∘i",
            || {
                (
                    f.i_at(p, lt, rt).compose(&result.map),
                    block.compose(f.i_at(p, ls, rs)),
                )
            },
        ));
    }

    report.merge(check_relations(p));
    Ok(report)
}

/// The functor respects each declared path relation: `U(lhs) = U(rhs)`.
pub fn check_relations(p: &MonoidalPresentation) -> CheckReport {
    let mut report = CheckReport::new();
    for (idx, rel) in p.relations.iter().enumerate() {
        report.push(Check::equality(
            format!("relation {idx} respected"),
            "U(lhs path) = U(rhs path)",
            || {
                let side = |path: &[usize], other: &[usize]| {
                    p.path_matrix(path).unwrap_or_else(|| {
                        // Empty side: identity on the other side's source.
                        let src = p.generators[other[0]].source;
                        LinMap::identity(p.dim(src))
                    })
                };
                (side(&rel.lhs, &rel.rhs), side(&rel.rhs, &rel.lhs))
            },
        ));
    }
    report
}

/// The `(e, r, r₀)` axiom, per object: `Ue∘r_{A*,A} = r₀∘e∘(u⊗1)` as maps
/// `U(A*)⊗U(A) → U(I)`.
pub fn check_e_r_axiom(p: &MonoidalPresentation, f: &FunctorStructure) -> CheckReport {
    let mut report = CheckReport::new();
    for a in 0..p.n_objects() {
        let astar = p.dual_of(a);
        let d = p.dim(a);
        report.push(Check::equality(
            format!("(e,r,r₀) at {}", p.object_name(a)),
            EQ_E_R,
            || {
                let lhs = f.ue[a].compose(f.r_at(p, astar, a));
                let rhs = f
                    .r0
                    .compose(&evaluation(d))
                    .compose(&f.u[a].kron(&LinMap::identity(d)));
                (lhs, rhs)
            },
        ));
    }
    report
}

/// The `(e, i, i₀)` axiom, per object: `i₀∘Ue = e∘(u⊗1)∘i_{A*,A}` as maps
/// `U(A*⊗A) → k`.
pub fn check_e_i_axiom(p: &MonoidalPresentation, f: &FunctorStructure) -> CheckReport {
    let mut report = CheckReport::new();
    for a in 0..p.n_objects() {
        let astar = p.dual_of(a);
        let d = p.dim(a);
        report.push(Check::equality(
            format!("(e,i,i₀) at {}", p.object_name(a)),
            EQ_E_I,
            || {
                let lhs = f.i0.compose(&f.ue[a]);
                let rhs = evaluation(d)
                    .compose(&f.u[a].kron(&LinMap::identity(d)))
                    .compose(f.i_at(p, astar, a));
                (lhs, rhs)
            },
        ));
    }
    report
}

/// The trace identity `e∘c∘n = dim·1` for each requested dimension.
pub fn check_trace(dims: &[usize]) -> CheckReport {
    use crate::linalg::{coevaluation, rat_int, symmetry};
    let mut report = CheckReport::new();
    for &d in dims {
        report.push(Check::equality(format!("trace at dim {d}"), EQ_TRACE, || {
            (
                evaluation(d).compose(&symmetry(d, d)).compose(&coevaluation(d)),
                LinMap::scalar(rat_int(d as i64)),
            )
        }));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::linalg::rat_int;

    #[test]
    fn trivial_presentation_validates() {
        let ex = builtins::trivial();
        let report = validate(&ex.presentation, ex.functor.as_ref().unwrap()).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn z2_characters_validate_and_pass_both_axioms() {
        let ex = builtins::z2_characters();
        let f = ex.functor.as_ref().unwrap();
        assert!(validate(&ex.presentation, f).unwrap().passed());
        assert!(check_e_r_axiom(&ex.presentation, f).passed());
        assert!(check_e_i_axiom(&ex.presentation, f).passed());
    }

    #[test]
    fn klein_four_characters_pass_both_axioms() {
        let ex = builtins::klein_four_characters();
        let f = ex.functor.as_ref().unwrap();
        assert!(validate(&ex.presentation, f).unwrap().passed());
        assert!(check_e_r_axiom(&ex.presentation, f).passed());
        assert!(check_e_i_axiom(&ex.presentation, f).passed());
    }

    #[test]
    fn dim_zero_object_is_a_validation_error() {
        let mut ex = builtins::z2_characters();
        ex.presentation.objects[1].dim = 0;
        let err = validate_presentation(&ex.presentation).unwrap_err();
        assert!(err.what.contains("dimension 0"));
    }

    #[test]
    fn sign_flipped_ue_fails_both_e_axioms_at_the_object() {
        let ex = builtins::z2_characters();
        let mut f = ex.functor.clone().unwrap();
        f.ue[1] = f.ue[1].scale(&rat_int(-1));
        // Validation is untouched by the flip.
        assert!(validate(&ex.presentation, &f).unwrap().passed());
        let er = check_e_r_axiom(&ex.presentation, &f);
        assert!(er.get("(e,r,r₀) at I").unwrap().passed);
        assert!(!er.get("(e,r,r₀) at s").unwrap().passed);
        let ei = check_e_i_axiom(&ex.presentation, &f);
        assert!(ei.get("(e,i,i₀) at I").unwrap().passed);
        assert!(!ei.get("(e,i,i₀) at s").unwrap().passed);
    }

    #[test]
    fn trace_sweep_passes() {
        assert!(check_trace(&[1, 2, 3, 4, 5]).passed());
    }

    #[test]
    fn declared_morphism_tensors_drive_the_naturality_checks() {
        // One object I of dimension 1 with an endomorphism generator f = [2],
        // declared to satisfy f⊗1 = f. The naturality squares of r and i then
        // become checkable 1×1 equalities.
        let mut ex = builtins::trivial();
        ex.presentation.generators.push(Generator {
            name: "f".into(),
            source: 0,
            target: 0,
            map: LinMap::scalar(rat_int(2)),
        });
        let tables = ex.presentation.monoidal.as_mut().unwrap();
        tables.morphism_tensor.push(MorphismTensorWitness {
            left: MorRef::Generator(0),
            right: MorRef::Identity(0),
            result: 0,
        });
        let f = ex.functor.clone().unwrap();
        let report = validate(&ex.presentation, &f).unwrap();
        assert!(report.get("r naturality at f").unwrap().passed);
        assert!(report.get("i naturality at f").unwrap().passed);

        // Declare a wrong tensor image and watch both squares fail.
        ex.presentation.generators.push(Generator {
            name: "g".into(),
            source: 0,
            target: 0,
            map: LinMap::scalar(rat_int(3)),
        });
        let tables = ex.presentation.monoidal.as_mut().unwrap();
        tables.morphism_tensor[0].result = 1;
        let report = validate(&ex.presentation, &f).unwrap();
        assert!(!report.get("r naturality at g").unwrap().passed);
        assert!(!report.get("i naturality at g").unwrap().passed);
    }

    #[test]
    fn relation_validation_catches_malformed_paths() {
        let mut ex = builtins::z2_representations();
        ex.presentation.relations.push(PathRelation { lhs: vec![], rhs: vec![] });
        assert!(validate_presentation(&ex.presentation).is_err());
    }

    #[test]
    fn z2_representations_relations_are_respected() {
        let ex = builtins::z2_representations();
        assert!(validate_presentation(&ex.presentation).is_ok());
        assert!(check_relations(&ex.presentation).passed());
    }
}
