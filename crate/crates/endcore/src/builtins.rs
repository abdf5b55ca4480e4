//! The built-in example suite: character categories of small abelian groups
//! with their split functor data, a morphism-rich direct-sum presentation for
//! the coend computation alone, and the group algebras used throughout the
//! tests and the `examples` command.

use crate::linalg::{rat_int, LinMap};
use crate::tannaka::{
    FunctorStructure, Generator, MonoidalPresentation, MonoidalTables, PathRelation, PresObject,
};
use crate::vncore::GroupTable;

/// A named presentation, optionally with split functor data. Presentations
/// without functor data support only the coend computation.
#[derive(Debug, Clone, PartialEq)]
pub struct TannakaExample {
    pub name: &'static str,
    pub presentation: MonoidalPresentation,
    pub functor: Option<FunctorStructure>,
    /// The coend dimension this example is known to produce.
    pub expected_coend_dim: usize,
}

fn one() -> LinMap {
    LinMap::scalar(rat_int(1))
}

/// Character-style presentation from a group table: one object per element,
/// all dimensions 1, tensor = multiplication, dual = inverse, and every piece
/// of functor structure the 1×1 identity.
fn character_presentation(
    name: &'static str,
    names: &[&str],
    g: &GroupTable,
) -> TannakaExample {
    let n = g.order();
    assert_eq!(names.len(), n);
    let objects = names
        .iter()
        .map(|&name| PresObject { name: name.into(), dim: 1 })
        .collect();
    let tensor = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| g.mul(a, b))
        .collect();
    let dual = (0..n).map(|a| g.inverse(a)).collect();
    let presentation = MonoidalPresentation {
        objects,
        generators: vec![],
        relations: vec![],
        monoidal: Some(MonoidalTables {
            unit: g.identity_element(),
            tensor,
            dual,
            morphism_tensor: vec![],
        }),
    };
    let functor = FunctorStructure {
        r: vec![one(); n * n],
        r0: one(),
        i: vec![one(); n * n],
        i0: one(),
        u: vec![one(); n],
        ue: vec![one(); n],
    };
    TannakaExample {
        name,
        presentation,
        functor: Some(functor),
        expected_coend_dim: n,
    }
}

/// The one-object presentation with trivial structure everywhere.
pub fn trivial() -> TannakaExample {
    character_presentation("trivial", &["I"], &GroupTable::cyclic(1))
}

/// The two characters of ℤ/2: objects `I` and `s` with `s⊗s = I`.
pub fn z2_characters() -> TannakaExample {
    character_presentation("z2-characters", &["I", "s"], &GroupTable::cyclic(2))
}

/// The four characters of the Klein four-group, all self-dual.
pub fn klein_four_characters() -> TannakaExample {
    character_presentation(
        "klein-four-characters",
        &["I", "a", "b", "ab"],
        &GroupTable::klein_four(),
    )
}

/// Objects `I`, `s` and `ρ = I⊕s` with the two injections and two
/// projections as generators; no monoidal data, so only the coend is
/// computable. The split relations `p∘a = 1` and `q∘b = 1` are declared.
pub fn z2_representations() -> TannakaExample {
    let objects = vec![
        PresObject { name: "I".into(), dim: 1 },
        PresObject { name: "s".into(), dim: 1 },
        PresObject { name: "rho".into(), dim: 2 },
    ];
    let generators = vec![
        Generator {
            name: "a".into(), // I → ρ
            source: 0,
            target: 2,
            map: LinMap::from_int_rows(&[&[1], &[0]]),
        },
        Generator {
            name: "b".into(), // s → ρ
            source: 1,
            target: 2,
            map: LinMap::from_int_rows(&[&[0], &[1]]),
        },
        Generator {
            name: "p".into(), // ρ → I
            source: 2,
            target: 0,
            map: LinMap::from_int_rows(&[&[1, 0]]),
        },
        Generator {
            name: "q".into(), // ρ → s
            source: 2,
            target: 1,
            map: LinMap::from_int_rows(&[&[0, 1]]),
        },
    ];
    let relations = vec![
        PathRelation { lhs: vec![0, 2], rhs: vec![] }, // p∘a = 1_I
        PathRelation { lhs: vec![1, 3], rhs: vec![] }, // q∘b = 1_s
    ];
    TannakaExample {
        name: "z2-representations",
        presentation: MonoidalPresentation {
            objects,
            generators,
            relations,
            monoidal: None,
        },
        functor: None,
        expected_coend_dim: 2,
    }
}

/// The same presentation with the composite idempotents `a∘p` and `b∘q`
/// added as redundant generators. Their dinaturality relations are linear
/// combinations of the existing ones, so the coend must not change.
pub fn z2_representations_with_redundant_generators() -> TannakaExample {
    let mut ex = z2_representations();
    ex.name = "z2-representations-redundant";
    ex.presentation.generators.push(Generator {
        name: "ap".into(), // ρ → ρ, a∘p
        source: 2,
        target: 2,
        map: LinMap::from_int_rows(&[&[1, 0], &[0, 0]]),
    });
    ex.presentation.generators.push(Generator {
        name: "bq".into(), // ρ → ρ, b∘q
        source: 2,
        target: 2,
        map: LinMap::from_int_rows(&[&[0, 0], &[0, 1]]),
    });
    ex
}

/// Clone of `ex` with the sign of `Ue` flipped at one object — the canonical
/// fixture for demonstrating that the duality axiom checks locate failures.
pub fn with_ue_sign_flip(ex: &TannakaExample, object: usize) -> TannakaExample {
    let mut out = ex.clone();
    let f = out
        .functor
        .as_mut()
        .expect("sign-flip fixture needs functor data");
    f.ue[object] = f.ue[object].scale(&rat_int(-1));
    out
}

/// Clone of `ex` with objects listed in the order `perm` (old index `a`
/// becomes new index `perm[a]`), reindexing every table and structure map.
/// Only valid for generator-free monoidal examples.
pub fn permute_objects(ex: &TannakaExample, perm: &[usize]) -> TannakaExample {
    let p = &ex.presentation;
    let n = p.n_objects();
    assert_eq!(perm.len(), n);
    assert!(p.generators.is_empty(), "permutation helper supports object-only presentations");
    let mut inv = vec![0usize; n];
    for (a, &pa) in perm.iter().enumerate() {
        inv[pa] = a;
    }
    let m = p.monoidal.as_ref().expect("monoidal example");
    let f = ex.functor.as_ref().expect("functor data");

    let objects = (0..n)
        .map(|new| p.objects[inv[new]].clone())
        .collect();
    let tensor = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| perm[m.tensor_of(inv[a], inv[b], n)])
        .collect();
    let dual = (0..n).map(|a| perm[m.dual[inv[a]]]).collect();
    let r = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| f.r[inv[a] * n + inv[b]].clone())
        .collect();
    let i = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| f.i[inv[a] * n + inv[b]].clone())
        .collect();
    let u = (0..n).map(|a| f.u[inv[a]].clone()).collect();
    let ue = (0..n).map(|a| f.ue[inv[a]].clone()).collect();

    TannakaExample {
        name: ex.name,
        presentation: MonoidalPresentation {
            objects,
            generators: vec![],
            relations: vec![],
            monoidal: Some(MonoidalTables {
                unit: perm[m.unit],
                tensor,
                dual,
                morphism_tensor: vec![],
            }),
        },
        functor: Some(FunctorStructure {
            r,
            r0: f.r0.clone(),
            i,
            i0: f.i0.clone(),
            u,
            ue,
        }),
        expected_coend_dim: ex.expected_coend_dim,
    }
}

/// Every monoidal example that supports the full pipeline.
pub fn monoidal_examples() -> Vec<TannakaExample> {
    vec![trivial(), z2_characters(), klein_four_characters()]
}

/// The groups of order at most 6, by name.
pub fn groups_up_to_order_6() -> Vec<(&'static str, GroupTable)> {
    vec![
        ("Z/2", GroupTable::cyclic(2)),
        ("Z/3", GroupTable::cyclic(3)),
        ("Z/4", GroupTable::cyclic(4)),
        ("V4", GroupTable::klein_four()),
        ("Z/5", GroupTable::cyclic(5)),
        ("Z/6", GroupTable::cyclic(6)),
        ("S3", GroupTable::symmetric_3()),
    ]
}
