//! The JSON interchange schema.
//!
//! A document is an object with a top-level `"kind"` field in
//! `{"vncore", "hopf", "group", "set_core", "tannaka"}` and a kind-specific
//! payload. Matrices are written as `{"rows": r, "cols": c, "entries": [..]}`
//! with row-major entries given as exact rational strings (`"p"` or `"p/q"`,
//! `q > 0`); floating point never appears. Unknown fields are rejected, and
//! every matrix is validated against its declared shape.

use crate::linalg::{parse_rational, LinMap, RationalParseError};
use crate::setcore::{SetCoalgebraCandidate, SetMagma, SetVNCore};
use crate::tannaka::{
    FunctorStructure, Generator, MonoidalPresentation, MonoidalTables, MorRef,
    MorphismTensorWitness, PathRelation, PresObject,
};
use crate::vncore::{AlgebraData, CoalgebraData, HopfData, VNCoreData};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("document has no \"kind\" field")]
    MissingKind,
    #[error("unknown document kind {0:?}")]
    UnknownKind(String),
    #[error("bad rational in {location}: {source}")]
    Rational {
        location: String,
        source: RationalParseError,
    },
    #[error("bad shape in {location}: {what}")]
    Shape { location: String, what: String },
    #[error("unknown name {name:?} in {location}")]
    UnknownName { name: String, location: String },
}

/// Matrix encoding: row-major rational strings with declared shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl MatrixDoc {
    pub fn to_linmap(&self, location: &str) -> Result<LinMap, DocumentError> {
        if self.entries.len() != self.rows * self.cols {
            return Err(DocumentError::Shape {
                location: location.into(),
                what: format!(
                    "{}×{} matrix needs {} entries, found {}",
                    self.rows,
                    self.cols,
                    self.rows * self.cols,
                    self.entries.len()
                ),
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|s| {
                parse_rational(s).map_err(|source| DocumentError::Rational {
                    location: location.into(),
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LinMap::new(self.rows, self.cols, entries))
    }

    pub fn from_linmap(m: &LinMap) -> MatrixDoc {
        MatrixDoc {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .flat_map(|i| (0..m.cols()).map(move |j| crate::linalg::format_rational(m.entry(i, j))))
                .collect(),
        }
    }
}

fn expect_shape(
    m: &LinMap,
    rows: usize,
    cols: usize,
    location: &str,
) -> Result<(), DocumentError> {
    if (m.rows(), m.cols()) != (rows, cols) {
        return Err(DocumentError::Shape {
            location: location.into(),
            what: format!("expected {rows}×{cols}, found {}×{}", m.rows(), m.cols()),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VnCoreDoc {
    pub dim: usize,
    pub mu: MatrixDoc,
    pub eta: MatrixDoc,
    pub delta: MatrixDoc,
    pub eps: MatrixDoc,
    pub s: MatrixDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDoc {
    pub dim: usize,
    pub mu: MatrixDoc,
    pub eta: MatrixDoc,
    pub delta: MatrixDoc,
    pub eps: MatrixDoc,
    pub antipode: MatrixDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetCoreDoc {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
    /// Defaults to the identity map (diagonal δ) when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<usize>>,
    pub s: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectDoc {
    pub name: String,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    pub matrix: MatrixDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    /// Generator names in application order; an empty side is the identity.
    pub lhs: Vec<String>,
    #[serde(default)]
    pub rhs: Vec<String>,
}

/// A morphism reference: `{"gen": name}` or `{"id": object}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub enum MorRefDoc {
    #[serde(rename = "gen")]
    Gen(String),
    #[serde(rename = "id")]
    Id(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismTensorDoc {
    pub left: MorRefDoc,
    pub right: MorRefDoc,
    pub result: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalDoc {
    pub unit: String,
    /// `tensor[a][b]` = name of `a⊗b`, rows and columns in object order.
    pub tensor: Vec<Vec<String>>,
    pub dual: Vec<String>,
    /// `r[a][b]` and `i[a][b]` in object order.
    pub r: Vec<Vec<MatrixDoc>>,
    pub r0: MatrixDoc,
    pub i: Vec<Vec<MatrixDoc>>,
    pub i0: MatrixDoc,
    pub u: Vec<MatrixDoc>,
    pub ue: Vec<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphism_tensor: Vec<MorphismTensorDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TannakaDoc {
    pub objects: Vec<ObjectDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<GeneratorDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoidal: Option<MonoidalDoc>,
}

/// A parsed document of any kind.
#[derive(Debug, Clone)]
pub enum Document {
    VnCore(VNCoreData),
    Hopf(HopfData),
    Group(GroupDoc),
    SetCore(SetVNCore),
    Tannaka {
        presentation: MonoidalPresentation,
        functor: Option<FunctorStructure>,
    },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::VnCore(_) => "vncore",
            Document::Hopf(_) => "hopf",
            Document::Group(_) => "group",
            Document::SetCore(_) => "set_core",
            Document::Tannaka { .. } => "tannaka",
        }
    }
}

/// Parses a document, dispatching on `"kind"` and validating shapes.
pub fn parse_document(text: &str) -> Result<Document, DocumentError> {
    let mut value: serde_json::Value = serde_json::from_str(text)?;
    let obj = value
        .as_object_mut()
        .ok_or(DocumentError::MissingKind)?;
    let kind = obj
        .remove("kind")
        .and_then(|k| k.as_str().map(str::to_owned))
        .ok_or(DocumentError::MissingKind)?;
    let rest = serde_json::Value::Object(obj.clone());
    match kind.as_str() {
        "vncore" => {
            let doc: VnCoreDoc = serde_json::from_value(rest)?;
            let n = doc.dim;
            let mu = doc.mu.to_linmap("mu")?;
            expect_shape(&mu, n, n * n, "mu")?;
            let eta = doc.eta.to_linmap("eta")?;
            expect_shape(&eta, n, 1, "eta")?;
            let delta = doc.delta.to_linmap("delta")?;
            expect_shape(&delta, n * n, n, "delta")?;
            let eps = doc.eps.to_linmap("eps")?;
            expect_shape(&eps, 1, n, "eps")?;
            let s = doc.s.to_linmap("s")?;
            expect_shape(&s, n, n, "s")?;
            Ok(Document::VnCore(VNCoreData::new(
                AlgebraData::new(n, mu, eta),
                CoalgebraData::new(n, delta, eps),
                s,
            )))
        }
        "hopf" => {
            let doc: HopfDoc = serde_json::from_value(rest)?;
            let n = doc.dim;
            let mu = doc.mu.to_linmap("mu")?;
            expect_shape(&mu, n, n * n, "mu")?;
            let eta = doc.eta.to_linmap("eta")?;
            expect_shape(&eta, n, 1, "eta")?;
            let delta = doc.delta.to_linmap("delta")?;
            expect_shape(&delta, n * n, n, "delta")?;
            let eps = doc.eps.to_linmap("eps")?;
            expect_shape(&eps, 1, n, "eps")?;
            let antipode = doc.antipode.to_linmap("antipode")?;
            expect_shape(&antipode, n, n, "antipode")?;
            Ok(Document::Hopf(HopfData::new(
                AlgebraData::new(n, mu, eta),
                CoalgebraData::new(n, delta, eps),
                antipode,
            )))
        }
        "group" => {
            let doc: GroupDoc = serde_json::from_value(rest)?;
            Ok(Document::Group(doc))
        }
        "set_core" => {
            let doc: SetCoreDoc = serde_json::from_value(rest)?;
            let n = doc.n;
            if doc.table.len() != n || doc.table.iter().any(|r| r.len() != n) {
                return Err(DocumentError::Shape {
                    location: "table".into(),
                    what: format!("expected {n}×{n} table"),
                });
            }
            if doc.table.iter().flatten().any(|&v| v >= n) || doc.unit >= n {
                return Err(DocumentError::Shape {
                    location: "table".into(),
                    what: "entry or unit out of range".into(),
                });
            }
            let check_map = |m: &Vec<usize>, location: &str| -> Result<(), DocumentError> {
                if m.len() != n || m.iter().any(|&v| v >= n) {
                    return Err(DocumentError::Shape {
                        location: location.into(),
                        what: format!("expected a map on {n} elements"),
                    });
                }
                Ok(())
            };
            let left = doc.left.unwrap_or_else(|| (0..n).collect());
            let right = doc.right.unwrap_or_else(|| (0..n).collect());
            check_map(&left, "left")?;
            check_map(&right, "right")?;
            check_map(&doc.s, "s")?;
            Ok(Document::SetCore(SetVNCore {
                magma: SetMagma::new(n, doc.table, doc.unit),
                coalgebra: SetCoalgebraCandidate { n, left, right },
                s: doc.s,
            }))
        }
        "tannaka" => {
            let doc: TannakaDoc = serde_json::from_value(rest)?;
            parse_tannaka(doc)
        }
        other => Err(DocumentError::UnknownKind(other.to_string())),
    }
}

fn parse_tannaka(doc: TannakaDoc) -> Result<Document, DocumentError> {
    let objects: Vec<PresObject> = doc
        .objects
        .iter()
        .map(|o| PresObject { name: o.name.clone(), dim: o.dim })
        .collect();
    let n = objects.len();
    let object_index = |name: &str, location: &str| -> Result<usize, DocumentError> {
        objects
            .iter()
            .position(|o| o.name == name)
            .ok_or_else(|| DocumentError::UnknownName {
                name: name.into(),
                location: location.into(),
            })
    };

    let mut generators = Vec::new();
    for g in &doc.generators {
        let location = format!("generator {}", g.name);
        generators.push(Generator {
            name: g.name.clone(),
            source: object_index(&g.source, &location)?,
            target: object_index(&g.target, &location)?,
            map: g.matrix.to_linmap(&location)?,
        });
    }
    let generator_index = |name: &str, location: &str| -> Result<usize, DocumentError> {
        generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| DocumentError::UnknownName {
                name: name.into(),
                location: location.into(),
            })
    };

    let mut relations = Vec::new();
    for (idx, rel) in doc.relations.iter().enumerate() {
        let location = format!("relation {idx}");
        let resolve = |side: &[String]| -> Result<Vec<usize>, DocumentError> {
            side.iter().map(|g| generator_index(g, &location)).collect()
        };
        relations.push(PathRelation { lhs: resolve(&rel.lhs)?, rhs: resolve(&rel.rhs)? });
    }

    let mut monoidal = None;
    let mut functor = None;
    if let Some(m) = &doc.monoidal {
        if m.tensor.len() != n || m.tensor.iter().any(|row| row.len() != n) {
            return Err(DocumentError::Shape {
                location: "tensor".into(),
                what: format!("expected {n}×{n} table of object names"),
            });
        }
        if m.dual.len() != n {
            return Err(DocumentError::Shape {
                location: "dual".into(),
                what: format!("expected {n} object names"),
            });
        }
        let mut tensor = Vec::with_capacity(n * n);
        for row in &m.tensor {
            for name in row {
                tensor.push(object_index(name, "tensor")?);
            }
        }
        let dual = m
            .dual
            .iter()
            .map(|name| object_index(name, "dual"))
            .collect::<Result<Vec<_>, _>>()?;
        let mut morphism_tensor = Vec::new();
        for (idx, w) in m.morphism_tensor.iter().enumerate() {
            let location = format!("morphism_tensor {idx}");
            let resolve = |mr: &MorRefDoc| -> Result<MorRef, DocumentError> {
                Ok(match mr {
                    MorRefDoc::Gen(g) => MorRef::Generator(generator_index(g, &location)?),
                    MorRefDoc::Id(o) => MorRef::Identity(object_index(o, &location)?),
                })
            };
            morphism_tensor.push(MorphismTensorWitness {
                left: resolve(&w.left)?,
                right: resolve(&w.right)?,
                result: generator_index(&w.result, &location)?,
            });
        }
        monoidal = Some(MonoidalTables {
            unit: object_index(&m.unit, "unit")?,
            tensor,
            dual,
            morphism_tensor,
        });

        let grid = |docs: &Vec<Vec<MatrixDoc>>, what: &str| -> Result<Vec<LinMap>, DocumentError> {
            if docs.len() != n || docs.iter().any(|row| row.len() != n) {
                return Err(DocumentError::Shape {
                    location: what.into(),
                    what: format!("expected an {n}×{n} grid of matrices"),
                });
            }
            let mut out = Vec::with_capacity(n * n);
            for (a, row) in docs.iter().enumerate() {
                for (b, m) in row.iter().enumerate() {
                    out.push(m.to_linmap(&format!("{what}[{a}][{b}]"))?);
                }
            }
            Ok(out)
        };
        let list = |docs: &Vec<MatrixDoc>, what: &str| -> Result<Vec<LinMap>, DocumentError> {
            if docs.len() != n {
                return Err(DocumentError::Shape {
                    location: what.into(),
                    what: format!("expected {n} matrices"),
                });
            }
            docs.iter()
                .enumerate()
                .map(|(a, m)| m.to_linmap(&format!("{what}[{a}]")))
                .collect()
        };
        functor = Some(FunctorStructure {
            r: grid(&m.r, "r")?,
            r0: m.r0.to_linmap("r0")?,
            i: grid(&m.i, "i")?,
            i0: m.i0.to_linmap("i0")?,
            u: list(&m.u, "u")?,
            ue: list(&m.ue, "ue")?,
        });
    }

    Ok(Document::Tannaka {
        presentation: MonoidalPresentation {
            objects,
            generators,
            relations,
            monoidal,
        },
        functor,
    })
}
