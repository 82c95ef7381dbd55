//! The JSON document model. Documents are plain data; [`super::codec`]
//! turns them into library values and back.
//!
//! Elements are written according to their monoid: a finite element is its
//! name, a free word is an array of generator names, and a coproduct word is
//! an array of one-key objects `{"L": x}` / `{"R": y}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Envelope", into = "Envelope")]
pub struct Document {
    pub schema_version: u32,
    pub body: Body,
}

/// Wire form of [`Document`].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    schema_version: u32,
    kind: String,
    body: Value,
}

impl TryFrom<Envelope> for Document {
    type Error = String;

    fn try_from(e: Envelope) -> std::result::Result<Self, String> {
        if e.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema_version {}", e.schema_version));
        }
        let tagged = serde_json::json!({ "kind": e.kind, "body": e.body });
        let body: Body = serde_path_to_error::deserialize(tagged).map_err(|err| {
            let path = err.path().to_string();
            format!("at {path}: {}", err.into_inner())
        })?;
        Ok(Document::new(body))
    }
}

impl From<Document> for Envelope {
    fn from(d: Document) -> Self {
        let mut v = serde_json::to_value(&d.body).expect("documents serialize");
        Envelope {
            schema_version: d.schema_version,
            kind: d.body.kind().to_string(),
            body: v["body"].take(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "body", rename_all = "snake_case")]
pub enum Body {
    Monoid(MonoidDoc),
    Category(CategoryDoc),
    Functor(FunctorDoc),
    NatTrans(NatTransDoc),
    Square(SquareDoc),
    Instance(InstanceDoc),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Monoid(_) => "monoid",
            Body::Category(_) => "category",
            Body::Functor(_) => "functor",
            Body::NatTrans(_) => "nat_trans",
            Body::Square(_) => "square",
            Body::Instance(_) => "instance",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MonoidDoc {
    Finite {
        elements: Vec<String>,
        unit: String,
        /// `"x,y" -> x*y`.
        table: BTreeMap<String, String>,
    },
    Free {
        generators: Vec<String>,
    },
    Coproduct {
        left: Box<MonoidDoc>,
        right: Box<MonoidDoc>,
    },
}

/// A monoid hom as a standalone value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub domain: MonoidDoc,
    pub codomain: MonoidDoc,
    pub map: MapDoc,
}

/// An object assignment.
///
/// - `"identity"`, `"trivial"`, `"inclusion_left"`, `"inclusion_right"`;
/// - an object of images: element name to image for finite domains,
///   generator to image for free domains, `{"left": .., "right": ..}` for
///   coproduct domains;
/// - an array of `[x, image]` pairs, a finite tabulation of a map that need
///   not be a hom.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapDoc {
    Named(String),
    Images(BTreeMap<String, Value>),
    Tabulated(Vec<(Value, Value)>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum PayloadDoc {
    Point,
    /// Element name of the delooped group.
    Group(String),
    /// Morphism name of a table category.
    Table(String),
    /// Morphism of the base of an induced category.
    Lifted(Box<MorphismDoc>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source: Value,
    pub target: Value,
    pub payload: PayloadDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum CategoryDoc {
    Discrete {
        objects: MonoidDoc,
    },
    Chaotic {
        objects: MonoidDoc,
    },
    Deloop {
        objects: MonoidDoc,
        group: MonoidDoc,
    },
    Table {
        objects: MonoidDoc,
        /// `[name, source, target]`.
        morphisms: Vec<(String, String, String)>,
        /// `[object, identity]`.
        identities: Vec<(String, String)>,
        /// `[g, f, g ∘ f]`.
        compose: Vec<(String, String, String)>,
        /// `[f, g, f ⊗ g]`.
        tensor: Vec<(String, String, String)>,
        /// `[c1, c2, γ(c1, c2)]`.
        symmetry: Vec<(String, String, String)>,
    },
    Induced {
        objects: MonoidDoc,
        base: Box<CategoryDoc>,
        object_map: MapDoc,
        /// `[m1, m2, λ(m1, m2)]`; absent entries are identities, an absent
        /// list makes the coherence the identity family.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<Vec<(Value, Value, MorphismDoc)>>,
    },
}

/// How a functor acts on morphisms.
///
/// `"relabel"` keeps payloads and applies the object map to both ends, which
/// is meaningful for targets that are chaotic, discrete sources, matching
/// deloopings and induced categories over a common base.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MorphismsDoc {
    Named(String),
    Table(Vec<(MorphismDoc, MorphismDoc)>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub domain: CategoryDoc,
    pub codomain: CategoryDoc,
    pub objects: MapDoc,
    pub morphisms: MorphismsDoc,
    /// `[c1, c2, λ(c1, c2)]`; omitted for strict functors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<(Value, Value, MorphismDoc)>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransDoc {
    pub source: FunctorDoc,
    pub target: FunctorDoc,
    pub components: Vec<(Value, MorphismDoc)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoconeDoc {
    pub r: FunctorDoc,
    pub t: FunctorDoc,
}

/// An acyclic fibration `G : A -> B` and a free cofibration `A -> C`, with
/// an optional cocone `R : C -> X`, `T : B -> X` for the lift.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareDoc {
    pub fibration: FunctorDoc,
    pub cofibration: FunctorDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocone: Option<CoconeDoc>,
}

/// One generated instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub family: String,
    pub seed: u64,
    pub index: usize,
    pub document: Box<Document>,
}

impl Document {
    pub fn new(body: Body) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            body,
        }
    }
}

/// Parses document text. Errors name the JSON path and, for syntax errors,
/// the line and column.
pub fn parse(text: &str) -> Result<Document> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: Document = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        let message = if inner.is_syntax() || inner.is_eof() || inner.line() == 0 {
            format!("{inner}")
        } else {
            format!("{inner} (line {}, column {})", inner.line(), inner.column())
        };
        Error::doc(path, message)
    })?;
    Ok(doc)
}

/// Pretty-printed document text.
pub fn serialize(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

/// Single-line document text, for newline-delimited output.
pub fn serialize_line(doc: &Document) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}
