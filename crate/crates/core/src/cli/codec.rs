//! Conversion between documents and library values.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde_json::{json, Value};

use super::doc::{CategoryDoc, FunctorDoc, HomDoc, MapDoc, MonoidDoc, MorphismDoc, MorphismsDoc, NatTransDoc, PayloadDoc};
use crate::error::{Error, Result};
use crate::functors::relabel;
use crate::gabriel::induced_category;
use crate::monoid::{sym, Element, HomMap, Letter, Monoid, MonoidHom, MonoidKind, Side};
use crate::permcat::{CatKind, CatRef, Morphism, Payload, PermCat, TableCatBuilder};
use crate::rule::{ObjectMap, PairFn};
use crate::smfunctor::{MonoidalNatTrans, SmFunctor};

/// Prefixes the path of a document error, or turns any other error into a
/// document error at `path`.
fn at<T>(path: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Document { path: p, message } => Error::doc(format!("{path}.{p}"), message),
        e => Error::doc(path, e.to_string()),
    })
}

fn shape(what: &str, v: &Value) -> Error {
    Error::doc("", format!("expected {what}, found {v}"))
}

// ---- monoids and elements ----

pub fn monoid(d: &MonoidDoc) -> Result<Monoid> {
    match d {
        MonoidDoc::Finite { elements, unit, table } => {
            let n = elements.len();
            let index = |name: &str| {
                elements
                    .iter()
                    .position(|e| e == name)
                    .ok_or_else(|| Error::doc("table", format!("unknown element `{name}`")))
            };
            let mut rows = vec![vec![usize::MAX; n]; n];
            for (key, value) in table {
                let (x, y) = key
                    .split_once(',')
                    .ok_or_else(|| Error::doc("table", format!("key `{key}` is not `x,y`")))?;
                rows[index(x)?][index(y)?] = index(value)?;
            }
            if let Some((i, j)) = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .find(|&(i, j)| rows[i][j] == usize::MAX)
            {
                return Err(Error::doc(
                    "table",
                    format!("missing entry `{},{}`", elements[i], elements[j]),
                ));
            }
            let names: Vec<&str> = elements.iter().map(String::as_str).collect();
            at("table", Monoid::finite(&names, unit, rows))
        }
        MonoidDoc::Free { generators } => {
            let names: Vec<&str> = generators.iter().map(String::as_str).collect();
            at("generators", Monoid::free(&names))
        }
        MonoidDoc::Coproduct { left, right } => Ok(Monoid::coproduct_of(
            at("left", monoid(left))?,
            at("right", monoid(right))?,
        )),
    }
}

pub fn monoid_doc(m: &Monoid) -> MonoidDoc {
    match m.kind() {
        MonoidKind::Finite(f) => {
            let mut table = BTreeMap::new();
            for (i, x) in f.elements.iter().enumerate() {
                for (j, y) in f.elements.iter().enumerate() {
                    table.insert(format!("{x},{y}"), f.elements[f.table[i][j]].to_string());
                }
            }
            MonoidDoc::Finite {
                elements: f.elements.iter().map(|s| s.to_string()).collect(),
                unit: f.elements[f.unit].to_string(),
                table,
            }
        }
        MonoidKind::Free { generators } => MonoidDoc::Free {
            generators: generators.iter().map(|s| s.to_string()).collect(),
        },
        MonoidKind::Coproduct { left, right } => MonoidDoc::Coproduct {
            left: Box::new(monoid_doc(left)),
            right: Box::new(monoid_doc(right)),
        },
    }
}

pub fn element(m: &Monoid, v: &Value) -> Result<Element> {
    let x = match (m.kind(), v) {
        (MonoidKind::Finite(f), Value::String(name)) => Element::Finite(
            f.index_of(name)
                .ok_or_else(|| Error::doc("", format!("`{name}` is not an element of {m}")))?,
        ),
        (MonoidKind::Free { .. }, Value::Array(gens)) => Element::Word(
            gens.iter()
                .map(|g| g.as_str().map(sym).ok_or_else(|| shape("a generator name", g)))
                .collect::<Result<_>>()?,
        ),
        (MonoidKind::Coproduct { left, right }, Value::Array(letters)) => {
            let mut raw = Vec::with_capacity(letters.len());
            for l in letters {
                let (side, inner) = match l.as_object().filter(|o| o.len() == 1) {
                    Some(o) => o.iter().next().expect("one key"),
                    None => return Err(shape("a one-key letter object", l)),
                };
                let (side, factor) = match side.as_str() {
                    "L" => (Side::Left, left),
                    "R" => (Side::Right, right),
                    _ => return Err(shape("a letter tagged L or R", l)),
                };
                raw.push(Letter::new(side, element(factor, inner)?));
            }
            m.normalize(raw)?
        }
        _ => return Err(Error::doc("", format!("{v} is not an element of {m}"))),
    };
    if !m.contains(&x) {
        return Err(Error::doc("", format!("{v} is not an element of {m}")));
    }
    Ok(x)
}

pub fn element_value(m: &Monoid, x: &Element) -> Value {
    match (m.kind(), x) {
        (MonoidKind::Finite(f), Element::Finite(i)) => json!(&*f.elements[*i]),
        (_, Element::Word(w)) => Value::Array(w.iter().map(|g| json!(&**g)).collect()),
        (MonoidKind::Coproduct { left, right }, Element::Alt(ls)) => Value::Array(
            ls.iter()
                .map(|l| {
                    let factor = if l.side == Side::Left { left } else { right };
                    json!({ l.side.tag(): element_value(factor, &l.elem) })
                })
                .collect(),
        ),
        _ => json!(format!("{x:?}")),
    }
}

// ---- homs and object maps ----

fn hom_from_images(dom: &Monoid, cod: &Monoid, images: &BTreeMap<String, Value>) -> Result<MonoidHom> {
    let image = |key: &str| -> Result<Element> {
        let v = images
            .get(key)
            .ok_or_else(|| Error::doc("", format!("no image for `{key}`")))?;
        at(key, element(cod, v))
    };
    match dom.kind() {
        MonoidKind::Finite(f) => {
            if let Some(k) = images.keys().find(|k| f.index_of(k).is_none()) {
                return Err(Error::doc(k.as_str(), "not an element of the domain"));
            }
            let table = f.elements.iter().map(|e| image(e)).collect::<Result<_>>()?;
            MonoidHom::from_table(dom, cod, table)
        }
        MonoidKind::Free { generators } => {
            if let Some(k) = images.keys().find(|k| !generators.iter().any(|g| &**g == k.as_str())) {
                return Err(Error::doc(k.as_str(), "not a generator of the domain"));
            }
            let map = generators
                .iter()
                .map(|g| Ok((g.clone(), image(g)?)))
                .collect::<Result<_>>()?;
            MonoidHom::from_generators(dom, cod, map)
        }
        MonoidKind::Coproduct { left, right } => {
            if let Some(k) = images.keys().find(|k| *k != "left" && *k != "right") {
                return Err(Error::doc(k.as_str(), "coproduct maps have `left` and `right` only"));
            }
            let part = |key: &str, factor: &Monoid| -> Result<MonoidHom> {
                let v = images
                    .get(key)
                    .ok_or_else(|| Error::doc(key, "missing component"))?;
                let d: MapDoc = serde_json::from_value(v.clone())
                    .map_err(|e| Error::doc(key, e.to_string()))?;
                at(key, hom_map(factor, cod, &d))
            };
            MonoidHom::pair(dom, part("left", left)?, part("right", right)?)
        }
    }
}

/// A map document that must describe a monoid hom.
pub fn hom_map(dom: &Monoid, cod: &Monoid, d: &MapDoc) -> Result<MonoidHom> {
    match object_map(dom, cod, d)? {
        ObjectMap::Hom(h) => Ok(h),
        ObjectMap::Rule(_) => Err(Error::doc("", "a tabulated map is not a monoid hom")),
    }
}

pub fn object_map(dom: &Monoid, cod: &Monoid, d: &MapDoc) -> Result<ObjectMap> {
    let h = match d {
        MapDoc::Named(name) => match name.as_str() {
            "identity" if dom == cod => MonoidHom::identity(dom),
            "trivial" => MonoidHom::trivial(dom, cod),
            "inclusion_left" | "inclusion_right" => {
                let side = if name == "inclusion_left" { Side::Left } else { Side::Right };
                let h = MonoidHom::inclusion(cod, side)?;
                if h.domain() != dom {
                    return Err(Error::doc("", format!("{dom} is not the {name:?} factor of {cod}")));
                }
                h
            }
            _ => return Err(Error::doc("", format!("unknown or ill-typed map `{name}`"))),
        },
        MapDoc::Images(images) => hom_from_images(dom, cod, images)?,
        MapDoc::Tabulated(pairs) => {
            let mut table = BTreeMap::new();
            for (i, (x, y)) in pairs.iter().enumerate() {
                let x = at(&format!("[{i}]"), element(dom, x))?;
                let y = at(&format!("[{i}]"), element(cod, y))?;
                table.insert(x, y);
            }
            if table.get(&dom.unit()) != Some(&cod.unit()) {
                return Err(Error::doc("", "tabulated map must send the unit to the unit"));
            }
            let dom = dom.clone();
            return Ok(ObjectMap::rule(move |x: &Element| {
                table
                    .get(x)
                    .cloned()
                    .ok_or_else(|| Error::OutOfTable(dom.show(x)))
            }));
        }
    };
    Ok(ObjectMap::Hom(h))
}

pub fn map_doc(h: &MonoidHom) -> Result<MapDoc> {
    match h.map() {
        HomMap::Identity => return Ok(MapDoc::Named("identity".into())),
        HomMap::Trivial => return Ok(MapDoc::Named("trivial".into())),
        HomMap::Inclusion(Side::Left) => return Ok(MapDoc::Named("inclusion_left".into())),
        HomMap::Inclusion(Side::Right) => return Ok(MapDoc::Named("inclusion_right".into())),
        _ => {}
    }
    let c = h.canonical()?;
    let cod = h.codomain();
    let images = match (c.domain().kind(), c.map()) {
        (MonoidKind::Finite(f), HomMap::Table(ys)) => f
            .elements
            .iter()
            .zip(ys)
            .map(|(x, y)| (x.to_string(), element_value(cod, y)))
            .collect(),
        (_, HomMap::Generators(g)) => g
            .iter()
            .map(|(x, y)| (x.to_string(), element_value(cod, y)))
            .collect(),
        (_, HomMap::Pair(l, r)) => BTreeMap::from([
            ("left".to_string(), serde_json::to_value(map_doc(l)?).expect("map")),
            ("right".to_string(), serde_json::to_value(map_doc(r)?).expect("map")),
        ]),
        _ => unreachable!("canonical form"),
    };
    Ok(MapDoc::Images(images))
}

/// A hom document for `h`, or a tabulation at `depth` for a rule.
pub fn object_map_doc(dom: &Monoid, cod: &Monoid, m: &ObjectMap, depth: usize) -> Result<MapDoc> {
    match m {
        ObjectMap::Hom(h) => map_doc(h),
        ObjectMap::Rule(f) => Ok(MapDoc::Tabulated(
            dom.enumerate(depth)
                .iter()
                .map(|x| Ok((element_value(dom, x), element_value(cod, &f(x)?))))
                .collect::<Result<_>>()?,
        )),
    }
}

pub fn hom(d: &HomDoc) -> Result<MonoidHom> {
    let dom = at("domain", monoid(&d.domain))?;
    let cod = at("codomain", monoid(&d.codomain))?;
    at("map", hom_map(&dom, &cod, &d.map))
}

pub fn hom_doc(h: &MonoidHom) -> Result<HomDoc> {
    Ok(HomDoc {
        domain: monoid_doc(h.domain()),
        codomain: monoid_doc(h.codomain()),
        map: map_doc(h)?,
    })
}

// ---- morphisms ----

pub fn morphism(c: &PermCat, d: &MorphismDoc) -> Result<Morphism> {
    let source = at("source", element(c.objects(), &d.source))?;
    let target = at("target", element(c.objects(), &d.target))?;
    let payload = match (&d.payload, c.kind()) {
        (PayloadDoc::Point, _) => Payload::Point,
        (PayloadDoc::Group(g), CatKind::Deloop { group }) => Payload::Group(
            group
                .as_finite()
                .and_then(|f| f.index_of(g))
                .ok_or_else(|| Error::doc("payload", format!("`{g}` is not in {group}")))?,
        ),
        (PayloadDoc::Table(name), CatKind::Table(t)) => Payload::Table(
            t.find(name)
                .ok_or_else(|| Error::doc("payload", format!("no morphism `{name}`")))?,
        ),
        (PayloadDoc::Lifted(b), CatKind::Induced(i)) => {
            Payload::Lifted(Box::new(at("payload.lifted", morphism(&i.base, b))?))
        }
        (p, _) => {
            return Err(Error::doc("payload", format!("{p:?} does not fit a {} category", c.family())))
        }
    };
    let f = Morphism::new(source, target, payload);
    if !c.contains(&f) {
        return Err(Error::doc("", format!("{} is not a morphism of {c}", c.show_mor(&f))));
    }
    Ok(f)
}

pub fn morphism_doc(c: &PermCat, f: &Morphism) -> MorphismDoc {
    let payload = match (&f.payload, c.kind()) {
        (Payload::Group(i), CatKind::Deloop { group }) => {
            PayloadDoc::Group(group.show(&Element::Finite(*i)))
        }
        (Payload::Table(i), CatKind::Table(t)) => PayloadDoc::Table(t.name(*i).to_string()),
        (Payload::Lifted(b), CatKind::Induced(ind)) => {
            PayloadDoc::Lifted(Box::new(morphism_doc(&ind.base, b)))
        }
        _ => PayloadDoc::Point,
    };
    MorphismDoc {
        source: element_value(c.objects(), &f.source),
        target: element_value(c.objects(), &f.target),
        payload,
    }
}

/// Pair-indexed table with identity defaults: `λ(x, y)` is looked up, and
/// otherwise the identity on `obj(x ⊗ y)` in `target`.
fn pair_table(
    objects: &Monoid,
    target: &CatRef,
    obj: ObjectMap,
    entries: &[(Value, Value, MorphismDoc)],
) -> Result<PairFn> {
    let mut table = BTreeMap::new();
    for (i, (x, y, m)) in entries.iter().enumerate() {
        let p = format!("[{i}]");
        let key = (at(&p, element(objects, x))?, at(&p, element(objects, y))?);
        table.insert(key, at(&p, morphism(target, m))?);
    }
    let (objects, target) = (objects.clone(), target.clone());
    Ok(Arc::new(move |x: &Element, y: &Element| match table.get(&(x.clone(), y.clone())) {
        Some(m) => Ok(m.clone()),
        None => target.identity(&obj.apply(&objects.multiply(x, y)?)?),
    }))
}

/// Non-identity values of a pair family over `objects.enumerate(depth)`.
fn pair_entries(
    objects: &Monoid,
    target: &PermCat,
    family: impl Fn(&Element, &Element) -> Result<Morphism>,
    depth: usize,
) -> Result<Vec<(Value, Value, MorphismDoc)>> {
    let xs = objects.enumerate(depth);
    let mut out = Vec::new();
    for x in &xs {
        for y in &xs {
            let m = family(x, y)?;
            if m.source != m.target || target.identity(&m.source)? != m {
                out.push((
                    element_value(objects, x),
                    element_value(objects, y),
                    morphism_doc(target, &m),
                ));
            }
        }
    }
    Ok(out)
}

// ---- categories, functors, transformations ----

/// Realizes documents, sharing one value per structurally equal category
/// document so that induced categories over a common base stay comparable.
#[derive(Default)]
pub struct Realizer {
    categories: HashMap<String, CatRef>,
}

impl Realizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn category(&mut self, d: &CategoryDoc) -> Result<CatRef> {
        let key = serde_json::to_string(d).expect("documents serialize");
        if let Some(c) = self.categories.get(&key) {
            return Ok(c.clone());
        }
        let c: CatRef = Arc::new(self.build_category(d)?);
        self.categories.insert(key, c.clone());
        Ok(c)
    }

    fn build_category(&mut self, d: &CategoryDoc) -> Result<PermCat> {
        match d {
            CategoryDoc::Discrete { objects } => PermCat::discrete(at("objects", monoid(objects))?),
            CategoryDoc::Chaotic { objects } => Ok(PermCat::chaotic(at("objects", monoid(objects))?)),
            CategoryDoc::Deloop { objects, group } => PermCat::deloop(
                at("objects", monoid(objects))?,
                at("group", monoid(group))?,
            ),
            CategoryDoc::Table {
                objects,
                morphisms,
                identities,
                compose,
                tensor,
                symmetry,
            } => {
                let mut b = TableCatBuilder::new(at("objects", monoid(objects))?)?;
                for (i, (n, s, t)) in morphisms.iter().enumerate() {
                    at(&format!("morphisms[{i}]"), b.morphism(n, s, t).map(|_| ()))?;
                }
                for (i, (c, m)) in identities.iter().enumerate() {
                    at(&format!("identities[{i}]"), b.identity(c, m).map(|_| ()))?;
                }
                for (i, (g, f, h)) in compose.iter().enumerate() {
                    at(&format!("compose[{i}]"), b.compose(g, f, h).map(|_| ()))?;
                }
                for (i, (f, g, h)) in tensor.iter().enumerate() {
                    at(&format!("tensor[{i}]"), b.tensor(f, g, h).map(|_| ()))?;
                }
                for (i, (x, y, m)) in symmetry.iter().enumerate() {
                    at(&format!("symmetry[{i}]"), b.symmetry(x, y, m).map(|_| ()))?;
                }
                Ok(PermCat::table(b.build()?))
            }
            CategoryDoc::Induced {
                objects,
                base,
                object_map: q,
                lambda,
            } => {
                let objects = at("objects", monoid(objects))?;
                let base = at("base", self.category(base))?;
                let q = at("object_map", object_map(&objects, base.objects(), q))?;
                let lambda = match (lambda, &q) {
                    (None, ObjectMap::Hom(_)) => None,
                    (entries, _) => Some(at(
                        "lambda",
                        pair_table(&objects, &base, q.clone(), entries.as_deref().unwrap_or(&[])),
                    )?),
                };
                induced_category(objects, base, q, lambda)
            }
        }
    }

    pub fn functor(&mut self, d: &FunctorDoc) -> Result<SmFunctor> {
        let dom = at("domain", self.category(&d.domain))?;
        let cod = at("codomain", self.category(&d.codomain))?;
        let objects = at("objects", object_map(dom.objects(), cod.objects(), &d.objects))?;
        let morphisms = match &d.morphisms {
            MorphismsDoc::Named(name) if name == "identity" => {
                if !Arc::ptr_eq(&dom, &cod) {
                    return Err(Error::doc("morphisms", "identity needs equal domain and codomain"));
                }
                SmFunctor::identity(&dom).morphisms
            }
            MorphismsDoc::Named(name) if name == "relabel" => {
                let h = objects
                    .as_hom()
                    .ok_or_else(|| Error::doc("morphisms", "relabel needs a hom object map"))?;
                at("morphisms", relabel(&dom, &cod, h.clone()))?.morphisms
            }
            MorphismsDoc::Named(name) => {
                return Err(Error::doc("morphisms", format!("unknown rule `{name}`")))
            }
            MorphismsDoc::Table(pairs) => {
                let mut table = BTreeMap::new();
                for (i, (f, g)) in pairs.iter().enumerate() {
                    let p = format!("morphisms[{i}]");
                    table.insert(at(&p, morphism(&dom, f))?, at(&p, morphism(&cod, g))?);
                }
                let dd = dom.clone();
                Arc::new(move |f: &Morphism| {
                    table.get(f).cloned().ok_or_else(|| Error::OutOfTable(dd.show_mor(f)))
                })
            }
        };
        let lambda = match &d.lambda {
            None => None,
            Some(entries) => Some(at(
                "lambda",
                pair_table(dom.objects(), &cod, objects.clone(), entries),
            )?),
        };
        Ok(SmFunctor::new(dom, cod, objects, morphisms, lambda))
    }

    pub fn nat_trans(&mut self, d: &NatTransDoc) -> Result<MonoidalNatTrans> {
        let source = at("source", self.functor(&d.source))?;
        let target = at("target", self.functor(&d.target))?;
        let mut table = BTreeMap::new();
        for (i, (x, m)) in d.components.iter().enumerate() {
            let p = format!("components[{i}]");
            let x = at(&p, element(source.domain.objects(), x))?;
            table.insert(x, at(&p, morphism(&source.codomain, m))?);
        }
        let dom = source.domain.clone();
        Ok(MonoidalNatTrans::new(
            source,
            target,
            Arc::new(move |x: &Element| {
                table
                    .get(x)
                    .cloned()
                    .ok_or_else(|| Error::OutOfTable(dom.objects().show(x)))
            }),
        ))
    }
}

pub fn category_doc(c: &PermCat, depth: usize) -> Result<CategoryDoc> {
    let objects = monoid_doc(c.objects());
    Ok(match c.kind() {
        CatKind::Discrete => CategoryDoc::Discrete { objects },
        CatKind::Chaotic => CategoryDoc::Chaotic { objects },
        CatKind::Deloop { group } => CategoryDoc::Deloop {
            objects,
            group: monoid_doc(group),
        },
        CatKind::Table(t) => {
            let e = t.entries();
            CategoryDoc::Table {
                objects,
                morphisms: e.morphisms(),
                identities: e.identities(),
                compose: e.compose(),
                tensor: e.tensor(),
                symmetry: e.symmetry(),
            }
        }
        CatKind::Induced(i) => CategoryDoc::Induced {
            objects,
            base: Box::new(category_doc(&i.base, depth)?),
            object_map: object_map_doc(c.objects(), i.base.objects(), &i.q, depth)?,
            lambda: match &i.lambda {
                None => None,
                Some(_) => Some(pair_entries(
                    c.objects(),
                    &i.base,
                    |x, y| i.lambda_at(c.objects(), x, y),
                    depth,
                )?),
            },
        },
    })
}

/// A functor document with morphisms tabulated over the domain's morphisms
/// at `depth`.
pub fn functor_doc(f: &SmFunctor, depth: usize) -> Result<FunctorDoc> {
    let morphisms = f
        .domain
        .morphisms(depth)?
        .iter()
        .map(|m| Ok((morphism_doc(&f.domain, m), morphism_doc(&f.codomain, &f.mor(m)?))))
        .collect::<Result<_>>()?;
    Ok(FunctorDoc {
        domain: category_doc(&f.domain, depth)?,
        codomain: category_doc(&f.codomain, depth)?,
        objects: object_map_doc(f.domain.objects(), f.codomain.objects(), &f.objects, depth)?,
        morphisms: MorphismsDoc::Table(morphisms),
        lambda: match &f.lambda {
            None => None,
            Some(_) => Some(pair_entries(f.domain.objects(), &f.codomain, |x, y| f.lambda_at(x, y), depth)?),
        },
    })
}

pub fn nat_trans_doc(alpha: &MonoidalNatTrans, depth: usize) -> Result<NatTransDoc> {
    let objects = alpha.source.domain.objects();
    Ok(NatTransDoc {
        source: functor_doc(&alpha.source, depth)?,
        target: functor_doc(&alpha.target, depth)?,
        components: objects
            .enumerate(depth)
            .iter()
            .map(|x| Ok((element_value(objects, x), morphism_doc(&alpha.source.codomain, &alpha.at(x)?))))
            .collect::<Result<_>>()?,
    })
}
