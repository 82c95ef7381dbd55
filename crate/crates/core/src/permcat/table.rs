use std::collections::BTreeMap;

use super::{Morphism, Payload};
use crate::error::{Error, Result};
use crate::monoid::{Element, Monoid};

/// A permutative category given by explicit finite tables over a finite
/// object monoid. Tables are taken as given, so a table category may violate
/// any law; this is how negative controls are expressed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCat {
    objects: Monoid,
    names: Vec<String>,
    ends: Vec<(usize, usize)>,
    identities: Vec<usize>,
    compose: BTreeMap<(usize, usize), usize>,
    tensor: Vec<Vec<usize>>,
    symmetry: Vec<Vec<usize>>,
}

impl TableCat {
    pub fn objects(&self) -> &Monoid {
        &self.objects
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Index of the morphism called `name`.
    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn morphism_count(&self) -> usize {
        self.names.len()
    }

    fn obj(i: usize) -> Element {
        Element::Finite(i)
    }

    pub fn morphism(&self, i: usize) -> Morphism {
        let (s, t) = self.ends[i];
        Morphism::new(Self::obj(s), Self::obj(t), Payload::Table(i))
    }

    fn index(&self, f: &Morphism) -> Result<usize> {
        match f.payload {
            Payload::Table(i) if i < self.names.len() => Ok(i),
            _ => Err(Error::ForeignMorphism(format!("{f:?}"))),
        }
    }

    pub(super) fn contains(&self, f: &Morphism) -> bool {
        self.index(f).is_ok_and(|i| self.morphism(i) == *f)
    }

    pub(super) fn hom(&self, c1: &Element, c2: &Element) -> Vec<Morphism> {
        (0..self.names.len())
            .map(|i| self.morphism(i))
            .filter(|m| m.source == *c1 && m.target == *c2)
            .collect()
    }

    pub(super) fn identity(&self, c: &Element) -> Morphism {
        let Element::Finite(i) = c else { unreachable!("checked object") };
        self.morphism(self.identities[*i])
    }

    pub(super) fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        let key = (self.index(g)?, self.index(f)?);
        self.compose
            .get(&key)
            .map(|&h| self.morphism(h))
            .ok_or_else(|| {
                Error::NotComposable(format!(
                    "no entry for {} ∘ {}",
                    self.names[key.0], self.names[key.1]
                ))
            })
    }

    pub(super) fn tensor(&self, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        Ok(self.morphism(self.tensor[self.index(f)?][self.index(g)?]))
    }

    pub(super) fn symmetry(&self, c1: &Element, c2: &Element) -> Result<Morphism> {
        let (Element::Finite(a), Element::Finite(b)) = (c1, c2) else {
            unreachable!("checked objects")
        };
        Ok(self.morphism(self.symmetry[*a][*b]))
    }

    /// Name-keyed view of the tables, for serialization.
    pub fn entries(&self) -> TableEntries<'_> {
        TableEntries { table: self }
    }
}

pub struct TableEntries<'a> {
    table: &'a TableCat,
}

impl<'a> TableEntries<'a> {
    fn obj_name(&self, i: usize) -> String {
        self.table.objects.show(&Element::Finite(i))
    }

    pub fn morphisms(&self) -> Vec<(String, String, String)> {
        let t = self.table;
        (0..t.names.len())
            .map(|i| (t.names[i].clone(), self.obj_name(t.ends[i].0), self.obj_name(t.ends[i].1)))
            .collect()
    }

    pub fn identities(&self) -> Vec<(String, String)> {
        let t = self.table;
        t.identities
            .iter()
            .enumerate()
            .map(|(c, &m)| (self.obj_name(c), t.names[m].clone()))
            .collect()
    }

    pub fn compose(&self) -> Vec<(String, String, String)> {
        let t = self.table;
        t.compose
            .iter()
            .map(|(&(g, f), &h)| (t.names[g].clone(), t.names[f].clone(), t.names[h].clone()))
            .collect()
    }

    pub fn tensor(&self) -> Vec<(String, String, String)> {
        let t = self.table;
        let mut out = Vec::new();
        for (f, row) in t.tensor.iter().enumerate() {
            for (g, &h) in row.iter().enumerate() {
                out.push((t.names[f].clone(), t.names[g].clone(), t.names[h].clone()));
            }
        }
        out
    }

    pub fn symmetry(&self) -> Vec<(String, String, String)> {
        let t = self.table;
        let mut out = Vec::new();
        for (a, row) in t.symmetry.iter().enumerate() {
            for (b, &m) in row.iter().enumerate() {
                out.push((self.obj_name(a), self.obj_name(b), t.names[m].clone()));
            }
        }
        out
    }
}

/// Name-based builder for [`TableCat`].
#[derive(Debug)]
pub struct TableCatBuilder {
    objects: Monoid,
    names: Vec<String>,
    ends: Vec<(usize, usize)>,
    identities: BTreeMap<usize, usize>,
    compose: BTreeMap<(usize, usize), usize>,
    tensor: BTreeMap<(usize, usize), usize>,
    symmetry: BTreeMap<(usize, usize), usize>,
}

impl TableCatBuilder {
    pub fn new(objects: Monoid) -> Result<Self> {
        if !objects.is_finite() {
            return Err(Error::InvalidCategory(
                "table categories need a finite object monoid".into(),
            ));
        }
        Ok(TableCatBuilder {
            objects,
            names: Vec::new(),
            ends: Vec::new(),
            identities: BTreeMap::new(),
            compose: BTreeMap::new(),
            tensor: BTreeMap::new(),
            symmetry: BTreeMap::new(),
        })
    }

    fn object(&self, name: &str) -> Result<usize> {
        self.objects
            .as_finite()
            .and_then(|f| f.index_of(name))
            .ok_or_else(|| Error::InvalidCategory(format!("unknown object `{name}`")))
    }

    fn mor(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::InvalidCategory(format!("unknown morphism `{name}`")))
    }

    pub fn morphism(&mut self, name: &str, source: &str, target: &str) -> Result<&mut Self> {
        if self.names.iter().any(|n| n == name) {
            return Err(Error::DuplicateSymbol(name.to_string()));
        }
        let ends = (self.object(source)?, self.object(target)?);
        self.names.push(name.to_string());
        self.ends.push(ends);
        Ok(self)
    }

    pub fn identity(&mut self, object: &str, morphism: &str) -> Result<&mut Self> {
        let (c, m) = (self.object(object)?, self.mor(morphism)?);
        self.identities.insert(c, m);
        Ok(self)
    }

    /// Records `g ∘ f = h`.
    pub fn compose(&mut self, g: &str, f: &str, h: &str) -> Result<&mut Self> {
        let (gi, fi, hi) = (self.mor(g)?, self.mor(f)?, self.mor(h)?);
        if self.ends[fi].1 != self.ends[gi].0 {
            return Err(Error::NotComposable(format!("{g} ∘ {f}")));
        }
        self.compose.insert((gi, fi), hi);
        Ok(self)
    }

    /// Records `f ⊗ g = h`.
    pub fn tensor(&mut self, f: &str, g: &str, h: &str) -> Result<&mut Self> {
        let key = (self.mor(f)?, self.mor(g)?);
        let hi = self.mor(h)?;
        self.tensor.insert(key, hi);
        Ok(self)
    }

    pub fn symmetry(&mut self, c1: &str, c2: &str, m: &str) -> Result<&mut Self> {
        let key = (self.object(c1)?, self.object(c2)?);
        let mi = self.mor(m)?;
        self.symmetry.insert(key, mi);
        Ok(self)
    }

    pub fn build(&self) -> Result<TableCat> {
        let n_obj = self.objects.as_finite().expect("finite").order();
        let n = self.names.len();
        let identities = (0..n_obj)
            .map(|c| {
                self.identities.get(&c).copied().ok_or_else(|| {
                    Error::InvalidCategory(format!(
                        "no identity for {}",
                        self.objects.show(&Element::Finite(c))
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut tensor = vec![vec![0; n]; n];
        for (f, row) in tensor.iter_mut().enumerate() {
            for (g, cell) in row.iter_mut().enumerate() {
                *cell = *self.tensor.get(&(f, g)).ok_or_else(|| {
                    Error::InvalidCategory(format!(
                        "no tensor entry for {} ⊗ {}",
                        self.names[f], self.names[g]
                    ))
                })?;
            }
        }
        let mut symmetry = vec![vec![0; n_obj]; n_obj];
        for (a, row) in symmetry.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = *self.symmetry.get(&(a, b)).ok_or_else(|| {
                    Error::InvalidCategory(format!("no symmetry entry for ({a}, {b})"))
                })?;
            }
        }
        Ok(TableCat {
            objects: self.objects.clone(),
            names: self.names.clone(),
            ends: self.ends.clone(),
            identities,
            compose: self.compose.clone(),
            tensor,
            symmetry,
        })
    }
}
