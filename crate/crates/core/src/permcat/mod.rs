//! Permutative categories with decidable, finite hom-sets.
//!
//! A [`PermCat`] is an object monoid together with one of a few concrete
//! morphism representations. Tensor on objects is the monoid product; all
//! other structure (composition, tensor on morphisms, symmetry) is computed
//! by the representation.

pub mod controls;
mod table;
mod validate;

pub use table::{TableCat, TableCatBuilder};
pub use validate::{validate, LAWS};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gabriel::Induced;
use crate::monoid::{Element, Monoid, MonoidHom, Side};
use crate::rule::ObjectMap;

/// Representation-specific label of a morphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Payload {
    /// The only morphism of its hom-set (discrete identities, chaotic arrows).
    Point,
    /// Element index of the automorphism group of a delooping.
    Group(usize),
    /// Morphism index of a table category.
    Table(usize),
    /// A morphism of the base category of an induced category.
    Lifted(Box<Morphism>),
}

/// A morphism: source object, target object and payload.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Morphism {
    pub source: Element,
    pub target: Element,
    pub payload: Payload,
}

impl Morphism {
    pub fn new(source: Element, target: Element, payload: Payload) -> Self {
        Morphism {
            source,
            target,
            payload,
        }
    }

    pub fn lifted(source: Element, target: Element, base: Morphism) -> Self {
        Morphism::new(source, target, Payload::Lifted(Box::new(base)))
    }

    /// The base morphism of a lifted payload.
    pub fn base(&self) -> Result<&Morphism> {
        match &self.payload {
            Payload::Lifted(b) => Ok(b),
            _ => Err(Error::ForeignMorphism(format!("{self:?} is not lifted"))),
        }
    }
}

#[derive(Clone, Debug)]
pub enum CatKind {
    Discrete,
    Chaotic,
    /// One-object-per-hom delooping: `hom(c, c) = H`, empty otherwise.
    Deloop { group: Monoid },
    Table(TableCat),
    Induced(Induced),
}

/// A permutative category.
#[derive(Clone, Debug)]
pub struct PermCat {
    objects: Monoid,
    kind: CatKind,
}

pub type CatRef = Arc<PermCat>;

/// Which standard family to build with [`standard_category`].
#[derive(Clone, Debug)]
pub enum Standard {
    Discrete(Monoid),
    Chaotic(Monoid),
    Deloop(Monoid, Monoid),
}

/// Depth at which commutativity of infinite object monoids is probed.
const COMMUTATIVITY_DEPTH: usize = 3;

pub fn standard_category(kind: Standard) -> Result<PermCat> {
    match kind {
        Standard::Discrete(m) => PermCat::discrete(m),
        Standard::Chaotic(m) => Ok(PermCat::chaotic(m)),
        Standard::Deloop(m, h) => PermCat::deloop(m, h),
    }
}

impl PermCat {
    pub fn discrete(objects: Monoid) -> Result<Self> {
        if !objects.is_commutative(COMMUTATIVITY_DEPTH) {
            return Err(Error::InvalidCategory(format!(
                "discrete category needs a commutative object monoid, got {objects}"
            )));
        }
        Ok(PermCat {
            objects,
            kind: CatKind::Discrete,
        })
    }

    pub fn chaotic(objects: Monoid) -> Self {
        PermCat {
            objects,
            kind: CatKind::Chaotic,
        }
    }

    pub fn deloop(objects: Monoid, group: Monoid) -> Result<Self> {
        if !objects.is_commutative(COMMUTATIVITY_DEPTH) {
            return Err(Error::InvalidCategory(format!(
                "delooping needs a commutative object monoid, got {objects}"
            )));
        }
        if !group.is_group() || !group.is_commutative(0) {
            return Err(Error::InvalidCategory(format!(
                "{group} is not a finite abelian group"
            )));
        }
        Ok(PermCat {
            objects,
            kind: CatKind::Deloop { group },
        })
    }

    pub fn table(table: TableCat) -> Self {
        PermCat {
            objects: table.objects().clone(),
            kind: CatKind::Table(table),
        }
    }

    pub fn induced(objects: Monoid, induced: Induced) -> Self {
        PermCat {
            objects,
            kind: CatKind::Induced(induced),
        }
    }

    /// The terminal permutative category `𝟙`.
    pub fn terminal() -> Self {
        PermCat::discrete(Monoid::trivial()).expect("terminal")
    }

    pub fn objects(&self) -> &Monoid {
        &self.objects
    }

    pub fn kind(&self) -> &CatKind {
        &self.kind
    }

    pub fn family(&self) -> &'static str {
        match self.kind {
            CatKind::Discrete => "discrete",
            CatKind::Chaotic => "chaotic",
            CatKind::Deloop { .. } => "deloop",
            CatKind::Table(_) => "table",
            CatKind::Induced(_) => "induced",
        }
    }

    fn check_object(&self, c: &Element) -> Result<()> {
        self.objects.check(c)
    }

    pub fn tensor_obj(&self, c1: &Element, c2: &Element) -> Result<Element> {
        self.objects.multiply(c1, c2)
    }

    /// The finite hom-set `hom(c1, c2)`, in a fixed order.
    pub fn hom(&self, c1: &Element, c2: &Element) -> Result<Vec<Morphism>> {
        self.check_object(c1)?;
        self.check_object(c2)?;
        let mk = |p| Morphism::new(c1.clone(), c2.clone(), p);
        Ok(match &self.kind {
            CatKind::Discrete => {
                if c1 == c2 {
                    vec![mk(Payload::Point)]
                } else {
                    vec![]
                }
            }
            CatKind::Chaotic => vec![mk(Payload::Point)],
            CatKind::Deloop { group } => {
                if c1 == c2 {
                    let n = group.as_finite().expect("finite group").order();
                    (0..n).map(|i| mk(Payload::Group(i))).collect()
                } else {
                    vec![]
                }
            }
            CatKind::Table(t) => t.hom(c1, c2),
            CatKind::Induced(ind) => ind.hom(c1, c2)?,
        })
    }

    /// Every morphism between objects of `enumerate(objects, depth)`.
    pub fn morphisms(&self, depth: usize) -> Result<Vec<Morphism>> {
        let objs = self.objects.enumerate(depth);
        let mut out = Vec::new();
        for a in &objs {
            for b in &objs {
                out.extend(self.hom(a, b)?);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, f: &Morphism) -> bool {
        if !self.objects.contains(&f.source) || !self.objects.contains(&f.target) {
            return false;
        }
        match (&self.kind, &f.payload) {
            (CatKind::Discrete, Payload::Point) => f.source == f.target,
            (CatKind::Chaotic, Payload::Point) => true,
            (CatKind::Deloop { group }, Payload::Group(i)) => {
                f.source == f.target && *i < group.as_finite().expect("finite").order()
            }
            (CatKind::Table(t), Payload::Table(_)) => t.contains(f),
            (CatKind::Induced(ind), Payload::Lifted(_)) => ind.contains(f),
            _ => false,
        }
    }

    fn check_mor(&self, f: &Morphism) -> Result<()> {
        if self.contains(f) {
            Ok(())
        } else {
            Err(Error::ForeignMorphism(self.show_mor(f)))
        }
    }

    pub fn identity(&self, c: &Element) -> Result<Morphism> {
        self.check_object(c)?;
        let mk = |p| Morphism::new(c.clone(), c.clone(), p);
        Ok(match &self.kind {
            CatKind::Discrete | CatKind::Chaotic => mk(Payload::Point),
            CatKind::Deloop { group } => {
                let Element::Finite(u) = group.unit() else { unreachable!() };
                mk(Payload::Group(u))
            }
            CatKind::Table(t) => t.identity(c),
            CatKind::Induced(ind) => ind.identity(c)?,
        })
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        self.check_mor(f)?;
        self.check_mor(g)?;
        if f.target != g.source {
            return Err(Error::NotComposable(format!(
                "{} then {}",
                self.show_mor(f),
                self.show_mor(g)
            )));
        }
        let mk = |p| Morphism::new(f.source.clone(), g.target.clone(), p);
        match (&self.kind, &g.payload, &f.payload) {
            (CatKind::Discrete | CatKind::Chaotic, _, _) => Ok(mk(Payload::Point)),
            (CatKind::Deloop { group }, Payload::Group(a), Payload::Group(b)) => {
                let Element::Finite(c) =
                    group.mul_unchecked(&Element::Finite(*a), &Element::Finite(*b))
                else {
                    unreachable!()
                };
                Ok(mk(Payload::Group(c)))
            }
            (CatKind::Table(t), _, _) => t.compose(g, f),
            (CatKind::Induced(ind), _, _) => ind.compose(g, f),
            _ => Err(Error::ForeignMorphism(self.show_mor(f))),
        }
    }

    /// `f ⊗ g`.
    pub fn tensor_mor(&self, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        self.check_mor(f)?;
        self.check_mor(g)?;
        let s = self.objects.mul_unchecked(&f.source, &g.source);
        let t = self.objects.mul_unchecked(&f.target, &g.target);
        match (&self.kind, &f.payload, &g.payload) {
            (CatKind::Discrete | CatKind::Chaotic, _, _) => Ok(Morphism::new(s, t, Payload::Point)),
            (CatKind::Deloop { group }, Payload::Group(a), Payload::Group(b)) => {
                let Element::Finite(c) =
                    group.mul_unchecked(&Element::Finite(*a), &Element::Finite(*b))
                else {
                    unreachable!()
                };
                Ok(Morphism::new(s, t, Payload::Group(c)))
            }
            (CatKind::Table(t), _, _) => t.tensor(f, g),
            (CatKind::Induced(ind), _, _) => ind.tensor(&self.objects, f, g),
            _ => Err(Error::ForeignMorphism(self.show_mor(f))),
        }
    }

    /// The symmetry `γ(c1, c2) : c1 ⊗ c2 -> c2 ⊗ c1`.
    pub fn symmetry(&self, c1: &Element, c2: &Element) -> Result<Morphism> {
        self.check_object(c1)?;
        self.check_object(c2)?;
        let s = self.objects.mul_unchecked(c1, c2);
        let t = self.objects.mul_unchecked(c2, c1);
        match &self.kind {
            CatKind::Discrete | CatKind::Chaotic => Ok(Morphism::new(s, t, Payload::Point)),
            CatKind::Deloop { .. } => self.identity(&s),
            CatKind::Table(tab) => tab.symmetry(c1, c2),
            CatKind::Induced(ind) => ind.symmetry(&self.objects, c1, c2),
        }
    }

    /// Two-sided inverse of `f`, if it exists.
    pub fn inverse(&self, f: &Morphism) -> Result<Morphism> {
        self.check_mor(f)?;
        let mk = |p| Morphism::new(f.target.clone(), f.source.clone(), p);
        match (&self.kind, &f.payload) {
            (CatKind::Discrete | CatKind::Chaotic, _) => Ok(mk(Payload::Point)),
            (CatKind::Deloop { group }, Payload::Group(a)) => {
                let Some(Element::Finite(b)) = group.inverse(&Element::Finite(*a)) else {
                    return Err(Error::NotInvertible(self.show_mor(f)));
                };
                Ok(mk(Payload::Group(b)))
            }
            (CatKind::Induced(ind), _) => ind.inverse(f),
            _ => self
                .hom(&f.target, &f.source)?
                .into_iter()
                .find(|g| {
                    self.compose(g, f).ok() == self.identity(&f.source).ok()
                        && self.compose(f, g).ok() == self.identity(&f.target).ok()
                })
                .ok_or_else(|| Error::NotInvertible(self.show_mor(f))),
        }
    }

    pub fn is_iso(&self, f: &Morphism) -> bool {
        self.inverse(f).is_ok()
    }

    /// Composite of a chain given in diagrammatic order (`fs[0]` first).
    pub fn compose_path(&self, fs: &[&Morphism]) -> Result<Morphism> {
        let (first, rest) = fs
            .split_first()
            .ok_or_else(|| Error::NotComposable("empty path".into()))?;
        let mut acc = (*first).clone();
        for g in rest {
            acc = self.compose(g, &acc)?;
        }
        Ok(acc)
    }

    /// Tensor of a sequence of morphisms, left to right; the identity of the
    /// unit object for an empty sequence.
    pub fn tensor_all(&self, fs: &[Morphism]) -> Result<Morphism> {
        let mut acc = self.identity(&self.objects.unit())?;
        for f in fs {
            acc = self.tensor_mor(&acc, f)?;
        }
        Ok(acc)
    }

    /// Human-readable rendering of a morphism.
    pub fn show_mor(&self, f: &Morphism) -> String {
        format!(
            "{}: {} -> {}",
            self.show_payload(f),
            self.objects.show(&f.source),
            self.objects.show(&f.target)
        )
    }

    pub fn show_payload(&self, f: &Morphism) -> String {
        match (&self.kind, &f.payload) {
            (_, Payload::Point) => "•".to_string(),
            (CatKind::Deloop { group }, Payload::Group(i)) => group.show(&Element::Finite(*i)),
            (CatKind::Table(t), Payload::Table(i)) => t.name(*i).to_string(),
            (CatKind::Induced(ind), Payload::Lifted(b)) => format!("[{}]", ind.base.show_mor(b)),
            (_, p) => format!("{p:?}"),
        }
    }
}

impl fmt::Display for PermCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CatKind::Deloop { group } => write!(f, "Deloop({}, {})", self.objects, group),
            CatKind::Induced(ind) => write!(f, "Induced({} over {})", self.objects, ind.base),
            _ => write!(f, "{}({})", self.family(), self.objects),
        }
    }
}

/// Which objects a full subcategory keeps.
#[derive(Clone, Copy, Debug)]
pub enum SubMonoid {
    Whole,
    Unit,
    /// One factor of a coproduct object monoid.
    Factor(Side),
}

/// Full permutative subcategory on a submonoid of objects. Factors of a
/// coproduct are realized as the induced category along the inclusion.
pub fn full_subcategory(c: &CatRef, v: SubMonoid) -> Result<PermCat> {
    let (objects, incl) = match v {
        SubMonoid::Whole => return Ok((**c).clone()),
        SubMonoid::Unit => {
            let t = Monoid::trivial();
            let h = MonoidHom::trivial(&t, c.objects());
            (t, h)
        }
        SubMonoid::Factor(side) => {
            let h = MonoidHom::inclusion(c.objects(), side).map_err(|_| {
                Error::InvalidCategory(format!(
                    "{} is not a coproduct, so a factor is not closed under ⊗",
                    c.objects()
                ))
            })?;
            (h.domain().clone(), h)
        }
    };
    Ok(PermCat::induced(
        objects,
        Induced::strict(c.clone(), ObjectMap::Hom(incl)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::{z2, zn};

    #[test]
    fn standard_examples() {
        let one = standard_category(Standard::Discrete(Monoid::trivial())).unwrap();
        let e = one.objects().unit();
        assert_eq!(one.hom(&e, &e).unwrap().len(), 1);

        let ch = standard_category(Standard::Chaotic(z2())).unwrap();
        assert_eq!(ch.hom(&Element::Finite(0), &Element::Finite(1)).unwrap().len(), 1);

        let d = standard_category(Standard::Deloop(Monoid::trivial(), zn(3))).unwrap();
        let e = d.objects().unit();
        let homs = d.hom(&e, &e).unwrap();
        assert_eq!(homs.len(), 3);
        let t = d.tensor_mor(&homs[1], &homs[1]).unwrap();
        assert_eq!(t.payload, Payload::Group(2));
        assert_eq!(d.compose(&homs[2], &homs[2]).unwrap().payload, Payload::Group(1));
    }

    #[test]
    fn standard_errors() {
        let xy = Monoid::free(&["x", "y"]).unwrap();
        assert!(PermCat::discrete(xy.clone()).is_err());
        assert!(PermCat::deloop(xy, zn(2)).is_err());
        assert!(PermCat::deloop(Monoid::trivial(), crate::monoid::catalog::idempotent()).is_err());
        // chaotic accepts any monoid
        let _ = PermCat::chaotic(Monoid::free(&["x", "y"]).unwrap());
    }

    #[test]
    fn compose_examples() {
        let d = PermCat::deloop(Monoid::trivial(), zn(3)).unwrap();
        let e = d.objects().unit();
        let f = d.hom(&e, &e).unwrap()[1].clone();
        assert_eq!(d.compose(&d.identity(&e).unwrap(), &f).unwrap(), f);

        let disc = PermCat::discrete(z2()).unwrap();
        let a = Element::Finite(1);
        assert_eq!(disc.symmetry(&a, &a).unwrap(), disc.identity(&Element::Finite(0)).unwrap());

        let ch = PermCat::chaotic(z2());
        let f = ch.hom(&Element::Finite(0), &Element::Finite(1)).unwrap()[0].clone();
        let g = ch.hom(&Element::Finite(0), &Element::Finite(0)).unwrap()[0].clone();
        assert!(matches!(ch.compose(&g, &f), Err(Error::NotComposable(_))));
        let foreign = Morphism::new(Element::Finite(0), Element::Finite(0), Payload::Group(0));
        assert!(matches!(ch.compose(&foreign, &g), Err(Error::ForeignMorphism(_))));
    }

    #[test]
    fn full_subcategory_examples() {
        let c: CatRef = Arc::new(PermCat::deloop(z2(), zn(3)).unwrap());
        let unit_sub = full_subcategory(&c, SubMonoid::Unit).unwrap();
        let e = unit_sub.objects().unit();
        assert_eq!(unit_sub.hom(&e, &e).unwrap().len(), 3);

        let v = Monoid::free(&["v"]).unwrap();
        let ch: CatRef = Arc::new(PermCat::chaotic(Monoid::coproduct_of(z2(), v)));
        let sub = full_subcategory(&ch, SubMonoid::Factor(Side::Right)).unwrap();
        let hom = sub
            .hom(&Element::word(&["v"]), &Element::word(&["v", "v"]))
            .unwrap();
        assert_eq!(hom.len(), 1);

        let dv: CatRef = Arc::new(PermCat::discrete(Monoid::free(&["v"]).unwrap()).unwrap());
        let whole = full_subcategory(&dv, SubMonoid::Whole).unwrap();
        assert_eq!(whole.family(), "discrete");
        assert!(full_subcategory(&dv, SubMonoid::Factor(Side::Left)).is_err());
    }
}
