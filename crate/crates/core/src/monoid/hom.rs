use std::collections::BTreeMap;

use super::{Element, Monoid, MonoidKind, Side, Symbol};
use crate::error::{Error, Result};

/// How a homomorphism assigns images.
#[derive(Clone, Debug, PartialEq)]
pub enum HomMap {
    Identity,
    /// Everything goes to the unit.
    Trivial,
    /// Coproduct inclusion into the codomain's `side` factor.
    Inclusion(Side),
    /// Total map on the elements of a finite domain.
    Table(Vec<Element>),
    /// Images of the generators of a free domain.
    Generators(BTreeMap<Symbol, Element>),
    /// Component homs out of the two factors of a coproduct domain.
    Pair(Box<MonoidHom>, Box<MonoidHom>),
    /// `outer ∘ inner`.
    Composite(Box<MonoidHom>, Box<MonoidHom>),
}

/// A monoid homomorphism between finitely presented monoids.
#[derive(Clone, Debug, PartialEq)]
pub struct MonoidHom {
    domain: Monoid,
    codomain: Monoid,
    map: HomMap,
}

impl MonoidHom {
    pub fn domain(&self) -> &Monoid {
        &self.domain
    }

    pub fn codomain(&self) -> &Monoid {
        &self.codomain
    }

    pub fn map(&self) -> &HomMap {
        &self.map
    }

    pub fn identity(m: &Monoid) -> Self {
        MonoidHom {
            domain: m.clone(),
            codomain: m.clone(),
            map: HomMap::Identity,
        }
    }

    pub fn trivial(domain: &Monoid, codomain: &Monoid) -> Self {
        MonoidHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map: HomMap::Trivial,
        }
    }

    /// Inclusion of one factor of `coproduct` into it.
    pub fn inclusion(coproduct: &Monoid, side: Side) -> Result<Self> {
        let factor = coproduct
            .factor(side)
            .ok_or_else(|| Error::InvalidHom(format!("{coproduct} is not a coproduct")))?;
        Ok(MonoidHom {
            domain: factor.clone(),
            codomain: coproduct.clone(),
            map: HomMap::Inclusion(side),
        })
    }

    /// Hom out of a finite monoid given by the image of every element.
    /// Unit preservation and multiplicativity are checked exhaustively.
    pub fn from_table(domain: &Monoid, codomain: &Monoid, images: Vec<Element>) -> Result<Self> {
        let f = domain
            .as_finite()
            .ok_or_else(|| Error::InvalidHom(format!("{domain} is not finite")))?;
        if images.len() != f.order() {
            return Err(Error::InvalidHom("table must list every element".into()));
        }
        for y in &images {
            codomain.check(y)?;
        }
        let h = MonoidHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map: HomMap::Table(images),
        };
        h.check_multiplicative(0)?;
        Ok(h)
    }

    /// Hom out of a free monoid given by generator images.
    pub fn from_generators(
        domain: &Monoid,
        codomain: &Monoid,
        images: BTreeMap<Symbol, Element>,
    ) -> Result<Self> {
        let MonoidKind::Free { generators } = domain.kind() else {
            return Err(Error::InvalidHom(format!("{domain} is not free")));
        };
        for g in generators {
            let y = images
                .get(g)
                .ok_or_else(|| Error::InvalidHom(format!("no image for generator {g}")))?;
            codomain.check(y)?;
        }
        if let Some(extra) = images.keys().find(|k| !generators.contains(k)) {
            return Err(Error::InvalidHom(format!("`{extra}` is not a generator")));
        }
        Ok(MonoidHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map: HomMap::Generators(images),
        })
    }

    /// Hom out of a coproduct from its two components.
    pub fn pair(domain: &Monoid, left: MonoidHom, right: MonoidHom) -> Result<Self> {
        let (l, r) = domain
            .factors()
            .ok_or_else(|| Error::InvalidHom(format!("{domain} is not a coproduct")))?;
        if left.domain != *l || right.domain != *r {
            return Err(Error::InvalidHom("component domains do not match factors".into()));
        }
        if left.codomain != right.codomain {
            return Err(Error::CodomainMismatch(format!(
                "{} vs {}",
                left.codomain, right.codomain
            )));
        }
        Ok(MonoidHom {
            domain: domain.clone(),
            codomain: left.codomain.clone(),
            map: HomMap::Pair(Box::new(left), Box::new(right)),
        })
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &MonoidHom) -> Result<Self> {
        if inner.codomain != self.domain {
            return Err(Error::CodomainMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.domain, self.codomain, inner.domain, inner.codomain
            )));
        }
        Ok(MonoidHom {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            map: HomMap::Composite(Box::new(self.clone()), Box::new(inner.clone())),
        })
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.domain.check(x)?;
        self.eval(x)
    }

    fn eval(&self, x: &Element) -> Result<Element> {
        match (&self.map, x) {
            (HomMap::Identity, _) => Ok(x.clone()),
            (HomMap::Trivial, _) => Ok(self.codomain.unit()),
            (HomMap::Inclusion(side), _) => self.codomain.inject(*side, x),
            (HomMap::Table(images), Element::Finite(i)) => Ok(images[*i].clone()),
            (HomMap::Generators(images), Element::Word(w)) => {
                let mut acc = self.codomain.unit();
                for g in w {
                    acc = self.codomain.mul_unchecked(&acc, &images[g]);
                }
                Ok(acc)
            }
            (HomMap::Pair(l, r), Element::Alt(letters)) => {
                let mut acc = self.codomain.unit();
                for letter in letters {
                    let h = if letter.side == Side::Left { l } else { r };
                    acc = self.codomain.mul_unchecked(&acc, &h.eval(&letter.elem)?);
                }
                Ok(acc)
            }
            (HomMap::Composite(outer, inner), _) => outer.eval(&inner.eval(x)?),
            _ => Err(Error::InvalidHom(format!(
                "assignment does not fit element {x:?}"
            ))),
        }
    }

    /// Checks unit preservation and multiplicativity on all pairs of
    /// `domain.enumerate(depth)`.
    pub fn check_multiplicative(&self, depth: usize) -> Result<()> {
        if !self.codomain.is_unit(&self.apply(&self.domain.unit())?) {
            return Err(Error::InvalidHom("unit is not preserved".into()));
        }
        let els = self.domain.enumerate(depth);
        let images: Vec<Element> = els.iter().map(|x| self.eval(x)).collect::<Result<_>>()?;
        for (i, x) in els.iter().enumerate() {
            for (j, y) in els.iter().enumerate() {
                let xy = self.domain.mul_unchecked(x, y);
                let lhs = self.eval(&xy)?;
                let rhs = self.codomain.mul_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::InvalidHom(format!(
                        "h({}·{}) != h({})·h({})",
                        self.domain.show(x),
                        self.domain.show(y),
                        self.domain.show(x),
                        self.domain.show(y)
                    )));
                }
            }
        }
        Ok(())
    }

    /// An equivalent hom whose assignment is a table, generator map or pair,
    /// according to the shape of the domain.
    pub fn canonical(&self) -> Result<Self> {
        let map = match self.domain.kind() {
            MonoidKind::Finite(f) => HomMap::Table(
                (0..f.order())
                    .map(|i| self.eval(&Element::Finite(i)))
                    .collect::<Result<_>>()?,
            ),
            MonoidKind::Free { generators } => HomMap::Generators(
                generators
                    .iter()
                    .map(|g| Ok((g.clone(), self.eval(&Element::Word(vec![g.clone()]))?)))
                    .collect::<Result<_>>()?,
            ),
            MonoidKind::Coproduct { .. } => {
                let (l, r) = self.components()?;
                HomMap::Pair(Box::new(l.canonical()?), Box::new(r.canonical()?))
            }
        };
        Ok(MonoidHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            map,
        })
    }

    /// Restrictions along the two coproduct inclusions.
    pub fn components(&self) -> Result<(MonoidHom, MonoidHom)> {
        if let HomMap::Pair(l, r) = &self.map {
            return Ok(((**l).clone(), (**r).clone()));
        }
        let il = MonoidHom::inclusion(&self.domain, Side::Left)?;
        let ir = MonoidHom::inclusion(&self.domain, Side::Right)?;
        Ok((self.after(&il)?, self.after(&ir)?))
    }

    /// Equality of the two homs on `domain.enumerate(depth)`.
    pub fn agrees_with(&self, other: &MonoidHom, depth: usize) -> Result<bool> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Ok(false);
        }
        for x in self.domain.enumerate(depth) {
            if self.eval(&x)? != other.eval(&x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The counit `F_m(U M) -> M` of the free-monoid reflection, for a finite
/// `m`: the free monoid on the element names, each letter evaluated in `m`.
pub fn counit(m: &Monoid) -> Result<MonoidHom> {
    let f = m
        .as_finite()
        .ok_or_else(|| Error::InvalidMonoid(format!("{m} is not finite")))?;
    let elements: Vec<Element> = (0..f.order()).map(Element::Finite).collect();
    counit_over(m, &elements)
}

/// Counit restricted to the given elements of `m`: the free monoid on their
/// rendered names, each generator sent to the element it names.
pub fn counit_over(m: &Monoid, elements: &[Element]) -> Result<MonoidHom> {
    let names: Vec<String> = elements.iter().map(|x| m.show(x)).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let free = Monoid::free(&refs)?;
    let mut images = BTreeMap::new();
    for (name, x) in names.iter().zip(elements) {
        m.check(x)?;
        images.insert(super::sym(name), x.clone());
    }
    MonoidHom::from_generators(&free, m, images)
}

/// The hom `f ∨ g : M ∨ N -> Q` induced by `f : M -> Q` and `g : N -> Q`.
pub fn codiagonal(f: &MonoidHom, g: &MonoidHom) -> Result<MonoidHom> {
    if f.codomain() != g.codomain() {
        return Err(Error::CodomainMismatch(format!(
            "{} vs {}",
            f.codomain(),
            g.codomain()
        )));
    }
    let domain = Monoid::coproduct_of(f.domain().clone(), g.domain().clone());
    MonoidHom::pair(&domain, f.clone(), g.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::z2;
    use crate::monoid::{coproduct, Letter};

    fn fold_z2(letters: &[usize]) -> Element {
        Element::Finite(letters.iter().fold(0, |acc, x| (acc + x) % 2))
    }

    #[test]
    fn counit_examples() {
        let eps = counit(&z2()).unwrap();
        assert_eq!(eps.apply(&Element::word(&[])).unwrap(), Element::Finite(0));
        assert_eq!(
            eps.apply(&Element::word(&["a", "a", "a"])).unwrap(),
            fold_z2(&[1, 1, 1])
        );
        assert_eq!(eps.apply(&Element::word(&["e", "a"])).unwrap(), fold_z2(&[0, 1]));
        assert!(eps.check_multiplicative(3).is_ok());
    }

    #[test]
    fn codiagonal_examples() {
        let t = Monoid::trivial();
        let id = MonoidHom::identity(&t);
        let d = codiagonal(&id, &id).unwrap();
        for x in d.domain().enumerate(3) {
            assert!(t.is_unit(&d.apply(&x).unwrap()));
        }

        let eps = counit(&z2()).unwrap();
        let p = codiagonal(&MonoidHom::identity(&z2()), &eps).unwrap();
        let word = p
            .domain()
            .normalize(vec![
                Letter::new(Side::Left, Element::Finite(1)),
                Letter::new(Side::Right, Element::word(&["a"])),
                Letter::new(Side::Left, Element::Finite(1)),
            ])
            .unwrap();
        assert_eq!(p.apply(&word).unwrap(), fold_z2(&[1, 1, 1]));
        assert_eq!(p.apply(&p.domain().unit()).unwrap(), Element::Finite(0));

        let bad = MonoidHom::identity(&Monoid::trivial());
        assert!(matches!(
            codiagonal(&bad, &eps),
            Err(Error::CodomainMismatch(_))
        ));
    }

    #[test]
    fn codiagonal_triangles() {
        let s = Monoid::free(&["s", "t"]).unwrap();
        let f = MonoidHom::identity(&z2());
        let mut images = BTreeMap::new();
        images.insert(crate::monoid::sym("s"), Element::Finite(1));
        images.insert(crate::monoid::sym("t"), Element::Finite(0));
        let g = MonoidHom::from_generators(&s, &z2(), images).unwrap();
        let d = codiagonal(&f, &g).unwrap();
        let (_, il, ir) = coproduct(&z2(), &s);
        assert!(d.after(&il).unwrap().agrees_with(&f, 3).unwrap());
        assert!(d.after(&ir).unwrap().agrees_with(&g, 3).unwrap());
        assert!(d.check_multiplicative(3).is_ok());
    }

    #[test]
    fn from_table_rejects_non_homs() {
        let err = MonoidHom::from_table(&z2(), &z2(), vec![Element::Finite(1), Element::Finite(1)]);
        assert!(err.is_err());
    }

    #[test]
    fn canonical_form_agrees() {
        let (m, il, _) = coproduct(&z2(), &Monoid::free(&["s"]).unwrap());
        let h = MonoidHom::identity(&m).after(&il).unwrap();
        assert!(h.canonical().unwrap().agrees_with(&h, 3).unwrap());
        let id = MonoidHom::identity(&m);
        let c = id.canonical().unwrap();
        assert!(matches!(c.map(), HomMap::Pair(..)));
        assert!(c.agrees_with(&id, 3).unwrap());
    }
}
