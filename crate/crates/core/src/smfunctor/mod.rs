//! Strict and unital symmetric monoidal functors and monoidal natural
//! transformations between them.

mod equivalence;
mod section;
mod transport;
mod validate;

pub use equivalence::{check_equivalence, is_acyclic_fibration, Equivalence, Verdict};
pub use section::{check_section, find_section, SectionDatum, SECTION_LAWS};
pub use transport::{transport_functor, transport_lambda};
pub use validate::{validate_functor, validate_nat_trans, FUNCTOR_LAWS, NAT_TRANS_LAWS};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monoid::{Element, MonoidHom};
use crate::permcat::{CatRef, Morphism};
use crate::rule::{ComponentFn, MorFn, ObjectMap, PairFn};

/// A unital symmetric monoidal functor. `lambda(c1, c2)` runs from
/// `F(c1 ⊗ c2)` to `F c1 ⊗ F c2`; `None` stands for the identity family.
#[derive(Clone)]
pub struct SmFunctor {
    pub domain: CatRef,
    pub codomain: CatRef,
    pub objects: ObjectMap,
    pub morphisms: MorFn,
    pub lambda: Option<PairFn>,
}

impl fmt::Debug for SmFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmFunctor({} -> {})", self.domain, self.codomain)
    }
}

impl SmFunctor {
    pub fn new(
        domain: CatRef,
        codomain: CatRef,
        objects: ObjectMap,
        morphisms: MorFn,
        lambda: Option<PairFn>,
    ) -> Self {
        SmFunctor {
            domain,
            codomain,
            objects,
            morphisms,
            lambda,
        }
    }

    /// A strict functor given by an object hom and a morphism rule.
    pub fn strict(
        domain: CatRef,
        codomain: CatRef,
        objects: MonoidHom,
        morphisms: impl Fn(&Morphism) -> Result<Morphism> + Send + Sync + 'static,
    ) -> Self {
        SmFunctor::new(domain, codomain, ObjectMap::Hom(objects), Arc::new(morphisms), None)
    }

    pub fn identity(c: &CatRef) -> Self {
        SmFunctor::new(
            c.clone(),
            c.clone(),
            ObjectMap::Hom(MonoidHom::identity(c.objects())),
            Arc::new(|f: &Morphism| Ok(f.clone())),
            None,
        )
    }

    pub fn obj(&self, x: &Element) -> Result<Element> {
        self.objects.apply(x)
    }

    pub fn mor(&self, f: &Morphism) -> Result<Morphism> {
        (self.morphisms)(f)
    }

    pub fn lambda_at(&self, c1: &Element, c2: &Element) -> Result<Morphism> {
        match &self.lambda {
            Some(l) => l(c1, c2),
            None => {
                let c = self.domain.tensor_obj(c1, c2)?;
                self.codomain.identity(&self.obj(&c)?)
            }
        }
    }

    /// `self ∘ inner`, with `λ(c1, c2) = λ_self(F c1, F c2) ∘ self(λ_inner(c1, c2))`.
    pub fn after(&self, inner: &SmFunctor) -> Result<SmFunctor> {
        if inner.codomain.objects() != self.domain.objects() {
            return Err(Error::InvalidFunctor(format!(
                "cannot compose {self:?} after {inner:?}"
            )));
        }
        let objects = match (&self.objects, &inner.objects) {
            (ObjectMap::Hom(g), ObjectMap::Hom(f)) => ObjectMap::Hom(g.after(f)?),
            _ => {
                let (g, f) = (self.clone(), inner.clone());
                ObjectMap::rule(move |x| g.obj(&f.obj(x)?))
            }
        };
        let (g, f) = (self.clone(), inner.clone());
        let morphisms: MorFn = Arc::new(move |m| g.mor(&f.mor(m)?));
        let lambda: Option<PairFn> = if self.lambda.is_none() && inner.lambda.is_none() {
            None
        } else {
            let (g, f) = (self.clone(), inner.clone());
            Some(Arc::new(move |c1, c2| {
                let outer = g.lambda_at(&f.obj(c1)?, &f.obj(c2)?)?;
                let mapped = g.mor(&f.lambda_at(c1, c2)?)?;
                g.codomain.compose(&outer, &mapped)
            }))
        };
        Ok(SmFunctor::new(
            inner.domain.clone(),
            self.codomain.clone(),
            objects,
            morphisms,
            lambda,
        ))
    }

    /// The same functor with the image of `at` replaced by `image`.
    pub fn perturbed(&self, at: Morphism, image: Morphism) -> SmFunctor {
        let base = self.morphisms.clone();
        let mut out = self.clone();
        out.morphisms = Arc::new(move |m| if *m == at { Ok(image.clone()) } else { base(m) });
        out
    }

    /// Whether the object map is multiplicative and every `λ` component is an
    /// identity, on enumerated objects.
    pub fn is_strict(&self, depth: usize) -> bool {
        let objs = self.domain.objects().enumerate(depth);
        for a in &objs {
            for b in &objs {
                let ok = (|| -> Result<bool> {
                    let ab = self.domain.tensor_obj(a, b)?;
                    let fab = self.obj(&ab)?;
                    let prod = self.codomain.tensor_obj(&self.obj(a)?, &self.obj(b)?)?;
                    Ok(fab == prod && self.lambda_at(a, b)? == self.codomain.identity(&fab)?)
                })();
                if !matches!(ok, Ok(true)) {
                    return false;
                }
            }
        }
        true
    }
}

/// A monoidal natural transformation `source ⇒ target` with components
/// `α(c) : source(c) -> target(c)`.
#[derive(Clone)]
pub struct MonoidalNatTrans {
    pub source: SmFunctor,
    pub target: SmFunctor,
    pub components: ComponentFn,
}

impl fmt::Debug for MonoidalNatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonoidalNatTrans({:?} => {:?})", self.source, self.target)
    }
}

impl MonoidalNatTrans {
    pub fn new(source: SmFunctor, target: SmFunctor, components: ComponentFn) -> Self {
        MonoidalNatTrans {
            source,
            target,
            components,
        }
    }

    pub fn identity(f: &SmFunctor) -> Self {
        let g = f.clone();
        MonoidalNatTrans::new(
            f.clone(),
            f.clone(),
            Arc::new(move |c| g.codomain.identity(&g.obj(c)?)),
        )
    }

    pub fn at(&self, c: &Element) -> Result<Morphism> {
        (self.components)(c)
    }

    /// The same transformation with the component at `c` replaced.
    pub fn perturbed(&self, c: Element, component: Morphism) -> Self {
        let base = self.components.clone();
        let mut out = self.clone();
        out.components = Arc::new(move |x| if *x == c { Ok(component.clone()) } else { base(x) });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::zn;
    use crate::monoid::Monoid;
    use crate::permcat::PermCat;

    #[test]
    fn composite_of_identities_is_identity() {
        let c: CatRef = Arc::new(PermCat::deloop(Monoid::trivial(), zn(3)).unwrap());
        let id = SmFunctor::identity(&c);
        let twice = id.after(&id).unwrap();
        assert!(twice.is_strict(2));
        for f in c.morphisms(2).unwrap() {
            assert_eq!(twice.mor(&f).unwrap(), f);
        }
    }
}
