use std::sync::Arc;

use super::{MonoidalNatTrans, SmFunctor};
use crate::error::{Error, Result};
use crate::monoid::Element;
use crate::permcat::{CatRef, Morphism};
use crate::rule::{ComponentFn, MorFn, ObjectMap, PairFn};

/// Given `α : F ⇒ G` with invertible components, returns `G` equipped with
/// `λ_G(a, b) = (α a ⊗ α b) ∘ λ_F(a, b) ∘ α(ab)^-1` together with `α`.
/// Components are checked for invertibility on objects up to `depth`.
pub fn transport_lambda(
    f: &SmFunctor,
    g_objects: ObjectMap,
    g_morphisms: MorFn,
    alpha: ComponentFn,
    depth: usize,
) -> Result<(SmFunctor, MonoidalNatTrans)> {
    let d = f.codomain.clone();
    for x in f.domain.objects().enumerate(depth) {
        let a = alpha(&x)?;
        if !d.is_iso(&a) {
            return Err(Error::NotInvertible(format!(
                "α({}) = {}",
                f.domain.objects().show(&x),
                d.show_mor(&a)
            )));
        }
    }
    let (ff, al, dd) = (f.clone(), alpha.clone(), d.clone());
    let lambda: PairFn = Arc::new(move |a: &Element, b: &Element| {
        let ab = ff.domain.tensor_obj(a, b)?;
        let inv = dd.inverse(&al(&ab)?)?;
        let pair = dd.tensor_mor(&al(a)?, &al(b)?)?;
        dd.compose_path(&[&inv, &ff.lambda_at(a, b)?, &pair])
    });
    let g = SmFunctor::new(f.domain.clone(), d, g_objects, g_morphisms, Some(lambda));
    let nat = MonoidalNatTrans::new(f.clone(), g.clone(), alpha);
    Ok((g, nat))
}

/// Conjugates the identity of `c` by `delta : id ⇒ S`, giving
/// `S(f) = δ(t) ∘ f ∘ δ(s)^-1` with its transported coherence.
pub fn transport_functor(
    c: &CatRef,
    objects: ObjectMap,
    delta: ComponentFn,
    depth: usize,
) -> Result<(SmFunctor, MonoidalNatTrans)> {
    let unit = c.objects().unit();
    if delta(&unit)? != c.identity(&unit)? {
        return Err(Error::InvalidFunctor("δ(unit) is not the identity".into()));
    }
    let (cc, dl) = (c.clone(), delta.clone());
    let morphisms: MorFn = Arc::new(move |m: &Morphism| {
        let inv = cc.inverse(&dl(&m.source)?)?;
        cc.compose_path(&[&inv, m, &dl(&m.target)?])
    });
    transport_lambda(
        &SmFunctor::identity(c),
        objects,
        morphisms,
        delta,
        depth,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::{z2, zn};
    use crate::monoid::{Monoid, MonoidHom};
    use crate::permcat::{Payload, PermCat};
    use crate::smfunctor::{validate_functor, validate_nat_trans};

    fn z3() -> CatRef {
        Arc::new(PermCat::deloop(Monoid::trivial(), zn(3)).unwrap())
    }

    fn constant(c: &CatRef, k: usize) -> ComponentFn {
        let c = c.clone();
        Arc::new(move |x: &Element| {
            Ok(if c.objects().is_unit(x) {
                c.identity(x)?
            } else {
                Morphism::new(x.clone(), x.clone(), Payload::Group(k))
            })
        })
    }

    #[test]
    fn identity_transport_keeps_lambda() {
        let c = z3();
        let id = SmFunctor::identity(&c);
        let (g, nat) =
            transport_lambda(&id, id.objects.clone(), id.morphisms.clone(), constant(&c, 0), 2)
                .unwrap();
        let e = Monoid::trivial().unit();
        assert_eq!(g.lambda_at(&e, &e).unwrap(), id.lambda_at(&e, &e).unwrap());
        assert!(validate_nat_trans(&nat, 2).all_pass());
    }

    #[test]
    fn non_unital_component_on_a_single_object() {
        let c = z3();
        let id = SmFunctor::identity(&c);
        let e = Monoid::trivial().unit();
        for k in 0..3 {
            let alpha: ComponentFn = Arc::new(move |x: &Element| {
                Ok(Morphism::new(x.clone(), x.clone(), Payload::Group(k)))
            });
            let (g, nat) =
                transport_lambda(&id, id.objects.clone(), id.morphisms.clone(), alpha, 2).unwrap();
            // (k + k) + 0 - k = k
            assert_eq!(g.lambda_at(&e, &e).unwrap().payload, Payload::Group(k));
            assert!(validate_nat_trans(&nat, 2).passes("monoidality"));
        }
    }

    #[test]
    fn conjugating_by_a_central_element_is_trivial_on_morphisms() {
        // Every object of Deloop(Z2, Z3) other than the unit gets δ = 1.
        let c: CatRef = Arc::new(PermCat::deloop(z2(), zn(3)).unwrap());
        let (s, delta) =
            transport_functor(&c, ObjectMap::Hom(MonoidHom::identity(&z2())), constant(&c, 1), 2).unwrap();
        for m in c.morphisms(2).unwrap() {
            assert_eq!(s.mor(&m).unwrap(), m);
        }
        let a = Element::Finite(1);
        // λ(a, a) = (1 + 1) + 0 - δ(e) = 2
        assert_eq!(s.lambda_at(&a, &a).unwrap().payload, Payload::Group(2));
        assert!(validate_functor(&s, 2).all_pass());
        assert!(validate_nat_trans(&delta, 2).all_pass());
    }

    #[test]
    fn chaotic_conjugation_is_the_identity() {
        let c: CatRef = Arc::new(PermCat::chaotic(z2()));
        let cc = c.clone();
        let delta: ComponentFn = Arc::new(move |x: &Element| cc.identity(x));
        let (s, _) = transport_functor(&c, ObjectMap::Hom(MonoidHom::identity(&z2())), delta, 2).unwrap();
        for m in c.morphisms(2).unwrap() {
            assert_eq!(s.mor(&m).unwrap(), m);
        }
    }
}
