//! Ready-made strict functors between the standard families.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monoid::{Monoid, MonoidHom};
use crate::permcat::{CatKind, CatRef, Morphism, Payload, PermCat};
use crate::smfunctor::SmFunctor;

/// The unique strict functor to the terminal category.
pub fn to_terminal(c: &CatRef) -> SmFunctor {
    let one: CatRef = Arc::new(PermCat::terminal());
    let h = MonoidHom::trivial(c.objects(), one.objects());
    let o = one.clone();
    SmFunctor::strict(c.clone(), one, h, move |_| o.identity(&o.objects().unit()))
}

/// The unique strict functor out of the terminal category.
pub fn from_terminal(c: &CatRef) -> SmFunctor {
    let one: CatRef = Arc::new(PermCat::terminal());
    let h = MonoidHom::trivial(&Monoid::trivial(), c.objects());
    let cc = c.clone();
    SmFunctor::strict(one, c.clone(), h, move |_| cc.identity(&cc.objects().unit()))
}

/// The strict functor with object map `h` that keeps morphism payloads
/// wherever the representations allow it: any functor into a chaotic
/// category, out of a discrete one, between deloopings of the same group,
/// or between categories induced from the same base.
pub fn relabel(a: &CatRef, b: &CatRef, h: MonoidHom) -> Result<SmFunctor> {
    if h.domain() != a.objects() || h.codomain() != b.objects() {
        return Err(Error::InvalidFunctor(format!(
            "object map {} -> {} does not fit {a} -> {b}",
            h.domain(),
            h.codomain()
        )));
    }
    let ok = match (a.kind(), b.kind()) {
        (_, CatKind::Chaotic) | (CatKind::Discrete, _) => true,
        (CatKind::Deloop { group: g1 }, CatKind::Deloop { group: g2 }) => g1 == g2,
        (CatKind::Induced(i1), CatKind::Induced(i2)) => Arc::ptr_eq(&i1.base, &i2.base),
        _ => false,
    };
    if !ok {
        return Err(Error::InvalidFunctor(format!("no payload-preserving functor {a} -> {b}")));
    }
    let (bb, hh) = (b.clone(), h.clone());
    Ok(SmFunctor::strict(a.clone(), b.clone(), h, move |m: &Morphism| {
        let (s, t) = (hh.apply(&m.source)?, hh.apply(&m.target)?);
        match (bb.kind(), &m.payload) {
            (CatKind::Chaotic, _) => Ok(Morphism::new(s, t, Payload::Point)),
            (_, Payload::Point) => bb.identity(&s),
            (_, p) => Ok(Morphism::new(s, t, p.clone())),
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::z2;
    use crate::smfunctor::validate_functor;

    #[test]
    fn standard_functors_validate() {
        let ch: CatRef = Arc::new(PermCat::chaotic(z2()));
        let disc: CatRef = Arc::new(PermCat::discrete(z2()).unwrap());
        for f in [
            to_terminal(&ch),
            from_terminal(&ch),
            relabel(&disc, &ch, MonoidHom::identity(&z2())).unwrap(),
        ] {
            assert!(validate_functor(&f, 2).all_pass(), "{f:?}");
        }
        assert!(relabel(&ch, &disc, MonoidHom::identity(&z2())).is_err());
    }
}
