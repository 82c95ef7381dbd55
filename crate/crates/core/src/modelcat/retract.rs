use std::sync::Arc;

use super::{is_free_cofibration, retract_square};
use crate::error::{Error, Result};
use crate::gabriel::induced_category;
use crate::monoid::{MonoidHom, Side};
use crate::permcat::{CatRef, Morphism, PermCat};
use crate::report::{CheckReport, Law};
use crate::rule::ObjectMap;
use crate::smfunctor::{is_acyclic_fibration, SmFunctor, Verdict};

/// `F = P ∘ I` with `I` a free cofibration and `P` an acyclic fibration,
/// plus `L : D -> E` exhibiting `F` as a retract of `I`.
#[derive(Clone, Debug)]
pub struct RetractWitness {
    pub f: SmFunctor,
    pub e: CatRef,
    pub i: SmFunctor,
    pub p: SmFunctor,
    pub l: SmFunctor,
    pub l_obj: MonoidHom,
}

/// Builds `E`, `I`, `P` and `L` from a certified object lift. `L_obj` is
/// checked against the square on objects up to `depth`.
pub fn build_retract(f: &SmFunctor, l_obj: MonoidHom, depth: usize) -> Result<RetractWitness> {
    let square = retract_square(f)?;
    if l_obj.domain() != square.bottom.domain() || l_obj.codomain() != square.right.domain() {
        return Err(Error::InvalidHom("object lift has the wrong shape".into()));
    }
    if !square.is_filled_by(&l_obj, depth)? {
        return Err(Error::InvalidHom("object lift does not fill the retract square".into()));
    }
    let (c, d) = (f.domain.clone(), f.codomain.clone());
    let p_obj = square.right.clone();
    let e: CatRef = Arc::new(induced_category(
        p_obj.domain().clone(),
        d.clone(),
        ObjectMap::Hom(p_obj.clone()),
        None,
    )?);

    let i_obj = MonoidHom::inclusion(p_obj.domain(), Side::Left)?;
    let (ff, io) = (f.clone(), i_obj.clone());
    let i = SmFunctor::strict(c, e.clone(), i_obj, move |m: &Morphism| {
        Ok(Morphism::lifted(io.apply(&m.source)?, io.apply(&m.target)?, ff.mor(m)?))
    });
    let p = SmFunctor::strict(e.clone(), d.clone(), p_obj, |m: &Morphism| Ok(m.base()?.clone()));
    let lo = l_obj.clone();
    let l = SmFunctor::strict(d, e.clone(), l_obj.clone(), move |m: &Morphism| {
        Ok(Morphism::lifted(lo.apply(&m.source)?, lo.apply(&m.target)?, m.clone()))
    });
    Ok(RetractWitness {
        f: f.clone(),
        e,
        i,
        p,
        l,
        l_obj,
    })
}

pub const RETRACT_LAWS: [&str; 5] = [
    "p_after_i",
    "l_after_f",
    "p_after_l",
    "free_cofibration_shape",
    "acyclic_fibration",
];

/// `outer ∘ inner = expected` on enumerated objects and morphisms of the
/// common domain.
fn composite_equals(
    law: &mut Law,
    domain: &PermCat,
    outer: &SmFunctor,
    inner: &SmFunctor,
    expected: &SmFunctor,
    depth: usize,
) {
    for x in domain.objects().enumerate(depth) {
        let got = inner.obj(&x).and_then(|y| outer.obj(&y));
        law.check(got.is_ok() && got == expected.obj(&x), || {
            format!("differs on object {}", domain.objects().show(&x))
        });
    }
    match domain.morphisms(depth) {
        Ok(ms) => {
            for m in &ms {
                let got = inner.mor(m).and_then(|y| outer.mor(&y));
                law.check(got.is_ok() && got == expected.mor(m), || {
                    format!("differs on morphism {}", domain.show_mor(m))
                });
            }
        }
        Err(e) => law.fail(e.to_string()),
    }
}

/// The three retract identities, the shape of `I` and acyclicity of `P`.
pub fn verify_retract(w: &RetractWitness, depth: usize) -> CheckReport {
    let mut report = CheckReport::new();
    let (c, d) = (&*w.f.domain, &*w.f.codomain);

    let mut law = Law::new(RETRACT_LAWS[0], depth);
    composite_equals(&mut law, c, &w.p, &w.i, &w.f, depth);
    report.push(law);

    let mut law = Law::new(RETRACT_LAWS[1], depth);
    composite_equals(&mut law, c, &w.l, &w.f, &w.i, depth);
    report.push(law);

    let mut law = Law::new(RETRACT_LAWS[2], depth);
    composite_equals(&mut law, d, &w.p, &w.l, &SmFunctor::identity(&w.f.codomain), depth);
    report.push(law);

    let mut law = Law::new(RETRACT_LAWS[3], depth);
    match is_free_cofibration(&w.i, depth) {
        Verdict::Yes => {
            law.check(true, String::new);
        }
        Verdict::No(m) | Verdict::NotWithinDepth(m) => law.fail(m),
    }
    report.push(law);

    let mut law = Law::new(RETRACT_LAWS[4], depth);
    match is_acyclic_fibration(&w.p, depth) {
        Ok(Verdict::Yes) => {
            law.check(true, String::new);
        }
        Ok(Verdict::No(m) | Verdict::NotWithinDepth(m)) => law.fail(m),
        Err(e) => law.fail(e.to_string()),
    }
    report.push(law);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modelcat::recognize_cofibration;
    use crate::monoid::catalog::z2;
    use crate::monoid::{Element, Monoid};

    fn from_terminal(c: PermCat) -> SmFunctor {
        let c: CatRef = Arc::new(c);
        let one: CatRef = Arc::new(PermCat::terminal());
        let h = MonoidHom::trivial(&Monoid::trivial(), c.objects());
        let cc = c.clone();
        SmFunctor::strict(one, c, h, move |_| cc.identity(&cc.objects().unit()))
    }

    fn retract_of(f: &SmFunctor, depth: usize) -> RetractWitness {
        let l = recognize_cofibration(f, depth).unwrap().expect("certified");
        build_retract(f, l, depth).unwrap()
    }

    #[test]
    fn retract_examples_verify() {
        let one: CatRef = Arc::new(PermCat::terminal());
        let w = retract_of(&SmFunctor::identity(&one), 3);
        assert!(verify_retract(&w, 3).all_pass());

        let s = Monoid::free(&["s"]).unwrap();
        let w = retract_of(&from_terminal(PermCat::discrete(s).unwrap()), 3);
        let r = verify_retract(&w, 3);
        assert!(r.all_pass(), "{r}");

        let ch: CatRef = Arc::new(PermCat::chaotic(z2()));
        let w = retract_of(&SmFunctor::identity(&ch), 3);
        let r = verify_retract(&w, 2);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn perturbations_are_caught() {
        let ch: CatRef = Arc::new(PermCat::chaotic(z2()));
        let mut w = retract_of(&SmFunctor::identity(&ch), 2);
        let a = Element::Finite(1);
        let f = ch.hom(&a, &a).unwrap()[0].clone();
        let wrong = w.e.identity(&w.e.objects().unit()).unwrap();
        w.l = w.l.perturbed(f, wrong);
        let r = verify_retract(&w, 2);
        assert!(!r.passes("p_after_l"), "{r}");

        let mut w = retract_of(&SmFunctor::identity(&ch), 2);
        let io = w.i.objects.as_hom().unwrap().clone();
        let moved = w.e.objects().clone();
        w.i.objects = ObjectMap::rule(move |x| {
            let y = io.apply(x)?;
            if moved.is_unit(&y) { Ok(y) } else { moved.multiply(&y, &y) }
        });
        let r = verify_retract(&w, 2);
        assert!(!r.passes("free_cofibration_shape"), "{r}");
    }
}
