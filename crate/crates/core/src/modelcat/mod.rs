//! Free cofibrations, the retract decomposition of a cofibration, pushouts
//! along free cofibrations and the left-properness harness.

mod properness;
mod pushout;
mod retract;

pub use properness::{check_pushout, properness_check, PROPERNESS_LAWS};
pub use pushout::{lift_uniqueness, pushout_free, universal_lift, verify_lift, PushoutResult, LIFT_LAWS};
pub use retract::{build_retract, verify_retract, RetractWitness, RETRACT_LAWS};

use crate::error::{Error, Result};
use crate::monoid::{counit_over, Element, Letter, LiftingSquare, Monoid, MonoidHom, MonoidKind, Side, Symbol};
use crate::permcat::CatRef;
use crate::smfunctor::{validate_functor, SmFunctor, Verdict};

/// A strict functor `i_A : A -> C` whose object map is the inclusion
/// `Ob(A) -> Ob(A) ∨ F(V)`. When `Ob(A)` is trivial, `Ob(C)` may be the free
/// monoid itself.
#[derive(Clone, Debug)]
pub struct FreeCofibrationDatum {
    pub a: CatRef,
    pub c: CatRef,
    pub generators: Vec<Symbol>,
    pub inclusion: SmFunctor,
    v_inclusion: MonoidHom,
}

/// Reads off `Ob(A)` and the free factor from `Ob(C)`; fails when `Ob(C)` is
/// not of the form `Ob(A) ∨ F(V)`.
fn free_complement(a: &Monoid, c: &Monoid) -> Result<(Vec<Symbol>, MonoidHom)> {
    let bad = || {
        Error::InvalidFunctor(format!("{c} is not {a} with free generators adjoined"))
    };
    match c.kind() {
        MonoidKind::Coproduct { left, right } if left == a => match right.kind() {
            MonoidKind::Free { generators } => {
                Ok((generators.clone(), MonoidHom::inclusion(c, Side::Right)?))
            }
            _ => Err(bad()),
        },
        MonoidKind::Free { generators } if a == &Monoid::trivial() => {
            Ok((generators.clone(), MonoidHom::identity(c)))
        }
        _ => Err(bad()),
    }
}

impl FreeCofibrationDatum {
    /// Derives the datum from the shape of `Ob(C)`; the functor itself is
    /// checked by [`is_free_cofibration`].
    pub fn new(inclusion: SmFunctor) -> Result<Self> {
        let (generators, v_inclusion) =
            free_complement(inclusion.domain.objects(), inclusion.codomain.objects())?;
        Ok(FreeCofibrationDatum {
            a: inclusion.domain.clone(),
            c: inclusion.codomain.clone(),
            generators,
            inclusion,
            v_inclusion,
        })
    }

    /// The free monoid `F(V)`.
    pub fn free_part(&self) -> &Monoid {
        self.v_inclusion.domain()
    }

    /// `F(V) -> Ob(C)`.
    pub fn v_inclusion(&self) -> &MonoidHom {
        &self.v_inclusion
    }

    /// `Ob(A) -> Ob(C)`.
    pub fn a_inclusion(&self) -> MonoidHom {
        match self.c.objects().kind() {
            MonoidKind::Coproduct { .. } => {
                MonoidHom::inclusion(self.c.objects(), Side::Left).expect("coproduct")
            }
            _ => MonoidHom::trivial(self.a.objects(), self.c.objects()),
        }
    }

    /// Letters of an object of `C`: `Left` letters live in `Ob(A)`, `Right`
    /// letters in `F(V)`.
    pub fn letters(&self, c: &Element) -> Result<Vec<Letter>> {
        self.c.objects().check(c)?;
        Ok(match c {
            Element::Alt(ls) => ls.clone(),
            Element::Word(w) if !w.is_empty() => vec![Letter::new(Side::Right, c.clone())],
            _ => Vec::new(),
        })
    }
}

/// Whether `f` is a strict functor whose object map is the inclusion of
/// `Ob(A)` into `Ob(A) ∨ F(V)`, checked on enumerated objects.
pub fn is_free_cofibration(f: &SmFunctor, depth: usize) -> Verdict {
    let datum = match FreeCofibrationDatum::new(f.clone()) {
        Ok(d) => d,
        Err(e) => return Verdict::No(e.to_string()),
    };
    let incl = datum.a_inclusion();
    for x in f.domain.objects().enumerate(depth) {
        if f.obj(&x).ok() != incl.apply(&x).ok() {
            return Verdict::No(format!(
                "object {} is not sent to its coproduct letter",
                f.domain.objects().show(&x)
            ));
        }
    }
    if !f.is_strict(depth) {
        return Verdict::No("not strict".into());
    }
    let report = validate_functor(f, depth);
    if !report.all_pass() {
        return Verdict::No(format!("fails {}", report.failed_laws().join(", ")));
    }
    Verdict::Yes
}

/// Generators used for the free monoid in the retract square: the elements
/// of `Ob(D)` of length at most one. These generate `Ob(D)` for every
/// supported presentation.
pub fn generator_elements(d: &Monoid) -> Vec<Element> {
    d.enumerate(1)
}

/// The square `Ob(C) -> Ob(C) ∨ F(gens)`, `Ob(F)`, `p = Ob(F) ∨ ε`, `id`.
pub(crate) fn retract_square(f: &SmFunctor) -> Result<LiftingSquare> {
    let ob_f = f
        .objects
        .as_hom()
        .ok_or_else(|| Error::InvalidFunctor("object map is not a monoid hom".into()))?
        .clone();
    let d = f.codomain.objects();
    let eps = counit_over(d, &generator_elements(d))?;
    let p = crate::monoid::codiagonal(&ob_f, &eps)?;
    let top = MonoidHom::inclusion(p.domain(), Side::Left)?;
    Ok(LiftingSquare {
        top,
        left: ob_f,
        right: p,
        bottom: MonoidHom::identity(d),
    })
}

/// Searches for `L_obj : Ob(D) -> Ob(C) ∨ F(gens)` with `L_obj ∘ Ob(F) = i`
/// and `p ∘ L_obj = id`. `None` means no such hom with letter images of
/// length at most `depth`.
pub fn recognize_cofibration(f: &SmFunctor, depth: usize) -> Result<Option<MonoidHom>> {
    if !f.is_strict(depth) {
        return Err(Error::InvalidFunctor("cofibrations are strict functors".into()));
    }
    crate::monoid::solve_lifting(&retract_square(f)?, depth)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monoid::catalog::z2;
    use crate::permcat::{Payload, PermCat};
    use crate::permcat::Morphism;

    pub(crate) fn from_terminal(c: PermCat) -> SmFunctor {
        let c: CatRef = Arc::new(c);
        let one: CatRef = Arc::new(PermCat::terminal());
        let h = MonoidHom::trivial(&Monoid::trivial(), c.objects());
        let cc = c.clone();
        SmFunctor::strict(one, c, h, move |_| cc.identity(&cc.objects().unit()))
    }

    #[test]
    fn free_cofibration_examples() {
        let v = Monoid::free(&["v"]).unwrap();
        let f = from_terminal(PermCat::discrete(v.clone()).unwrap());
        assert_eq!(is_free_cofibration(&f, 2), Verdict::Yes);

        let a: CatRef = Arc::new(PermCat::chaotic(z2()));
        let cm = Monoid::coproduct_of(z2(), v);
        let c: CatRef = Arc::new(PermCat::chaotic(cm.clone()));
        let incl = MonoidHom::inclusion(&cm, Side::Left).unwrap();
        let i2 = incl.clone();
        let i = SmFunctor::strict(a, c, incl, move |m: &Morphism| {
            Ok(Morphism::new(i2.apply(&m.source)?, i2.apply(&m.target)?, Payload::Point))
        });
        assert_eq!(is_free_cofibration(&i, 2), Verdict::Yes);

        let bad = from_terminal(PermCat::discrete(z2()).unwrap());
        assert!(matches!(is_free_cofibration(&bad, 2), Verdict::No(_)));
    }

    #[test]
    fn recognition_examples() {
        let s = Monoid::free(&["s"]).unwrap();
        let f = from_terminal(PermCat::discrete(s.clone()).unwrap());
        let l = recognize_cofibration(&f, 1).unwrap().expect("lift");
        let img = l.apply(&Element::word(&["s", "s"])).unwrap();
        assert_eq!(l.codomain().show(&img), "<R(s.s)>");

        let c: CatRef = Arc::new(PermCat::chaotic(z2()));
        assert!(recognize_cofibration(&SmFunctor::identity(&c), 1).unwrap().is_some());

        let bad = from_terminal(PermCat::discrete(z2()).unwrap());
        assert!(recognize_cofibration(&bad, 6).unwrap().is_none());
    }
}
