//! Induced categories and the factorization of a unital symmetric monoidal
//! functor into a strict identity-on-objects part and a fully faithful part.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monoid::{Element, Monoid, MonoidHom};
use crate::permcat::{self, CatRef, Morphism, PermCat};
use crate::report::{CheckReport, Law};
use crate::rule::{memo_obj, memo_pair, ObjFn, ObjectMap, PairFn};
use crate::smfunctor::{check_equivalence, validate_functor, SmFunctor, Verdict};

/// Morphism structure pulled back from a base category along an object map
/// `q`. `hom(m1, m2)` is `base(q m1, q m2)`; tensor and symmetry are
/// conjugated by the coherence `lambda(m1, m2) : q(m1 m2) -> q m1 ⊗ q m2`,
/// which is the identity family when absent.
#[derive(Clone)]
pub struct Induced {
    pub base: CatRef,
    pub q: ObjectMap,
    pub lambda: Option<PairFn>,
    /// `q` and the inverse coherence, remembered per argument.
    q_memo: ObjFn,
    lambda_inv: Option<PairFn>,
}

impl fmt::Debug for Induced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Induced")
            .field("base", &self.base.to_string())
            .field("q", &self.q)
            .field("strict", &self.lambda.is_none())
            .finish()
    }
}

impl Induced {
    pub fn strict(base: CatRef, q: ObjectMap) -> Self {
        Induced::new(base, q, None)
    }

    pub fn new(base: CatRef, q: ObjectMap, lambda: Option<PairFn>) -> Self {
        let q_memo = {
            let q = q.clone();
            memo_obj(Arc::new(move |x: &Element| q.apply(x)))
        };
        let lambda = lambda.map(memo_pair);
        let lambda_inv = lambda.as_ref().map(|l| {
            let (l, base) = (l.clone(), base.clone());
            memo_pair(Arc::new(move |m1: &Element, m2: &Element| base.inverse(&l(m1, m2)?)))
        });
        Induced {
            base,
            q,
            lambda,
            q_memo,
            lambda_inv,
        }
    }

    fn q_of(&self, x: &Element) -> Result<Element> {
        (self.q_memo)(x)
    }

    pub fn lambda_at(&self, objects: &Monoid, m1: &Element, m2: &Element) -> Result<Morphism> {
        match &self.lambda {
            Some(l) => l(m1, m2),
            None => self.base.identity(&self.q_of(&objects.multiply(m1, m2)?)?),
        }
    }

    fn lambda_inv_at(&self, objects: &Monoid, m1: &Element, m2: &Element) -> Result<Morphism> {
        match &self.lambda_inv {
            Some(l) => l(m1, m2),
            None => self.lambda_at(objects, m1, m2),
        }
    }

    pub(crate) fn hom(&self, m1: &Element, m2: &Element) -> Result<Vec<Morphism>> {
        let homs = self.base.hom(&self.q_of(m1)?, &self.q_of(m2)?)?;
        Ok(homs
            .into_iter()
            .map(|g| Morphism::lifted(m1.clone(), m2.clone(), g))
            .collect())
    }

    pub(crate) fn contains(&self, f: &Morphism) -> bool {
        let Ok(b) = f.base() else { return false };
        self.base.contains(b)
            && self.q_of(&f.source).is_ok_and(|s| s == b.source)
            && self.q_of(&f.target).is_ok_and(|t| t == b.target)
    }

    pub(crate) fn identity(&self, m: &Element) -> Result<Morphism> {
        let id = self.base.identity(&self.q_of(m)?)?;
        Ok(Morphism::lifted(m.clone(), m.clone(), id))
    }

    pub(crate) fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        let h = self.base.compose(g.base()?, f.base()?)?;
        Ok(Morphism::lifted(f.source.clone(), g.target.clone(), h))
    }

    /// `lambda(t1, t2)^-1 ∘ (f ⊗ g) ∘ lambda(s1, s2)`.
    pub(crate) fn tensor(&self, objects: &Monoid, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        let s = objects.multiply(&f.source, &g.source)?;
        let t = objects.multiply(&f.target, &g.target)?;
        let fg = self.base.tensor_mor(f.base()?, g.base()?)?;
        let h = match self.lambda {
            None => fg,
            Some(_) => {
                let ls = self.lambda_at(objects, &f.source, &g.source)?;
                let lt_inv = self.lambda_inv_at(objects, &f.target, &g.target)?;
                self.base.compose_path(&[&ls, &fg, &lt_inv])?
            }
        };
        Ok(Morphism::lifted(s, t, h))
    }

    /// `lambda(m2, m1)^-1 ∘ γ(q m1, q m2) ∘ lambda(m1, m2)`.
    pub(crate) fn symmetry(&self, objects: &Monoid, m1: &Element, m2: &Element) -> Result<Morphism> {
        let s = objects.multiply(m1, m2)?;
        let t = objects.multiply(m2, m1)?;
        let g = self.base.symmetry(&self.q_of(m1)?, &self.q_of(m2)?)?;
        let h = match self.lambda {
            None => g,
            Some(_) => {
                let l12 = self.lambda_at(objects, m1, m2)?;
                let l21_inv = self.lambda_inv_at(objects, m2, m1)?;
                self.base.compose_path(&[&l12, &g, &l21_inv])?
            }
        };
        Ok(Morphism::lifted(s, t, h))
    }

    pub(crate) fn inverse(&self, f: &Morphism) -> Result<Morphism> {
        let b = self.base.inverse(f.base()?)?;
        Ok(Morphism::lifted(f.target.clone(), f.source.clone(), b))
    }
}

/// The category with objects `objects` and morphisms pulled back from `base`
/// along `q`. A coherence is required unless `q` is a monoid hom.
pub fn induced_category(
    objects: Monoid,
    base: CatRef,
    q: ObjectMap,
    lambda: Option<PairFn>,
) -> Result<PermCat> {
    if let ObjectMap::Hom(h) = &q {
        if h.domain() != &objects || h.codomain() != base.objects() {
            return Err(Error::InvalidFunctor(format!(
                "object map {} -> {} does not match {} -> {}",
                h.domain(),
                h.codomain(),
                objects,
                base.objects()
            )));
        }
    } else if lambda.is_none() {
        return Err(Error::InvalidFunctor(
            "a coherence is required when the object map is not a monoid hom".into(),
        ));
    }
    if !q.apply(&objects.unit())?.eq(&base.objects().unit()) {
        return Err(Error::InvalidFunctor("object map does not preserve the unit".into()));
    }
    Ok(PermCat::induced(objects, Induced::new(base, q, lambda)))
}

/// `F = Δ ∘ Γ` with `Γ` strict and identity on objects.
#[derive(Clone)]
pub struct Factorization {
    pub category: CatRef,
    pub gamma: SmFunctor,
    pub delta: SmFunctor,
}

/// Builds the factorization of `f` through its induced category. Fails if `f`
/// does not pass the functor validator at `depth`.
pub fn gabriel_factorize(f: &SmFunctor, depth: usize) -> Result<Factorization> {
    let report = validate_functor(f, depth);
    if !report.all_pass() {
        return Err(Error::InvalidFunctor(format!(
            "input fails {}",
            report.failed_laws().join(", ")
        )));
    }
    let c = f.domain.clone();
    let d = f.codomain.clone();
    let lambda = f.lambda.clone();
    let g: CatRef = Arc::new(induced_category(
        c.objects().clone(),
        d.clone(),
        f.objects.clone(),
        lambda.clone().or_else(|| match &f.objects {
            ObjectMap::Hom(_) => None,
            ObjectMap::Rule(_) => Some(strict_lambda(f.clone())),
        }),
    )?);

    let ff = f.clone();
    let gamma = SmFunctor::new(
        c.clone(),
        g.clone(),
        ObjectMap::Hom(MonoidHom::identity(c.objects())),
        Arc::new(move |m: &Morphism| {
            Ok(Morphism::lifted(m.source.clone(), m.target.clone(), ff.mor(m)?))
        }),
        None,
    );
    let delta = SmFunctor::new(
        g.clone(),
        d,
        f.objects.clone(),
        Arc::new(|m: &Morphism| Ok(m.base()?.clone())),
        lambda,
    );
    Ok(Factorization {
        category: g,
        gamma,
        delta,
    })
}

fn strict_lambda(f: SmFunctor) -> PairFn {
    Arc::new(move |c1: &Element, c2: &Element| f.lambda_at(c1, c2))
}

/// Law names reported by [`verify_factorization`] before the scoped
/// category laws.
pub const FACTORIZATION_LAWS: [&str; 5] = [
    "delta_after_gamma",
    "gamma_strict",
    "gamma_identity_on_objects",
    "delta_fully_faithful",
    "gamma_functor",
];

/// Checks `Δ ∘ Γ = F`, strictness and bijectivity on objects of `Γ`, full
/// faithfulness of `Δ`, and every category law of the middle category.
pub fn verify_factorization(f: &SmFunctor, fac: &Factorization, depth: usize) -> CheckReport {
    let mut report = CheckReport::new();
    let c = &f.domain;
    let objs = c.objects().enumerate(depth);

    let mut law = Law::new(FACTORIZATION_LAWS[0], depth);
    for x in &objs {
        let lhs = fac.gamma.obj(x).and_then(|y| fac.delta.obj(&y));
        law.check(lhs.is_ok() && lhs == f.obj(x), || {
            format!("Δ(Γ({})) != F({})", c.objects().show(x), c.objects().show(x))
        });
    }
    match c.morphisms(depth) {
        Ok(ms) => {
            for m in &ms {
                let lhs = fac.gamma.mor(m).and_then(|y| fac.delta.mor(&y));
                law.check(lhs.is_ok() && lhs == f.mor(m), || {
                    format!("Δ(Γ(f)) != F(f) at {}", c.show_mor(m))
                });
            }
        }
        Err(e) => law.fail(e.to_string()),
    }
    report.push(law);

    let mut law = Law::new(FACTORIZATION_LAWS[1], depth);
    law.check(fac.gamma.is_strict(depth), || "Γ is not strict".into());
    report.push(law);

    let mut law = Law::new(FACTORIZATION_LAWS[2], depth);
    law.check(fac.category.objects() == c.objects(), || {
        "Γ does not share its object monoid with the source".into()
    });
    for x in &objs {
        law.check(fac.gamma.obj(x).as_ref() == Ok(x), || {
            format!("Γ moves object {}", c.objects().show(x))
        });
    }
    report.push(law);

    let mut law = Law::new(FACTORIZATION_LAWS[3], depth);
    match check_equivalence(&fac.delta, depth).fully_faithful {
        Verdict::Yes => {
            law.check(true, String::new);
        }
        Verdict::No(w) | Verdict::NotWithinDepth(w) => law.fail(w),
    }
    report.push(law);

    let mut law = Law::new(FACTORIZATION_LAWS[4], depth);
    let g_report = validate_functor(&fac.gamma, depth);
    law.check(g_report.all_pass(), || {
        format!("Γ fails {}", g_report.failed_laws().join(", "))
    });
    report.push(law);

    report.extend_scoped("category", permcat::validate(&fac.category, depth));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::{z2, zn};
    use crate::monoid::Monoid;

    #[test]
    fn identity_base_gives_an_isomorphic_copy() {
        let d: CatRef = Arc::new(PermCat::deloop(z2(), zn(3)).unwrap());
        let e = induced_category(
            z2(),
            d.clone(),
            ObjectMap::Hom(MonoidHom::identity(&z2())),
            None,
        )
        .unwrap();
        assert!(permcat::validate(&e, 2).all_pass());
        for a in z2().enumerate(0) {
            for b in z2().enumerate(0) {
                assert_eq!(e.hom(&a, &b).unwrap().len(), d.hom(&a, &b).unwrap().len());
            }
        }
    }

    #[test]
    fn collapse_onto_a_delooping_connects_everything() {
        let d: CatRef = Arc::new(PermCat::deloop(Monoid::trivial(), zn(3)).unwrap());
        let e = induced_category(
            z2(),
            d,
            ObjectMap::Hom(MonoidHom::trivial(&z2(), &Monoid::trivial())),
            None,
        )
        .unwrap();
        let objs = z2().enumerate(0);
        let homs: usize = objs
            .iter()
            .flat_map(|a| objs.iter().map(move |b| (a, b)))
            .map(|(a, b)| e.hom(a, b).unwrap().len())
            .sum();
        assert_eq!(homs, 4 * 3);
        assert!(permcat::validate(&e, 2).all_pass());
    }

    #[test]
    fn collapse_onto_terminal_is_chaotic() {
        let m = Monoid::coproduct_of(z2(), Monoid::free(&["v"]).unwrap());
        let one: CatRef = Arc::new(PermCat::terminal());
        let e = induced_category(
            m.clone(),
            one,
            ObjectMap::Hom(MonoidHom::trivial(&m, &Monoid::trivial())),
            None,
        )
        .unwrap();
        let objs = m.enumerate(2);
        for a in &objs {
            for b in &objs {
                assert_eq!(e.hom(a, b).unwrap().len(), 1);
            }
        }
        assert!(permcat::validate(&e, 2).all_pass());
    }

    #[test]
    fn non_hom_object_map_needs_a_coherence() {
        let d: CatRef = Arc::new(PermCat::chaotic(z2()));
        let q = ObjectMap::rule(|x: &Element| Ok(x.clone()));
        assert!(induced_category(z2(), d, q, None).is_err());
    }
}
