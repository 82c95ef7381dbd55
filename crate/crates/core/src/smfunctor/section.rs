use std::sync::Arc;

use super::{is_acyclic_fibration, validate_functor, validate_nat_trans, MonoidalNatTrans, SmFunctor, Verdict};
use crate::error::{Error, Result};
use crate::monoid::Element;
use crate::permcat::Morphism;
use crate::report::{CheckReport, Law};
use crate::rule::{ComponentFn, MorFn, ObjectMap, PairFn};

/// A unital section `S` of an acyclic fibration `G : A -> B` with counit
/// `ε_S : S G ⇒ id_A`.
#[derive(Clone, Debug)]
pub struct SectionDatum {
    pub fibration: SmFunctor,
    pub section: SmFunctor,
    pub counit: MonoidalNatTrans,
}

impl SectionDatum {
    /// The object part `s` of the section.
    pub fn s(&self, b: &Element) -> Result<Element> {
        self.section.obj(b)
    }

    pub fn epsilon(&self, a: &Element) -> Result<Morphism> {
        self.counit.at(a)
    }
}

/// Chooses `s(b)` as the first preimage of `b` in `enumerate(A, depth)` and
/// fills in `S`, `ε_S` and `λ^S = ε_S S` by the hom bijections of `G`.
pub fn find_section(g: &SmFunctor, depth: usize) -> Result<SectionDatum> {
    match is_acyclic_fibration(g, depth)? {
        Verdict::Yes => {}
        Verdict::No(w) => return Err(Error::InvalidFunctor(format!("not an acyclic fibration: {w}"))),
        Verdict::NotWithinDepth(w) => {
            return Err(Error::DepthExhausted { what: w, depth });
        }
    }
    let a_cat = g.domain.clone();
    let pool: Arc<Vec<Element>> = Arc::new(a_cat.objects().enumerate(depth));

    let (gg, pl) = (g.clone(), pool.clone());
    let s = move |b: &Element| -> Result<Element> {
        if gg.codomain.objects().is_unit(b) {
            return Ok(gg.domain.objects().unit());
        }
        for a in pl.iter() {
            if gg.obj(a)? == *b {
                return Ok(a.clone());
            }
        }
        Err(Error::DepthExhausted {
            what: format!("preimage of {}", gg.codomain.objects().show(b)),
            depth,
        })
    };
    let s = Arc::new(s);

    let preimage = {
        let g = g.clone();
        move |src: &Element, tgt: &Element, f: &Morphism| -> Result<Morphism> {
            g.domain
                .hom(src, tgt)?
                .into_iter()
                .find(|h| g.mor(h).as_ref() == Ok(f))
                .ok_or_else(|| Error::InvalidFunctor(format!("no preimage of {}", g.codomain.show_mor(f))))
        }
    };
    let preimage = Arc::new(preimage);

    let (s1, p1) = (s.clone(), preimage.clone());
    let section_mor: MorFn = Arc::new(move |f: &Morphism| p1(&s1(&f.source)?, &s1(&f.target)?, f));

    let (s2, p2, g2) = (s.clone(), preimage.clone(), g.clone());
    let epsilon: ComponentFn = Arc::new(move |a: &Element| {
        let ga = g2.obj(a)?;
        p2(&s2(&ga)?, a, &g2.codomain.identity(&ga)?)
    });

    let (s3, e3, a3) = (s.clone(), epsilon.clone(), a_cat.clone());
    let lambda: PairFn = Arc::new(move |b1: &Element, b2: &Element| {
        e3(&a3.tensor_obj(&s3(b1)?, &s3(b2)?)?)
    });

    let s4 = s.clone();
    let section = SmFunctor::new(
        g.codomain.clone(),
        a_cat.clone(),
        ObjectMap::rule(move |b| s4(b)),
        section_mor,
        Some(lambda),
    );
    let counit = MonoidalNatTrans::new(section.after(g)?, SmFunctor::identity(&a_cat), epsilon);
    Ok(SectionDatum {
        fibration: g.clone(),
        section,
        counit,
    })
}

pub const SECTION_LAWS: [&str; 4] = [
    "section_right_inverse",
    "counit_over_identity",
    "lambda_is_counit",
    "lambda_over_identity",
];

/// Checks `G S = id`, `G ε_S = id`, `λ^S = ε_S S` and `G λ^S = id`, then the
/// functor laws of `S` and the transformation laws of `ε_S`.
pub fn check_section(datum: &SectionDatum, depth: usize) -> CheckReport {
    let (g, s) = (&datum.fibration, &datum.section);
    let (a_cat, b_cat) = (&*g.domain, &*g.codomain);
    let b_objs = b_cat.objects().enumerate(depth);
    let a_objs = a_cat.objects().enumerate(depth);
    let show_b = |x: &Element| b_cat.objects().show(x);
    let mut report = CheckReport::new();

    let mut law = Law::new(SECTION_LAWS[0], depth);
    for b in &b_objs {
        let back = s.obj(b).and_then(|a| g.obj(&a));
        law.check(back.as_ref() == Ok(b), || format!("G(s({})) != {}", show_b(b), show_b(b)));
    }
    match b_cat.morphisms(depth) {
        Ok(ms) => {
            for f in &ms {
                let back = s.mor(f).and_then(|h| g.mor(&h));
                law.check(back.as_ref() == Ok(f), || format!("G(S(f)) != f at {}", b_cat.show_mor(f)));
            }
        }
        Err(e) => law.fail(e.to_string()),
    }
    report.push(law);

    let mut law = Law::new(SECTION_LAWS[1], depth);
    for a in &a_objs {
        let ok = (|| -> Result<bool> {
            let ga = g.obj(a)?;
            Ok(g.mor(&datum.epsilon(a)?)? == b_cat.identity(&ga)?)
        })();
        law.check(ok == Ok(true), || format!("G(ε({})) is not an identity", a_cat.objects().show(a)));
    }
    report.push(law);

    let mut law = Law::new(SECTION_LAWS[2], depth);
    let mut over = Law::new(SECTION_LAWS[3], depth);
    for b1 in &b_objs {
        for b2 in &b_objs {
            let witness = || format!("at ({}, {})", show_b(b1), show_b(b2));
            let lam = s.lambda_at(b1, b2);
            let expected = (|| datum.epsilon(&a_cat.tensor_obj(&s.obj(b1)?, &s.obj(b2)?)?))();
            law.check(lam.is_ok() && lam == expected, witness);
            let image = lam.and_then(|l| g.mor(&l));
            let ok = image
                .as_ref()
                .is_ok_and(|m| m.source == m.target && b_cat.identity(&m.source).as_ref() == Ok(m));
            over.check(ok, witness);
        }
    }
    report.push(law);
    report.push(over);

    report.extend_scoped("section", validate_functor(s, depth));
    report.extend_scoped("counit", validate_nat_trans(&datum.counit, depth));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::{idempotent, product, z2};
    use crate::monoid::{Monoid, MonoidHom};
    use crate::permcat::{CatRef, Payload, PermCat};

    #[test]
    fn identity_has_the_identity_section() {
        let c: CatRef = Arc::new(PermCat::chaotic(z2()));
        let sec = find_section(&SmFunctor::identity(&c), 2).unwrap();
        for x in z2().enumerate(0) {
            assert_eq!(sec.s(&x).unwrap(), x);
            assert_eq!(sec.epsilon(&x).unwrap(), c.identity(&x).unwrap());
        }
        assert!(check_section(&sec, 2).all_pass());
    }

    #[test]
    fn chaotic_collapse_section() {
        let c: CatRef = Arc::new(PermCat::chaotic(z2()));
        let one: CatRef = Arc::new(PermCat::terminal());
        let o = one.clone();
        let g = SmFunctor::strict(c, one, MonoidHom::trivial(&z2(), &Monoid::trivial()), move |_| {
            o.identity(&Monoid::trivial().unit())
        });
        let sec = find_section(&g, 2).unwrap();
        assert_eq!(sec.s(&Monoid::trivial().unit()).unwrap(), Element::Finite(0));
        let r = check_section(&sec, 2);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn projection_of_chaotic_product() {
        let zz = product(&z2(), &z2());
        let f = zz.as_finite().unwrap().clone();
        let images = (0..f.order()).map(|i| Element::Finite(i / 2)).collect();
        let proj = MonoidHom::from_table(&zz, &z2(), images).unwrap();
        let a: CatRef = Arc::new(PermCat::chaotic(zz.clone()));
        let b: CatRef = Arc::new(PermCat::chaotic(z2()));
        let g = SmFunctor::strict(a, b, proj, |m| {
            Ok(Morphism::new(
                Element::Finite(match m.source { Element::Finite(i) => i / 2, _ => 0 }),
                Element::Finite(match m.target { Element::Finite(i) => i / 2, _ => 0 }),
                Payload::Point,
            ))
        });
        let sec = find_section(&g, 1).unwrap();
        assert_eq!(zz.show(&sec.s(&Element::Finite(1)).unwrap()), "a:e");
        assert!(check_section(&sec, 1).all_pass());
    }

    #[test]
    fn non_fibration_is_rejected() {
        let c: CatRef = Arc::new(PermCat::discrete(idempotent()).unwrap());
        let one: CatRef = Arc::new(PermCat::terminal());
        let o = one.clone();
        let g = SmFunctor::strict(c, one, MonoidHom::trivial(&idempotent(), &Monoid::trivial()), move |_| {
            o.identity(&Monoid::trivial().unit())
        });
        assert!(find_section(&g, 2).is_err());
    }
}
