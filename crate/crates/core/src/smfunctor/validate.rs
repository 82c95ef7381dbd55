use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};

use super::{MonoidalNatTrans, SmFunctor};
use crate::error::Result;
use crate::monoid::Element;
use crate::permcat::{Morphism, PermCat};
use crate::report::{CheckReport, Law};

pub const FUNCTOR_LAWS: [&str; 8] = [
    "functor_typing",
    "functor_identities",
    "functor_composition",
    "lambda_typing",
    "lambda_unit",
    "lambda_naturality",
    "lambda_symmetry",
    "lambda_associativity",
];

pub const NAT_TRANS_LAWS: [&str; 4] = ["component_typing", "naturality", "unit", "monoidality"];

fn typed(c: &PermCat, f: &Morphism, s: &Element, t: &Element) -> bool {
    f.source == *s && f.target == *t && c.contains(f)
}

/// Runs every functor law over the domain objects of `enumerate(depth)`.
/// As with the category validator, a law only judges instances whose
/// ingredients are well typed.
pub fn validate_functor(f: &SmFunctor, depth: usize) -> CheckReport {
    let (c, d) = (&*f.domain, &*f.codomain);
    let objs = c.objects().enumerate(depth);
    let mut report = CheckReport::new();
    let mut law = Law::new(FUNCTOR_LAWS[0], depth);
    let mors = match c.morphisms(depth) {
        Ok(m) => m,
        Err(e) => {
            law.fail(format!("domain homs unavailable: {e}"));
            Vec::new()
        }
    };
    let show_c = |x: &Element| c.objects().show(x);

    // 1. objects land in D, the unit is preserved, morphisms are well typed
    for x in &objs {
        let fx = f.obj(x);
        law.check(fx.as_ref().is_ok_and(|y| d.objects().contains(y)), || {
            format!("F({}) is not an object of the codomain", show_c(x))
        });
    }
    law.check(f.obj(&c.objects().unit()).ok() == Some(d.objects().unit()), || {
        "F does not preserve the unit object".into()
    });
    let raw_image = |m: &Morphism| -> Option<Morphism> {
        let fm = f.mor(m).ok()?;
        let (s, t) = (f.obj(&m.source).ok()?, f.obj(&m.target).ok()?);
        typed(d, &fm, &s, &t).then_some(fm)
    };
    let images: HashMap<&Morphism, Option<Morphism>> = mors.iter().map(|m| (m, raw_image(m))).collect();
    let image = |m: &Morphism| -> Option<Morphism> {
        match images.get(m) {
            Some(i) => i.clone(),
            None => raw_image(m),
        }
    };
    for m in &mors {
        law.check(images[m].is_some(), || format!("F({}) is mistyped", c.show_mor(m)));
    }
    // instances are judged when every object involved is enumerated
    let enumerated: HashSet<&Element> = objs.iter().collect();
    let within = |a: &Element, b: &Element| {
        c.tensor_obj(a, b).is_ok_and(|ab| enumerated.contains(&ab))
    };
    report.push(law);

    // 2. identities
    let mut law = Law::new(FUNCTOR_LAWS[1], depth);
    for x in &objs {
        let (Ok(id), Ok(fx)) = (c.identity(x), f.obj(x)) else { continue };
        let Some(fid) = image(&id) else { continue };
        law.check(d.identity(&fx).ok() == Some(fid), || {
            format!("F(id {}) is not an identity", show_c(x))
        });
    }
    report.push(law);

    // 3. composition
    let mut law = Law::new(FUNCTOR_LAWS[2], depth);
    let mut by_source: HashMap<&Element, Vec<&Morphism>> = HashMap::default();
    for n in &mors {
        by_source.entry(&n.source).or_default().push(n);
    }
    for m in &mors {
        for n in by_source.get(&m.target).into_iter().flatten() {
            let Ok(nm) = c.compose(n, m) else { continue };
            let (Some(fm), Some(fn_), Some(fnm)) = (image(m), image(n), image(&nm)) else {
                continue;
            };
            law.check(d.compose(&fn_, &fm).ok() == Some(fnm), || {
                format!("F(g ∘ f) != F(g) ∘ F(f) for f={}, g={}", c.show_mor(m), c.show_mor(n))
            });
        }
    }
    report.push(law);

    // 4. λ(a, b) is an iso F(ab) -> Fa ⊗ Fb
    let raw_lam = |a: &Element, b: &Element| -> Option<Morphism> {
        let l = f.lambda_at(a, b).ok()?;
        let s = f.obj(&c.tensor_obj(a, b).ok()?).ok()?;
        let t = d.tensor_obj(&f.obj(a).ok()?, &f.obj(b).ok()?).ok()?;
        (typed(d, &l, &s, &t) && d.is_iso(&l)).then_some(l)
    };
    let lams: HashMap<(&Element, &Element), Option<Morphism>> = objs
        .iter()
        .flat_map(|a| objs.iter().map(move |b| (a, b)))
        .map(|(a, b)| ((a, b), raw_lam(a, b)))
        .collect();
    let lam = |a: &Element, b: &Element| -> Option<Morphism> {
        match lams.get(&(a, b)) {
            Some(l) => l.clone(),
            None => raw_lam(a, b),
        }
    };
    let mut law = Law::new(FUNCTOR_LAWS[3], depth);
    for a in &objs {
        for b in &objs {
            law.check(lam(a, b).is_some(), || {
                format!("λ({}, {}) is mistyped or not invertible", show_c(a), show_c(b))
            });
        }
    }
    report.push(law);

    // 5. λ(unit, c) and λ(c, unit) are identities
    let mut law = Law::new(FUNCTOR_LAWS[4], depth);
    let u = c.objects().unit();
    for x in &objs {
        let Ok(fx) = f.obj(x) else { continue };
        let id = d.identity(&fx).ok();
        for (a, b) in [(&u, x), (x, &u)] {
            if let Some(l) = lam(a, b) {
                law.check(Some(l) == id, || {
                    format!("λ({}, {}) is not the identity", show_c(a), show_c(b))
                });
            }
        }
    }
    report.push(law);

    // 6. λ(t1, t2) ∘ F(f ⊗ g) = (Ff ⊗ Fg) ∘ λ(s1, s2)
    let mut law = Law::new(FUNCTOR_LAWS[5], depth);
    // morphisms grouped by hom-set, so typing and λ are looked up once per
    // pair of hom-sets
    let mut blocks: Vec<((&Element, &Element), Vec<&Morphism>)> = Vec::new();
    let mut block_of: HashMap<(&Element, &Element), usize> = HashMap::default();
    for m in &mors {
        let i = *block_of.entry((&m.source, &m.target)).or_insert_with(|| {
            blocks.push(((&m.source, &m.target), Vec::new()));
            blocks.len() - 1
        });
        blocks[i].1.push(m);
    }
    for ((s1, t1), ms) in &blocks {
        for ((s2, t2), ns) in &blocks {
            if !within(s1, s2) || !within(t1, t2) {
                continue;
            }
            let (Some(ls), Some(lt)) = (lam(s1, s2), lam(t1, t2)) else { continue };
            for m in ms {
                for n in ns {
                    let check = || -> Option<bool> {
                        let mn = c.tensor_mor(m, n).ok()?;
                        let fmn = image(&mn)?;
                        let (fm, fn_) = (image(m)?, image(n)?);
                        let lhs = d.compose(&lt, &fmn).ok()?;
                        let rhs = d.compose(&d.tensor_mor(&fm, &fn_).ok()?, &ls).ok()?;
                        Some(lhs == rhs)
                    };
                    if let Some(ok) = check() {
                        law.check(ok, || {
                            format!("λ not natural at f={}, g={}", c.show_mor(m), c.show_mor(n))
                        });
                    }
                }
            }
        }
    }
    report.push(law);

    // 7. γ(Fa, Fb) ∘ λ(a, b) = λ(b, a) ∘ F(γ(a, b))
    let mut law = Law::new(FUNCTOR_LAWS[6], depth);
    for a in &objs {
        for b in &objs {
            let check = || -> Option<bool> {
                let (lab, lba) = (lam(a, b)?, lam(b, a)?);
                let g = image(&c.symmetry(a, b).ok()?)?;
                let gd = d.symmetry(&f.obj(a).ok()?, &f.obj(b).ok()?).ok()?;
                Some(d.compose(&gd, &lab).ok()? == d.compose(&lba, &g).ok()?)
            };
            if let Some(ok) = check() {
                law.check(ok, || format!("symmetry coherence fails at ({}, {})", show_c(a), show_c(b)));
            }
        }
    }
    report.push(law);

    // 8. (λ(a, b) ⊗ id) ∘ λ(ab, e) = (id ⊗ λ(b, e)) ∘ λ(a, be)
    let mut law = Law::new(FUNCTOR_LAWS[7], depth);
    for a in &objs {
        for b in &objs {
            if !within(a, b) {
                continue;
            }
            for e in &objs {
                let check = || -> Option<bool> {
                    let ab = c.tensor_obj(a, b).ok()?;
                    if !within(&ab, e) {
                        return None;
                    }
                    let be = c.tensor_obj(b, e).ok()?;
                    let ida = d.identity(&f.obj(a).ok()?).ok()?;
                    let ide = d.identity(&f.obj(e).ok()?).ok()?;
                    let left = d.tensor_mor(&lam(a, b)?, &ide).ok()?;
                    let right = d.tensor_mor(&ida, &lam(b, e)?).ok()?;
                    let lhs = d.compose(&left, &lam(&ab, e)?).ok()?;
                    let rhs = d.compose(&right, &lam(a, &be)?).ok()?;
                    Some(lhs == rhs)
                };
                if let Some(ok) = check() {
                    law.check(ok, || {
                        format!(
                            "associativity coherence fails at ({}, {}, {})",
                            show_c(a),
                            show_c(b),
                            show_c(e)
                        )
                    });
                }
            }
        }
    }
    report.push(law);
    report
}

/// Checks typing, naturality, unit and monoidality of `alpha`.
pub fn validate_nat_trans(alpha: &MonoidalNatTrans, depth: usize) -> CheckReport {
    let (f, g) = (&alpha.source, &alpha.target);
    let (c, d) = (&*f.domain, &*f.codomain);
    let objs = c.objects().enumerate(depth);
    let show_c = |x: &Element| c.objects().show(x);
    let mut report = CheckReport::new();

    let comp = |x: &Element| -> Option<Morphism> {
        let a = alpha.at(x).ok()?;
        typed(d, &a, &f.obj(x).ok()?, &g.obj(x).ok()?).then_some(a)
    };
    let mut law = Law::new(NAT_TRANS_LAWS[0], depth);
    for x in &objs {
        law.check(comp(x).is_some_and(|a| d.is_iso(&a)), || {
            format!("α({}) is mistyped or not invertible", show_c(x))
        });
    }
    report.push(law);

    let mut law = Law::new(NAT_TRANS_LAWS[1], depth);
    match c.morphisms(depth) {
        Ok(mors) => {
            for m in &mors {
                let check = || -> Option<bool> {
                    let (a_s, a_t) = (comp(&m.source)?, comp(&m.target)?);
                    let (fm, gm) = (f.mor(m).ok()?, g.mor(m).ok()?);
                    Some(d.compose(&a_t, &fm).ok()? == d.compose(&gm, &a_s).ok()?)
                };
                match check() {
                    Some(ok) => {
                        law.check(ok, || format!("naturality fails at {}", c.show_mor(m)));
                    }
                    None if comp(&m.source).is_some() && comp(&m.target).is_some() => {
                        law.fail(format!("naturality square undefined at {}", c.show_mor(m)));
                    }
                    None => {}
                }
            }
        }
        Err(e) => law.fail(format!("domain homs unavailable: {e}")),
    }
    report.push(law);

    let mut law = Law::new(NAT_TRANS_LAWS[2], depth);
    let u = c.objects().unit();
    if let Some(a) = comp(&u) {
        law.check(d.identity(&a.source).ok() == Some(a), || "α(unit) is not the identity".into());
    }
    report.push(law);

    // λ_G(a, b) ∘ α(ab) = (α a ⊗ α b) ∘ λ_F(a, b)
    let mut law = Law::new(NAT_TRANS_LAWS[3], depth);
    for a in &objs {
        for b in &objs {
            let check = || -> Result<Option<bool>> {
                let ab = c.tensor_obj(a, b)?;
                let (Some(aa), Some(ab_), Some(aab)) = (comp(a), comp(b), comp(&ab)) else {
                    return Ok(None);
                };
                let lhs = d.compose(&g.lambda_at(a, b)?, &aab)?;
                let rhs = d.compose(&d.tensor_mor(&aa, &ab_)?, &f.lambda_at(a, b)?)?;
                Ok(Some(lhs == rhs))
            };
            match check() {
                Ok(Some(ok)) => {
                    law.check(ok, || format!("monoidality fails at ({}, {})", show_c(a), show_c(b)));
                }
                Ok(None) => {}
                Err(e) => law.fail(format!("monoidality square at ({}, {}): {e}", show_c(a), show_c(b))),
            }
        }
    }
    report.push(law);
    report
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monoid::catalog::zn;
    use crate::monoid::{Monoid, MonoidHom};
    use crate::permcat::{CatRef, Payload};

    #[test]
    fn identity_functor_and_transformation_pass() {
        let c: CatRef = Arc::new(PermCat::deloop(Monoid::trivial(), zn(3)).unwrap());
        let id = SmFunctor::identity(&c);
        let r = validate_functor(&id, 3);
        assert!(r.all_pass(), "{r}");
        assert_eq!(r.results.len(), FUNCTOR_LAWS.len());
        let r = validate_nat_trans(&MonoidalNatTrans::identity(&id), 3);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn collapse_of_a_free_discrete_category() {
        let fs = Monoid::free(&["s"]).unwrap();
        let c: CatRef = Arc::new(PermCat::discrete(fs.clone()).unwrap());
        let one: CatRef = Arc::new(PermCat::terminal());
        let d = one.clone();
        let f = SmFunctor::strict(c, one, MonoidHom::trivial(&fs, &Monoid::trivial()), move |_| {
            d.identity(&Monoid::trivial().unit())
        });
        assert!(validate_functor(&f, 3).all_pass());
        assert!(f.is_strict(3));
    }

    #[test]
    fn repointed_image_breaks_functoriality() {
        let c: CatRef = Arc::new(PermCat::deloop(Monoid::trivial(), zn(3)).unwrap());
        let e = Monoid::trivial().unit();
        let id = SmFunctor::identity(&c);
        let one = Morphism::new(e.clone(), e.clone(), Payload::Group(1));
        let two = Morphism::new(e.clone(), e, Payload::Group(2));
        let bad = id.perturbed(one, two);
        let r = validate_functor(&bad, 2);
        assert!(!r.passes("functor_composition"), "{r}");
    }
}
