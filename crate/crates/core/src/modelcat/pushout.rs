use std::collections::BTreeMap;
use std::sync::Arc;

use super::FreeCofibrationDatum;
use crate::error::{Error, Result};
use crate::gabriel::induced_category;
use crate::monoid::{Element, Letter, Monoid, MonoidHom, MonoidKind, Side};
use crate::permcat::{CatRef, Morphism};
use crate::report::{CheckReport, Law};
use crate::rule::{memo_obj, memo_pair, ComponentFn, ObjFn, ObjectMap, PairFn};
use crate::smfunctor::{
    transport_functor, validate_functor, MonoidalNatTrans, SectionDatum, SmFunctor,
};

/// The pushout of an acyclic fibration `G : A -> B` (with a chosen section)
/// along a free cofibration `i_A : A -> C`.
#[derive(Clone)]
pub struct PushoutResult {
    pub section: SectionDatum,
    pub cofibration: FreeCofibrationDatum,
    /// `Ob(B) ∨ F(V)`.
    pub objects: Monoid,
    pub category: CatRef,
    /// `B -> G(S^F)`.
    pub gamma: SmFunctor,
    /// `C -> G(S^F)`.
    pub p: SmFunctor,
    /// `Ob(S^F) : Ob(B) ∨ F(V) -> Ob(C)`.
    pub q: ObjFn,
    pub lambda: PairFn,
    pub s_c: SmFunctor,
    pub delta: MonoidalNatTrans,
}

impl std::fmt::Debug for PushoutResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PushoutResult({})", self.category)
    }
}

impl PushoutResult {
    pub fn fibration(&self) -> &SmFunctor {
        &self.section.fibration
    }
}

fn letters_of(z: &Element) -> Vec<Letter> {
    match z {
        Element::Alt(ls) => ls.clone(),
        _ => Vec::new(),
    }
}

/// Builds `G(S^F)` with its legs `Γ` and `P`.
pub fn pushout_free(
    section: &SectionDatum,
    cofibration: &FreeCofibrationDatum,
    depth: usize,
) -> Result<PushoutResult> {
    let g = section.fibration.clone();
    if g.domain.objects() != cofibration.a.objects() {
        return Err(Error::InvalidFunctor(
            "the fibration and the cofibration start from different categories".into(),
        ));
    }
    let g_obj = g
        .objects
        .as_hom()
        .ok_or_else(|| Error::InvalidFunctor("the fibration is not strict".into()))?
        .clone();
    let (b_cat, c_cat) = (g.codomain.clone(), cofibration.c.clone());
    let z = Monoid::coproduct_of(b_cat.objects().clone(), cofibration.free_part().clone());
    let i_a = cofibration.inclusion.clone();
    let v_incl = cofibration.v_inclusion().clone();

    // q: B-letters through the section, V-letters as themselves
    let q: ObjFn = {
        let (sec, i_a, v_incl, c_cat) = (section.clone(), i_a.clone(), v_incl.clone(), c_cat.clone());
        memo_obj(Arc::new(move |zz: &Element| {
            let mut parts = Vec::new();
            for l in letters_of(zz) {
                parts.push(match l.side {
                    Side::Left => i_a.obj(&sec.s(&l.elem)?)?,
                    Side::Right => v_incl.apply(&l.elem)?,
                });
            }
            c_cat.objects().product(&parts)
        }))
    };

    // λ^{S^F}: identity except one λ^S factor at a B-B junction
    let lambda: PairFn = {
        let (sec, i_a, c_cat, q, z) = (section.clone(), i_a.clone(), c_cat.clone(), q.clone(), z.clone());
        memo_pair(Arc::new(move |z1: &Element, z2: &Element| {
            let (l1, l2) = (letters_of(z1), letters_of(z2));
            match (l1.last(), l2.first()) {
                (Some(a), Some(b)) if a.side == Side::Left && b.side == Side::Left => {
                    let head = z.normalize(l1[..l1.len() - 1].to_vec())?;
                    let tail = z.normalize(l2[1..].to_vec())?;
                    let core = i_a.mor(&sec.section.lambda_at(&a.elem, &b.elem)?)?;
                    let left = c_cat.identity(&q(&head)?)?;
                    let right = c_cat.identity(&q(&tail)?)?;
                    c_cat.tensor_all(&[left, core, right])
                }
                _ => c_cat.identity(&q(&z.multiply(z1, z2)?)?),
            }
        }))
    };

    let category: CatRef = Arc::new(induced_category(
        z.clone(),
        c_cat.clone(),
        ObjectMap::Rule(q.clone()),
        Some(lambda.clone()),
    )?);

    // δ(c) : c -> S_C(c), tensor word of i_A(ε_S(a))^-1 and identities
    let delta_fn: ComponentFn = {
        let (sec, i_a, cof, c_cat, a_cat) =
            (section.clone(), i_a.clone(), cofibration.clone(), c_cat.clone(), g.domain.clone());
        Arc::new(move |c: &Element| {
            let mut parts = Vec::new();
            for l in cof.letters(c)? {
                parts.push(match l.side {
                    Side::Left => i_a.mor(&a_cat.inverse(&sec.epsilon(&l.elem)?)?)?,
                    Side::Right => c_cat.identity(&cof.v_inclusion().apply(&l.elem)?)?,
                });
            }
            c_cat.tensor_all(&parts)
        })
    };
    let s_c_obj = {
        let (d, c_cat) = (delta_fn.clone(), c_cat.clone());
        ObjectMap::rule(move |c: &Element| {
            let m = d(c)?;
            c_cat.objects().check(&m.target)?;
            Ok(m.target)
        })
    };
    let (s_c, delta) = transport_functor(&c_cat, s_c_obj, delta_fn, depth)?;

    let z_left = MonoidHom::inclusion(&z, Side::Left)?;
    let z_right = MonoidHom::inclusion(&z, Side::Right)?;
    let p_obj = match c_cat.objects().kind() {
        MonoidKind::Coproduct { .. } => {
            MonoidHom::pair(c_cat.objects(), z_left.after(&g_obj)?, z_right.clone())?
        }
        _ => z_right.clone(),
    };
    let p = {
        let (s_c, p_obj) = (s_c.clone(), p_obj.clone());
        SmFunctor::strict(c_cat.clone(), category.clone(), p_obj.clone(), move |f: &Morphism| {
            Ok(Morphism::lifted(p_obj.apply(&f.source)?, p_obj.apply(&f.target)?, s_c.mor(f)?))
        })
    };
    let gamma = {
        let (sec, i_a, zl) = (section.clone(), i_a.clone(), z_left.clone());
        SmFunctor::strict(b_cat, category.clone(), z_left, move |f: &Morphism| {
            let base = i_a.mor(&sec.section.mor(f)?)?;
            Ok(Morphism::lifted(zl.apply(&f.source)?, zl.apply(&f.target)?, base))
        })
    };
    Ok(PushoutResult {
        section: section.clone(),
        cofibration: cofibration.clone(),
        objects: z,
        category,
        gamma,
        p,
        q,
        lambda,
        s_c,
        delta,
    })
}

fn hom_of(f: &SmFunctor, what: &str) -> Result<MonoidHom> {
    f.objects
        .as_hom()
        .cloned()
        .ok_or_else(|| Error::InvalidFunctor(format!("{what} is not strict")))
}

/// `outer ∘ inner` and `outer' ∘ inner'` agree on enumerated objects and
/// morphisms of the shared domain; returns the first disagreement.
fn first_disagreement(
    left: (&SmFunctor, &SmFunctor),
    right: (&SmFunctor, &SmFunctor),
    depth: usize,
) -> Result<Option<String>> {
    let dom = &left.1.domain;
    for x in dom.objects().enumerate(depth) {
        let l = left.0.obj(&left.1.obj(&x)?)?;
        let r = right.0.obj(&right.1.obj(&x)?)?;
        if l != r {
            return Ok(Some(format!("object {}", dom.objects().show(&x))));
        }
    }
    for m in dom.morphisms(depth)? {
        let l = left.0.mor(&left.1.mor(&m)?)?;
        let r = right.0.mor(&right.1.mor(&m)?)?;
        if l != r {
            return Ok(Some(format!("morphism {}", dom.show_mor(&m))));
        }
    }
    Ok(None)
}

impl PushoutResult {
    /// `P ∘ i_A = Γ ∘ G` on enumerated data.
    pub fn square_law(&self, depth: usize) -> Law {
        let mut law = Law::new("square_commutes", depth);
        match first_disagreement(
            (&self.p, &self.cofibration.inclusion),
            (&self.gamma, self.fibration()),
            depth,
        ) {
            Ok(None) => {
                law.check(true, String::new);
            }
            Ok(Some(w)) => law.fail(format!("P ∘ i_A != Γ ∘ G at {w}")),
            Err(e) => law.fail(e.to_string()),
        }
        law
    }
}

/// The strict functor `L : G(S^F) -> X` induced by a cocone `R : C -> X`,
/// `T : B -> X`.
pub fn universal_lift(
    res: &PushoutResult,
    r: &SmFunctor,
    t: &SmFunctor,
    depth: usize,
) -> Result<SmFunctor> {
    if let Some(w) = first_disagreement((r, &res.cofibration.inclusion), (t, res.fibration()), depth)? {
        return Err(Error::NonCommutingSquare(format!("R ∘ i_A != T ∘ G at {w}")));
    }
    let x = r.codomain.clone();
    let l_obj = MonoidHom::pair(
        &res.objects,
        hom_of(t, "T")?,
        hom_of(r, "R")?.after(res.cofibration.v_inclusion())?,
    )?;
    let zs = res.objects.enumerate(depth);
    for z1 in &zs {
        for z2 in &zs {
            let image = r.mor(&(res.lambda)(z1, z2)?)?;
            if image.source != image.target || x.identity(&image.source)? != image {
                return Err(Error::InvalidFunctor(format!(
                    "R(λ({}, {})) is not an identity",
                    res.objects.show(z1),
                    res.objects.show(z2)
                )));
            }
        }
    }
    let rr = r.clone();
    Ok(SmFunctor::strict(res.category.clone(), x, l_obj, move |m: &Morphism| rr.mor(m.base()?)))
}

/// Every single-morphism perturbation of `lift` breaks `L ∘ P = R` or
/// `L ∘ Γ = T`. Each enumerated morphism of `G(S^F)` must be hit by `P` or
/// `Γ` on enumerated data for the check to conclude.
pub fn lift_uniqueness(
    res: &PushoutResult,
    lift: &SmFunctor,
    r: &SmFunctor,
    t: &SmFunctor,
    depth: usize,
) -> Law {
    let mut law = Law::new("lift_unique", depth);
    let run = |law: &mut Law| -> Result<()> {
        // what each hit morphism must be sent to
        let mut forced: BTreeMap<Morphism, Vec<Morphism>> = BTreeMap::new();
        for f in res.p.domain.morphisms(depth)? {
            forced.entry(res.p.mor(&f)?).or_default().push(r.mor(&f)?);
        }
        for f in res.gamma.domain.morphisms(depth)? {
            forced.entry(res.gamma.mor(&f)?).or_default().push(t.mor(&f)?);
        }
        let x = &lift.codomain;
        for m in res.category.morphisms(depth)? {
            let current = lift.mor(&m)?;
            let alternatives: Vec<Morphism> = x
                .hom(&lift.obj(&m.source)?, &lift.obj(&m.target)?)?
                .into_iter()
                .filter(|a| *a != current)
                .collect();
            if alternatives.is_empty() {
                law.check(true, String::new);
                continue;
            }
            let Some(required) = forced.get(&m) else {
                law.fail(format!("{} is not reached by P or Γ", res.category.show_mor(&m)));
                continue;
            };
            for alt in alternatives {
                let perturbed = lift.perturbed(m.clone(), alt.clone());
                let broken = required.iter().any(|want| perturbed.mor(&m).as_ref() != Ok(want));
                law.check(broken, || {
                    format!(
                        "sending {} to {} keeps both triangles",
                        res.category.show_mor(&m),
                        x.show_mor(&alt)
                    )
                });
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut law) {
        law.fail(e.to_string());
    }
    law
}

pub const LIFT_LAWS: [&str; 4] = ["lift_strict", "lift_after_p", "lift_after_gamma", "lift_unique"];

/// Strictness, both triangles and uniqueness of a lift.
pub fn verify_lift(
    res: &PushoutResult,
    lift: &SmFunctor,
    r: &SmFunctor,
    t: &SmFunctor,
    depth: usize,
) -> CheckReport {
    let mut report = CheckReport::new();
    let mut law = Law::new(LIFT_LAWS[0], depth);
    let v = validate_functor(lift, depth);
    law.check(lift.is_strict(depth) && v.all_pass(), || {
        format!("not strict or fails {}", v.failed_laws().join(", "))
    });
    report.push(law);
    for (name, leg, target) in [(LIFT_LAWS[1], &res.p, r), (LIFT_LAWS[2], &res.gamma, t)] {
        let mut law = Law::new(name, depth);
        let id = SmFunctor::identity(&target.codomain);
        match first_disagreement((lift, leg), (&id, target), depth) {
            Ok(None) => {
                law.check(true, String::new);
            }
            Ok(Some(w)) => law.fail(w),
            Err(e) => law.fail(e.to_string()),
        }
        report.push(law);
    }
    report.push(lift_uniqueness(res, lift, r, t, depth));
    report
}
