use std::sync::Arc;

use permcat::functors::{relabel, to_terminal};
use permcat::modelcat::{
    check_pushout, pushout_free, universal_lift, verify_lift, FreeCofibrationDatum,
};
use permcat::monoid::catalog::z2;
use permcat::monoid::{Element, Monoid, MonoidHom, Side};
use permcat::permcat::{validate, CatRef, PermCat};
use permcat::smfunctor::{check_equivalence, find_section, SmFunctor};

fn chaotic(m: Monoid) -> CatRef {
    Arc::new(PermCat::chaotic(m))
}

fn inclusion_into(a: &CatRef, c: &CatRef) -> FreeCofibrationDatum {
    let h = MonoidHom::inclusion(c.objects(), Side::Left).unwrap();
    FreeCofibrationDatum::new(relabel(a, c, h).unwrap()).unwrap()
}

#[test]
fn pushout_along_identity_of_terminal() {
    let one: CatRef = Arc::new(PermCat::terminal());
    let v = Monoid::free(&["v"]).unwrap();
    let c: CatRef = Arc::new(PermCat::discrete(v).unwrap());
    let i_a = FreeCofibrationDatum::new(permcat::functors::from_terminal(&c)).unwrap();
    let sec = find_section(&SmFunctor::identity(&one), 3).unwrap();
    let res = pushout_free(&sec, &i_a, 3).unwrap();
    assert!(check_pushout(&res, 3).all_pass());
    assert!(validate(&res.category, 2).all_pass());
    let objs = res.objects.enumerate(3);
    for a in &objs {
        for b in &objs {
            let n = res.category.hom(a, b).unwrap().len();
            assert_eq!(n, usize::from(a == b));
        }
    }
}

#[test]
fn collapsing_z2_gives_chaotic_free_category() {
    let a = chaotic(z2());
    let cm = Monoid::coproduct_of(z2(), Monoid::free(&["v"]).unwrap());
    let c = chaotic(cm);
    let i_a = inclusion_into(&a, &c);
    let g = to_terminal(&a);
    let sec = find_section(&g, 3).unwrap();
    let res = pushout_free(&sec, &i_a, 3).unwrap();

    let r = check_pushout(&res, 3);
    assert!(r.all_pass(), "{r}");
    assert!(check_equivalence(&res.p, 3).is_equivalence());
    assert!(validate(&res.category, 2).all_pass());
    for x in res.objects.enumerate(2) {
        for y in res.objects.enumerate(2) {
            assert_eq!(res.category.hom(&x, &y).unwrap().len(), 1);
        }
    }

    // canonical cocone
    let lift = universal_lift(&res, &res.p, &res.gamma, 2).unwrap();
    let rep = verify_lift(&res, &lift, &res.p, &res.gamma, 2);
    assert!(rep.all_pass(), "{rep}");
    for m in res.category.morphisms(2).unwrap() {
        assert_eq!(lift.mor(&m).unwrap(), m);
    }

    // collapse to the terminal category
    let r_to_one = to_terminal(&c);
    let t_to_one = to_terminal(&res.gamma.domain);
    let lift = universal_lift(&res, &r_to_one, &t_to_one, 2).unwrap();
    assert!(verify_lift(&res, &lift, &r_to_one, &t_to_one, 2).all_pass());

    // onto Chaotic(F(v)): R kills the Z2 letters, T is the unit
    let fv = Monoid::free(&["v"]).unwrap();
    let x = chaotic(fv.clone());
    let r_obj = MonoidHom::pair(
        c.objects(),
        MonoidHom::trivial(&z2(), &fv),
        MonoidHom::identity(&fv),
    )
    .unwrap();
    let r = relabel(&c, &x, r_obj).unwrap();
    let t = relabel(&res.gamma.domain, &x, MonoidHom::trivial(&Monoid::trivial(), &fv)).unwrap();
    let lift = universal_lift(&res, &r, &t, 2).unwrap();
    assert!(verify_lift(&res, &lift, &r, &t, 2).all_pass());
    let v = Element::Alt(vec![permcat::monoid::Letter::new(Side::Right, Element::word(&["v"]))]);
    assert_eq!(lift.obj(&v).unwrap(), Element::word(&["v"]));
}

#[test]
fn pushout_along_identity_reproduces_c() {
    let a = chaotic(z2());
    let cm = Monoid::coproduct_of(z2(), Monoid::free(&["v"]).unwrap());
    let c = chaotic(cm.clone());
    let i_a = inclusion_into(&a, &c);
    let sec = find_section(&SmFunctor::identity(&a), 3).unwrap();
    let res = pushout_free(&sec, &i_a, 3).unwrap();
    assert!(check_pushout(&res, 3).all_pass());
    for x in cm.enumerate(3) {
        assert_eq!((res.q)(&res.p.obj(&x).unwrap()).unwrap(), x);
    }
}

#[test]
fn non_commuting_cocone_is_rejected() {
    let a = chaotic(z2());
    let cm = Monoid::coproduct_of(z2(), Monoid::free(&["v"]).unwrap());
    let c = chaotic(cm.clone());
    let i_a = inclusion_into(&a, &c);
    let sec = find_section(&to_terminal(&a), 3).unwrap();
    let res = pushout_free(&sec, &i_a, 3).unwrap();
    // R remembers the Z2 letter, T cannot
    let x = chaotic(z2());
    let r_obj = MonoidHom::pair(&cm, MonoidHom::identity(&z2()), MonoidHom::trivial(&Monoid::free(&["v"]).unwrap(), &z2())).unwrap();
    let r = relabel(&c, &x, r_obj).unwrap();
    let t = relabel(&res.gamma.domain, &x, MonoidHom::trivial(&Monoid::trivial(), &z2())).unwrap();
    assert!(universal_lift(&res, &r, &t, 2).is_err());
}
