//! Pushing a free cofibration along an acyclic fibration, then lifting a cocone.

use std::sync::Arc;

use permcat::functors::{relabel, to_terminal};
use permcat::modelcat::{check_pushout, pushout_free, universal_lift, verify_lift, FreeCofibrationDatum};
use permcat::monoid::catalog::z2;
use permcat::monoid::{Monoid, MonoidHom, Side};
use permcat::permcat::{CatRef, PermCat};
use permcat::smfunctor::find_section;

fn main() -> permcat::Result<()> {
    // collapse Chaotic(Z2) -> 𝟙 along the inclusion into Chaotic(Z2 ∨ F{v})
    let a: CatRef = Arc::new(PermCat::chaotic(z2()));
    let fv = Monoid::free(&["v"])?;
    let c: CatRef = Arc::new(PermCat::chaotic(Monoid::coproduct_of(z2(), fv.clone())));
    let inclusion = relabel(&a, &c, MonoidHom::inclusion(c.objects(), Side::Left)?)?;
    let cof = FreeCofibrationDatum::new(inclusion)?;
    let sec = find_section(&to_terminal(&a), 3)?;
    let res = pushout_free(&sec, &cof, 3)?;
    println!("pushout objects: {}", res.objects);
    for x in res.objects.enumerate(2) {
        println!("  {} <- {}", res.objects.show(&x), c.objects().show(&(res.q)(&x)?));
    }
    print!("{}", check_pushout(&res, 3));

    // the cocone R: C -> Chaotic(F{v}) forgetting Z2, T: 𝟙 -> Chaotic(F{v})
    let x: CatRef = Arc::new(PermCat::chaotic(fv.clone()));
    let r_obj = MonoidHom::pair(c.objects(), MonoidHom::trivial(&z2(), &fv), MonoidHom::identity(&fv))?;
    let r = relabel(&c, &x, r_obj)?;
    let t = relabel(&res.gamma.domain, &x, MonoidHom::trivial(&Monoid::trivial(), &fv))?;
    let lift = universal_lift(&res, &r, &t, 2)?;
    print!("{}", verify_lift(&res, &lift, &r, &t, 2));
    Ok(())
}
