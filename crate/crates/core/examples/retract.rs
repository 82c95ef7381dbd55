//! Recognizing cofibrations by exhibiting them as retracts of free ones.

use std::sync::Arc;

use permcat::functors::relabel;
use permcat::modelcat::{build_retract, recognize_cofibration, verify_retract};
use permcat::monoid::catalog::z2;
use permcat::monoid::{Monoid, MonoidHom};
use permcat::permcat::{CatRef, PermCat};
use permcat::smfunctor::SmFunctor;

fn main() -> permcat::Result<()> {
    // the identity on objects Discrete(Z2) -> Chaotic(Z2)
    let a: CatRef = Arc::new(PermCat::discrete(z2())?);
    let b: CatRef = Arc::new(PermCat::chaotic(z2()));
    let f = relabel(&a, &b, MonoidHom::identity(&z2()))?;
    let l = recognize_cofibration(&f, 2)?.expect("an inclusion is a cofibration");
    let w = build_retract(&f, l, 2)?;
    println!("E = {}", w.e);
    print!("{}", verify_retract(&w, 2));

    // 𝟙 -> Discrete(Z2) picks out the unit: Z2 is not a retract of a free monoid
    let one: CatRef = Arc::new(PermCat::terminal());
    let c: CatRef = Arc::new(PermCat::discrete(z2())?);
    let cc = c.clone();
    let g = SmFunctor::strict(one, c, MonoidHom::trivial(&Monoid::trivial(), &z2()), move |_| {
        cc.identity(&cc.objects().unit())
    });
    let found = recognize_cofibration(&g, 6)?;
    println!("𝟙 -> Discrete(Z2): {}", if found.is_some() { "cofibration" } else { "no lift within depth 6" });
    Ok(())
}
