//! Factoring a functor as an identity-on-objects part followed by a fully
//! faithful one.

use std::sync::Arc;

use permcat::functors::{from_terminal, relabel};
use permcat::gabriel::{gabriel_factorize, verify_factorization};
use permcat::monoid::catalog::{z2, zn};
use permcat::monoid::{Monoid, MonoidHom};
use permcat::permcat::{CatRef, PermCat};
use permcat::smfunctor::check_equivalence;

fn main() -> permcat::Result<()> {
    // Discrete(Z2) -> Chaotic(Z2): the induced category is chaotic
    let a: CatRef = Arc::new(PermCat::discrete(z2())?);
    let b: CatRef = Arc::new(PermCat::chaotic(z2()));
    let f = relabel(&a, &b, MonoidHom::identity(&z2()))?;
    let fac = gabriel_factorize(&f, 3)?;
    println!("G(F) = {}", fac.category);
    for x in z2().enumerate(0) {
        for y in z2().enumerate(0) {
            println!("  |hom({}, {})| = {}", z2().show(&x), z2().show(&y), fac.category.hom(&x, &y)?.len());
        }
    }
    print!("{}", verify_factorization(&f, &fac, 3));

    // 𝟙 -> Deloop({e}, Z3): one object with three endomorphisms
    let d: CatRef = Arc::new(PermCat::deloop(Monoid::trivial(), zn(3))?);
    let f = from_terminal(&d);
    let fac = gabriel_factorize(&f, 3)?;
    let e = Monoid::trivial().unit();
    println!("|End(unit)| in G(F) = {}", fac.category.hom(&e, &e)?.len());
    println!("Δ fully faithful: {}", check_equivalence(&fac.delta, 3).fully_faithful.label());
    Ok(())
}
