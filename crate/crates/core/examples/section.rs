//! Sections of acyclic fibrations and their counits.

use std::sync::Arc;

use permcat::functors::to_terminal;
use permcat::monoid::catalog::z2;
use permcat::monoid::Monoid;
use permcat::permcat::{CatRef, PermCat};
use permcat::smfunctor::{find_section, is_acyclic_fibration, validate_nat_trans};

fn main() -> permcat::Result<()> {
    // Chaotic(Z2 ∨ F{v}) -> 𝟙 is an acyclic fibration
    let m = Monoid::coproduct_of(z2(), Monoid::free(&["v"])?);
    let a: CatRef = Arc::new(PermCat::chaotic(m.clone()));
    let g = to_terminal(&a);
    println!("acyclic fibration: {:?}", is_acyclic_fibration(&g, 3)?);
    let sec = find_section(&g, 3)?;
    let unit = Monoid::trivial().unit();
    println!("s(unit) = {}", m.show(&sec.s(&unit)?));
    for x in m.enumerate(2) {
        println!("ε({}) = {}", m.show(&x), a.show_mor(&sec.epsilon(&x)?));
    }
    print!("{}", validate_nat_trans(&sec.counit, 2));

    // Discrete(Z2) -> 𝟙 is not full on objects up to iso
    let d: CatRef = Arc::new(PermCat::discrete(z2())?);
    println!("Discrete(Z2) -> 𝟙: {:?}", is_acyclic_fibration(&to_terminal(&d), 3)?);
    Ok(())
}
