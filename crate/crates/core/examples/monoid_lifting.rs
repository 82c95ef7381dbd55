//! Diagonal fillers for squares of monoids with a free monoid on the left.

use std::collections::BTreeMap;

use permcat::monoid::catalog::{z2, zn};
use permcat::monoid::{codiagonal, counit_over, solve_lifting, sym, Element, LiftingSquare, Monoid, MonoidHom, Side};

fn main() -> permcat::Result<()> {
    // ∗ -> Z4, ∗ -> F{x, y}, Z4 -> Z2 reduction, F{x, y} -> Z2
    let star = Monoid::trivial();
    let (z4, free) = (zn(4), Monoid::free(&["x", "y"])?);
    let right = MonoidHom::from_table(&z4, &z2(), (0..4).map(|k| Element::Finite(k % 2)).collect())?;
    let images = BTreeMap::from([(sym("x"), Element::Finite(1)), (sym("y"), Element::Finite(0))]);
    let bottom = MonoidHom::from_generators(&free, &z2(), images)?;
    let sq = LiftingSquare {
        top: MonoidHom::trivial(&star, &z4),
        left: MonoidHom::trivial(&star, &free),
        right,
        bottom,
    };
    let lift = solve_lifting(&sq, 4)?.expect("a free domain always lifts");
    for w in free.enumerate(2) {
        println!("{} -> {}", free.show(&w), z4.show(&lift.apply(&w)?));
    }

    // the codiagonal ∗ ∨ F(Z2) -> Z2 is onto, yet no filler exists for the
    // identity of Z2: a lift of `a` would square to the unit in a free monoid
    let eps = counit_over(&z2(), &z2().enumerate(1))?;
    let right = codiagonal(&MonoidHom::trivial(&star, &z2()), &eps)?;
    let sq = LiftingSquare {
        top: MonoidHom::inclusion(right.domain(), Side::Left)?,
        left: MonoidHom::trivial(&star, &z2()),
        right,
        bottom: MonoidHom::identity(&z2()),
    };
    println!("Z2 against its free cover: {:?}", solve_lifting(&sq, 6)?.map(|_| "lifted"));
    Ok(())
}
