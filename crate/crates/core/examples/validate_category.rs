//! The law checker on standard categories and on a broken table.

use permcat::monoid::catalog::{z2, zn};
use permcat::monoid::Monoid;
use permcat::permcat::controls::negative_controls;
use permcat::permcat::{validate, PermCat};

fn main() -> permcat::Result<()> {
    let cats = [
        PermCat::discrete(z2())?,
        PermCat::chaotic(Monoid::coproduct_of(z2(), Monoid::free(&["v"])?)),
        PermCat::deloop(Monoid::trivial(), zn(3))?,
    ];
    for c in &cats {
        let r = validate(c, 3);
        println!("{c}: {}", if r.all_pass() { "all laws hold" } else { "FAILS" });
    }

    let controls = negative_controls();
    let broken = PermCat::table(controls["interchange"].clone());
    print!("{}", validate(&broken, 2));
    Ok(())
}
