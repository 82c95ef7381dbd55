//! Moving a monoidal structure along invertible components.

use std::sync::Arc;

use permcat::monoid::catalog::{z2, zn};
use permcat::monoid::{Element, Monoid, MonoidHom};
use permcat::permcat::{CatRef, Morphism, Payload, PermCat};
use permcat::rule::{ComponentFn, ObjectMap};
use permcat::smfunctor::{transport_functor, transport_lambda, validate_functor, validate_nat_trans, SmFunctor};

fn main() -> permcat::Result<()> {
    // one object, three automorphisms: α(e) = k makes λ(e, e) = k
    let c: CatRef = Arc::new(PermCat::deloop(Monoid::trivial(), zn(3))?);
    let id = SmFunctor::identity(&c);
    let e = Monoid::trivial().unit();
    for k in 0..3 {
        let alpha: ComponentFn = Arc::new(move |x: &Element| Ok(Morphism::new(x.clone(), x.clone(), Payload::Group(k))));
        let (g, nat) = transport_lambda(&id, id.objects.clone(), id.morphisms.clone(), alpha, 2)?;
        println!(
            "α(e) = {k}: λ(e, e) = {}, α monoidal: {}",
            c.show_mor(&g.lambda_at(&e, &e)?),
            validate_nat_trans(&nat, 2).passes("monoidality")
        );
    }

    // conjugating Deloop(Z2, Z3) by δ(a) = 1
    let c: CatRef = Arc::new(PermCat::deloop(z2(), zn(3))?);
    let cc = c.clone();
    let delta: ComponentFn = Arc::new(move |x: &Element| {
        if cc.objects().is_unit(x) {
            cc.identity(x)
        } else {
            Ok(Morphism::new(x.clone(), x.clone(), Payload::Group(1)))
        }
    });
    let (s, delta) = transport_functor(&c, ObjectMap::Hom(MonoidHom::identity(&z2())), delta, 2)?;
    let a = Element::Finite(1);
    println!("λ_S(a, a) = {}", c.show_mor(&s.lambda_at(&a, &a)?));
    print!("{}", validate_functor(&s, 2));
    print!("{}", validate_nat_trans(&delta, 2));
    Ok(())
}
