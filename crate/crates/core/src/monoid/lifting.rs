//! Bounded search for diagonal fillers of commuting squares of monoids.

use std::collections::BTreeMap;

use super::{Element, Monoid, MonoidHom, MonoidKind};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surjectivity {
    Yes,
    NotWithinDepth,
}

/// Whether every element of the (finite) codomain is the image of a domain
/// element of length at most `depth`.
pub fn is_surjective(h: &MonoidHom, depth: usize) -> Result<Surjectivity> {
    let codomain = h
        .codomain()
        .as_finite()
        .ok_or_else(|| Error::InvalidHom(format!("codomain {} is not finite", h.codomain())))?;
    let mut hit = vec![false; codomain.order()];
    for x in h.domain().enumerate(depth) {
        if let Element::Finite(i) = h.apply(&x)? {
            hit[i] = true;
        }
    }
    Ok(if hit.iter().all(|&b| b) {
        Surjectivity::Yes
    } else {
        Surjectivity::NotWithinDepth
    })
}

/// A commuting square
///
/// ```text
///   A --top--> N
///   |          |
///  left      right
///   v          v
///   M -bottom-> Q
/// ```
#[derive(Clone, Debug)]
pub struct LiftingSquare {
    pub top: MonoidHom,
    pub left: MonoidHom,
    pub right: MonoidHom,
    pub bottom: MonoidHom,
}

impl LiftingSquare {
    fn check_shape(&self) -> Result<()> {
        let ok = self.top.domain() == self.left.domain()
            && self.top.codomain() == self.right.domain()
            && self.left.codomain() == self.bottom.domain()
            && self.right.codomain() == self.bottom.codomain();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidHom("square legs do not match".into()))
        }
    }

    fn check_commutes(&self, depth: usize) -> Result<()> {
        for a in self.top.domain().enumerate(depth) {
            let via_top = self.right.apply(&self.top.apply(&a)?)?;
            let via_left = self.bottom.apply(&self.left.apply(&a)?)?;
            if via_top != via_left {
                return Err(Error::NonCommutingSquare(format!(
                    "at {}",
                    self.top.domain().show(&a)
                )));
            }
        }
        Ok(())
    }

    /// Whether `lift` fills the square on all elements up to `depth`.
    pub fn is_filled_by(&self, lift: &MonoidHom, depth: usize) -> Result<bool> {
        for a in self.left.domain().enumerate(depth) {
            if lift.apply(&self.left.apply(&a)?)? != self.top.apply(&a)? {
                return Ok(false);
            }
        }
        for m in self.bottom.domain().enumerate(depth) {
            if self.right.apply(&lift.apply(&m)?)? != self.bottom.apply(&m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Searches for `L : M -> N` with `L ∘ left = top` and `right ∘ L = bottom`,
/// trying letter images drawn from `N.enumerate(depth)` in order. `None`
/// means no lift exists whose letter images all have length at most `depth`.
pub fn solve_lifting(square: &LiftingSquare, depth: usize) -> Result<Option<MonoidHom>> {
    square.check_shape()?;
    square.check_commutes(depth)?;
    let pool = square.right.domain().enumerate(depth);
    let mut accept = |l: &MonoidHom| square.is_filled_by(l, depth);
    search(
        square.bottom.domain(),
        &square.bottom,
        &square.right,
        &pool,
        &mut accept,
    )
}

type Accept<'a> = dyn FnMut(&MonoidHom) -> Result<bool> + 'a;

fn search(
    m: &Monoid,
    bottom: &MonoidHom,
    right: &MonoidHom,
    pool: &[Element],
    accept: &mut Accept<'_>,
) -> Result<Option<MonoidHom>> {
    let n = right.domain();
    let fits = |x: &Element, target: &Element| -> Result<bool> { Ok(right.apply(x)? == *target) };
    match m.kind() {
        MonoidKind::Free { generators } => {
            let mut options: Vec<Vec<&Element>> = Vec::new();
            for g in generators {
                let target = bottom.apply(&Element::Word(vec![g.clone()]))?;
                let mut opts = Vec::new();
                for x in pool {
                    if fits(x, &target)? {
                        opts.push(x);
                    }
                }
                if opts.is_empty() {
                    return Ok(None);
                }
                options.push(opts);
            }
            let mut idx = vec![0usize; generators.len()];
            loop {
                let images: BTreeMap<_, _> = generators
                    .iter()
                    .zip(&idx)
                    .zip(&options)
                    .map(|((g, &k), opts)| (g.clone(), opts[k].clone()))
                    .collect();
                let candidate = MonoidHom::from_generators(m, n, images)?;
                if accept(&candidate)? {
                    return Ok(Some(candidate));
                }
                // odometer, last generator fastest
                let mut pos = generators.len();
                loop {
                    if pos == 0 {
                        return Ok(None);
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < options[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        MonoidKind::Finite(f) => {
            let mut options: Vec<Vec<Element>> = Vec::new();
            for i in 0..f.order() {
                if i == f.unit {
                    options.push(vec![n.unit()]);
                    continue;
                }
                let target = bottom.apply(&Element::Finite(i))?;
                let mut opts = Vec::new();
                for x in pool {
                    if fits(x, &target)? {
                        opts.push(x.clone());
                    }
                }
                options.push(opts);
            }
            let mut assigned: Vec<Option<Element>> = vec![None; f.order()];
            finite_backtrack(m, n, &options, 0, &mut assigned, accept)
        }
        MonoidKind::Coproduct { left, right: rf } => {
            let (bl, br) = bottom.components()?;
            let mut found = None;
            let mut on_left = |lh: &MonoidHom| -> Result<bool> {
                let mut on_right = |rh: &MonoidHom| -> Result<bool> {
                    let candidate = MonoidHom::pair(m, lh.clone(), rh.clone())?;
                    accept(&candidate)
                };
                match search(rf, &br, right, pool, &mut on_right)? {
                    Some(rh) => {
                        found = Some(MonoidHom::pair(m, lh.clone(), rh)?);
                        Ok(true)
                    }
                    None => Ok(false),
                }
            };
            search(left, &bl, right, pool, &mut on_left)?;
            Ok(found)
        }
    }
}

fn finite_backtrack(
    m: &Monoid,
    n: &Monoid,
    options: &[Vec<Element>],
    k: usize,
    assigned: &mut Vec<Option<Element>>,
    accept: &mut Accept<'_>,
) -> Result<Option<MonoidHom>> {
    let f = m.as_finite().expect("finite");
    if k == f.order() {
        let images: Vec<Element> = assigned.iter().map(|x| x.clone().expect("assigned")).collect();
        let candidate = MonoidHom::from_table(m, n, images)?;
        return Ok(if accept(&candidate)? { Some(candidate) } else { None });
    }
    for x in &options[k] {
        assigned[k] = Some(x.clone());
        if consistent(f, n, assigned, k) {
            if let Some(h) = finite_backtrack(m, n, options, k + 1, assigned, accept)? {
                return Ok(Some(h));
            }
        }
    }
    assigned[k] = None;
    Ok(None)
}

/// Multiplicativity on every fully assigned triple involving element `k`.
fn consistent(
    f: &super::FiniteMonoid,
    n: &Monoid,
    assigned: &[Option<Element>],
    k: usize,
) -> bool {
    for i in 0..=k {
        for (a, b) in [(i, k), (k, i)] {
            let (Some(x), Some(y)) = (&assigned[a], &assigned[b]) else {
                continue;
            };
            if let Some(z) = &assigned[f.table[a][b]] {
                if n.mul_unchecked(x, y) != *z {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::z2;
    use crate::monoid::sym;

    fn gens(pairs: &[(&str, Element)]) -> BTreeMap<crate::monoid::Symbol, Element> {
        pairs.iter().map(|(g, x)| (sym(g), x.clone())).collect()
    }

    #[test]
    fn surjectivity_examples() {
        let id = MonoidHom::identity(&z2());
        assert_eq!(is_surjective(&id, 0).unwrap(), Surjectivity::Yes);
        let fa = Monoid::free(&["a"]).unwrap();
        let eps = MonoidHom::from_generators(&fa, &z2(), gens(&[("a", Element::Finite(1))])).unwrap();
        assert_eq!(is_surjective(&eps, 1).unwrap(), Surjectivity::Yes);
        let fs = Monoid::free(&["s"]).unwrap();
        let constant = MonoidHom::trivial(&fs, &z2());
        for d in 0..5 {
            assert_eq!(is_surjective(&constant, d).unwrap(), Surjectivity::NotWithinDepth);
        }
        let into_free = MonoidHom::identity(&fs);
        assert!(is_surjective(&into_free, 2).is_err());
    }

    fn trivial_corner(m: &Monoid, n: &Monoid) -> (MonoidHom, MonoidHom) {
        let t = Monoid::trivial();
        (MonoidHom::trivial(&t, n), MonoidHom::trivial(&t, m))
    }

    #[test]
    fn free_lift_is_found() {
        let fx = Monoid::free(&["x"]).unwrap();
        let fxy = Monoid::free(&["x", "y"]).unwrap();
        let right = MonoidHom::from_generators(
            &fxy,
            &fx,
            gens(&[("x", Element::word(&["x"])), ("y", Element::word(&[]))]),
        )
        .unwrap();
        let (top, left) = trivial_corner(&fx, &fxy);
        let sq = LiftingSquare {
            top,
            left,
            right,
            bottom: MonoidHom::identity(&fx),
        };
        let lift = solve_lifting(&sq, 1).unwrap().expect("lift");
        assert_eq!(
            lift.apply(&Element::word(&["x"])).unwrap(),
            Element::word(&["x"])
        );
    }

    #[test]
    fn z2_has_no_lift_through_free() {
        let fx = Monoid::free(&["x"]).unwrap();
        let right =
            MonoidHom::from_generators(&fx, &z2(), gens(&[("x", Element::Finite(1))])).unwrap();
        let (top, left) = trivial_corner(&z2(), &fx);
        let sq = LiftingSquare {
            top,
            left,
            right,
            bottom: MonoidHom::identity(&z2()),
        };
        for depth in 0..=6 {
            assert!(solve_lifting(&sq, depth).unwrap().is_none(), "depth {depth}");
        }
    }

    #[test]
    fn trivial_domain_always_lifts() {
        let t = Monoid::trivial();
        let fx = Monoid::free(&["x"]).unwrap();
        let right =
            MonoidHom::from_generators(&fx, &z2(), gens(&[("x", Element::Finite(1))])).unwrap();
        let (top, left) = trivial_corner(&t, &fx);
        let sq = LiftingSquare {
            top,
            left,
            right,
            bottom: MonoidHom::trivial(&t, &z2()),
        };
        let lift = solve_lifting(&sq, 0).unwrap().expect("unit hom");
        assert_eq!(lift.apply(&t.unit()).unwrap(), fx.unit());
    }

    #[test]
    fn non_commuting_square_is_rejected() {
        let fx = Monoid::free(&["x"]).unwrap();
        let right =
            MonoidHom::from_generators(&fx, &z2(), gens(&[("x", Element::Finite(1))])).unwrap();
        let top = MonoidHom::identity(&fx);
        let left = MonoidHom::identity(&fx);
        let bottom = MonoidHom::trivial(&fx, &z2());
        let sq = LiftingSquare {
            top,
            left,
            right,
            bottom,
        };
        assert!(matches!(
            solve_lifting(&sq, 2),
            Err(Error::NonCommutingSquare(_))
        ));
    }
}
