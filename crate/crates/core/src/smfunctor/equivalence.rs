use std::collections::BTreeSet;

use super::SmFunctor;
use crate::error::{Error, Result};
use crate::monoid::Element;

/// Outcome of a depth-bounded check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    /// Refuted, with a witness.
    No(String),
    /// Not established within the depth; the string says what was missing.
    NotWithinDepth(String),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No(_) => "no",
            Verdict::NotWithinDepth(_) => "not_within_depth",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub fully_faithful: Verdict,
    pub essentially_surjective: Verdict,
}

impl Equivalence {
    pub fn is_equivalence(&self) -> bool {
        self.fully_faithful.is_yes() && self.essentially_surjective.is_yes()
    }
}

/// Whether `F` is bijective on every hom-set between enumerated objects.
fn fully_faithful(f: &SmFunctor, depth: usize) -> Verdict {
    let (c, d) = (&*f.domain, &*f.codomain);
    let objs = c.objects().enumerate(depth);
    let run = || -> Result<Verdict> {
        for a in &objs {
            for b in &objs {
                let src = c.hom(a, b)?;
                let tgt = d.hom(&f.obj(a)?, &f.obj(b)?)?;
                let image: BTreeSet<_> = src.iter().map(|m| f.mor(m)).collect::<Result<_>>()?;
                let show = || format!("({}, {})", c.objects().show(a), c.objects().show(b));
                if image.len() != src.len() {
                    return Ok(Verdict::No(format!("not faithful on hom{}", show())));
                }
                if image.len() != tgt.len() || !tgt.iter().all(|g| image.contains(g)) {
                    return Ok(Verdict::No(format!(
                        "not full on hom{}: {} source morphisms, {} target morphisms",
                        show(),
                        src.len(),
                        tgt.len()
                    )));
                }
            }
        }
        Ok(Verdict::Yes)
    };
    run().unwrap_or_else(|e| Verdict::No(e.to_string()))
}

/// Every enumerated codomain object is isomorphic to the image of some
/// enumerated domain object.
fn essentially_surjective(f: &SmFunctor, depth: usize) -> Verdict {
    let (c, d) = (&*f.domain, &*f.codomain);
    let images: Vec<Element> = match c.objects().enumerate(depth).iter().map(|x| f.obj(x)).collect() {
        Ok(v) => v,
        Err(e) => return Verdict::No(e.to_string()),
    };
    let hit: BTreeSet<&Element> = images.iter().collect();
    for y in d.objects().enumerate(depth) {
        if hit.contains(&y) {
            continue;
        }
        let iso = images.iter().any(|fx| {
            d.hom(fx, &y)
                .map(|h| h.iter().any(|g| d.is_iso(g)))
                .unwrap_or(false)
        });
        if !iso {
            return Verdict::NotWithinDepth(format!(
                "no image isomorphic to {}",
                d.objects().show(&y)
            ));
        }
    }
    Verdict::Yes
}

pub fn check_equivalence(f: &SmFunctor, depth: usize) -> Equivalence {
    Equivalence {
        fully_faithful: fully_faithful(f, depth),
        essentially_surjective: essentially_surjective(f, depth),
    }
}

/// Surjective on objects and fully faithful, both within `depth`. Requires a
/// strict functor.
pub fn is_acyclic_fibration(f: &SmFunctor, depth: usize) -> Result<Verdict> {
    if !f.is_strict(depth) {
        return Err(Error::InvalidFunctor(format!("{f:?} is not strict")));
    }
    let ff = fully_faithful(f, depth);
    if !ff.is_yes() {
        return Ok(ff);
    }
    let images: BTreeSet<Element> = f
        .domain
        .objects()
        .enumerate(depth)
        .iter()
        .map(|x| f.obj(x))
        .collect::<Result<_>>()?;
    for y in f.codomain.objects().enumerate(depth) {
        if !images.contains(&y) {
            return Ok(Verdict::NotWithinDepth(format!(
                "{} has no preimage of length at most {depth}",
                f.codomain.objects().show(&y)
            )));
        }
    }
    Ok(Verdict::Yes)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monoid::catalog::z2;
    use crate::monoid::{Monoid, MonoidHom};
    use crate::permcat::{CatRef, PermCat};

    fn collapse(c: PermCat) -> SmFunctor {
        let t = Monoid::trivial();
        let h = MonoidHom::trivial(c.objects(), &t);
        let one: CatRef = Arc::new(PermCat::terminal());
        let o = one.clone();
        SmFunctor::strict(Arc::new(c), one, h, move |_| o.identity(&Monoid::trivial().unit()))
    }

    #[test]
    fn equivalence_examples() {
        let c: CatRef = Arc::new(PermCat::chaotic(z2()));
        let id = check_equivalence(&SmFunctor::identity(&c), 2);
        assert!(id.is_equivalence());

        let ch = check_equivalence(&collapse(PermCat::chaotic(z2())), 2);
        assert!(ch.is_equivalence());

        let disc = check_equivalence(&collapse(PermCat::discrete(z2()).unwrap()), 2);
        assert!(matches!(disc.fully_faithful, Verdict::No(_)));
        assert!(disc.essentially_surjective.is_yes());
    }

    #[test]
    fn acyclic_fibration_examples() {
        let c: CatRef = Arc::new(PermCat::chaotic(z2()));
        assert_eq!(is_acyclic_fibration(&SmFunctor::identity(&c), 2).unwrap(), Verdict::Yes);
        assert_eq!(is_acyclic_fibration(&collapse(PermCat::chaotic(z2())), 2).unwrap(), Verdict::Yes);
        let fs = Monoid::free(&["s"]).unwrap();
        let v = is_acyclic_fibration(&collapse(PermCat::discrete(fs).unwrap()), 3).unwrap();
        assert!(matches!(v, Verdict::No(_)));
    }
}
