use std::collections::BTreeMap;

use proptest::prelude::*;

use permcat::cli::generate::all_homs;
use permcat::monoid::catalog::{small_monoids, zn};
use permcat::monoid::{codiagonal, counit, is_surjective, sym, Surjectivity, Element, Letter, Monoid, MonoidHom, Side};

/// A raw token of `Z3 ∨ F{x, y}`: a residue or a generator.
#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Z(usize),
    G(&'static str),
}

fn tok() -> impl Strategy<Value = Tok> {
    prop_oneof![(0usize..3).prop_map(Tok::Z), prop::sample::select(vec!["x", "y"]).prop_map(Tok::G)]
}

fn mixed() -> Monoid {
    Monoid::coproduct_of(zn(3), Monoid::free(&["x", "y"]).unwrap())
}

fn letter(t: &Tok) -> Letter {
    match t {
        Tok::Z(k) => Letter::new(Side::Left, Element::Finite(*k)),
        Tok::G(g) => Letter::new(Side::Right, Element::word(&[g])),
    }
}

/// Blocks of the normal form, computed on flat tokens: sum each maximal
/// residue run, drop zero sums, then join adjacent generator runs.
fn oracle_blocks(ts: &[Tok]) -> Vec<String> {
    let mut summed: Vec<Tok> = Vec::new();
    let mut run: Option<usize> = None;
    for t in ts {
        match t {
            Tok::Z(k) => run = Some((run.unwrap_or(0) + k) % 3),
            Tok::G(_) => {
                if let Some(r) = run.take() {
                    summed.push(Tok::Z(r));
                }
                summed.push(t.clone());
            }
        }
    }
    if let Some(r) = run {
        summed.push(Tok::Z(r));
    }
    let mut blocks: Vec<String> = Vec::new();
    let mut last_free = false;
    for t in summed.iter().filter(|t| **t != Tok::Z(0)) {
        match t {
            Tok::Z(k) => {
                blocks.push(format!("z{k}"));
                last_free = false;
            }
            Tok::G(g) if last_free => blocks.last_mut().unwrap().push_str(g),
            Tok::G(g) => {
                blocks.push(format!("f{g}"));
                last_free = true;
            }
        }
    }
    blocks
}

fn blocks(x: &Element) -> Vec<String> {
    let Element::Alt(ls) = x else { panic!("not a coproduct word") };
    ls.iter()
        .map(|l| match &l.elem {
            Element::Finite(k) => format!("z{k}"),
            Element::Word(w) => format!("f{}", w.iter().map(|s| s.to_string()).collect::<String>()),
            Element::Alt(_) => panic!("nested word"),
        })
        .collect()
}

fn element(m: &Monoid, ts: &[Tok]) -> Element {
    m.normalize(ts.iter().map(letter).collect()).unwrap()
}

proptest! {
    #[test]
    fn normal_form_matches_flat_reduction(ts in prop::collection::vec(tok(), 0..12)) {
        let m = mixed();
        prop_assert_eq!(blocks(&element(&m, &ts)), oracle_blocks(&ts));
    }

    #[test]
    fn normalize_is_idempotent(ts in prop::collection::vec(tok(), 0..12)) {
        let m = mixed();
        let x = element(&m, &ts);
        let Element::Alt(ls) = x.clone() else { unreachable!() };
        prop_assert_eq!(m.normalize(ls).unwrap(), x.clone());
        prop_assert!(m.contains(&x));
    }

    #[test]
    fn multiplication_is_associative(
        a in prop::collection::vec(tok(), 0..6),
        b in prop::collection::vec(tok(), 0..6),
        c in prop::collection::vec(tok(), 0..6),
    ) {
        let m = mixed();
        let (x, y, z) = (element(&m, &a), element(&m, &b), element(&m, &c));
        let left = m.multiply(&m.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = m.multiply(&x, &m.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let all: Vec<Tok> = a.iter().chain(&b).chain(&c).cloned().collect();
        prop_assert_eq!(blocks(&left), oracle_blocks(&all));
    }

    #[test]
    fn codiagonal_restricts_to_its_components(
        fi in 0usize..64,
        images in prop::collection::vec(0usize..3, 2),
        ts in prop::collection::vec(tok(), 0..8),
    ) {
        // f : Z3 -> Z3 any hom, g : F{x, y} -> Z3 by generator images
        let z3 = zn(3);
        let fs = all_homs(&z3, &z3);
        let f = fs[fi % fs.len()].clone();
        let free = Monoid::free(&["x", "y"]).unwrap();
        let gen_images: BTreeMap<_, _> = ["x", "y"]
            .iter()
            .zip(&images)
            .map(|(s, k)| (sym(s), Element::Finite(*k)))
            .collect();
        let g = MonoidHom::from_generators(&free, &z3, gen_images).unwrap();
        let h = codiagonal(&f, &g).unwrap();
        let m = h.domain().clone();
        let left = MonoidHom::inclusion(&m, Side::Left).unwrap();
        let right = MonoidHom::inclusion(&m, Side::Right).unwrap();
        for x in z3.enumerate(0) {
            prop_assert_eq!(h.apply(&left.apply(&x).unwrap()).unwrap(), f.apply(&x).unwrap());
        }
        for w in free.enumerate(3) {
            prop_assert_eq!(h.apply(&right.apply(&w).unwrap()).unwrap(), g.apply(&w).unwrap());
        }
        // on a mixed word: f(k) for residues, the generator image for letters, summed mod 3
        let expected = ts.iter().fold(0, |acc, t| {
            let Element::Finite(v) = (match t {
                Tok::Z(k) => f.apply(&Element::Finite(*k)).unwrap(),
                Tok::G(s) => Element::Finite(images[usize::from(*s == "y")]),
            }) else { unreachable!() };
            (acc + v) % 3
        });
        prop_assert_eq!(h.apply(&element(&m, &ts)).unwrap(), Element::Finite(expected));
    }
}

#[test]
fn counit_is_surjective_and_evaluates_letters() {
    for m in small_monoids() {
        let eps = counit(&m).unwrap();
        assert_eq!(is_surjective(&eps, 1).unwrap(), Surjectivity::Yes, "{m}");
        let order = m.as_finite().unwrap().order();
        for i in 0..order {
            let x = Element::Finite(i);
            let name = m.show(&x);
            assert_eq!(eps.apply(&Element::word(&[&name])).unwrap(), x);
        }
        // a two-letter word evaluates to the product
        for i in 0..order {
            for j in 0..order {
                let (x, y) = (Element::Finite(i), Element::Finite(j));
                let w = Element::word(&[&m.show(&x), &m.show(&y)]);
                assert_eq!(eps.apply(&w).unwrap(), m.multiply(&x, &y).unwrap());
            }
        }
    }
}
