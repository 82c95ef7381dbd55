//! Small named monoids used by examples, fixtures and the instance generator.

use super::{Element, Monoid};

/// The cyclic group of order two on `{e, a}`.
pub fn z2() -> Monoid {
    Monoid::finite(&["e", "a"], "e", vec![vec![0, 1], vec![1, 0]]).expect("Z2")
}

/// Additive cyclic group `Z/n` on `{0, .., n-1}`.
pub fn zn(n: usize) -> Monoid {
    assert!(n >= 1);
    let names: Vec<String> = (0..n).map(|k| k.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    Monoid::finite(&refs, "0", table).expect("Z/n")
}

/// `{e, z}` with `z·z = z`.
pub fn idempotent() -> Monoid {
    Monoid::finite(&["e", "z"], "e", vec![vec![0, 1], vec![1, 1]]).expect("idempotent")
}

/// `{e, a, 0}`: `Z2` with an absorbing zero adjoined.
pub fn z2_with_zero() -> Monoid {
    Monoid::finite(
        &["e", "a", "0"],
        "e",
        vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]],
    )
    .expect("Z2 with zero")
}

/// `{e, x, 0}` with `x·x = 0` and `0` absorbing.
pub fn nilpotent() -> Monoid {
    Monoid::finite(
        &["e", "x", "0"],
        "e",
        vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
    )
    .expect("nilpotent")
}

/// Direct product of two finite monoids; elements are named `x:y`.
pub fn product(m: &Monoid, n: &Monoid) -> Monoid {
    let (a, b) = (
        m.as_finite().expect("finite factor"),
        n.as_finite().expect("finite factor"),
    );
    let idx = |i: usize, j: usize| i * b.order() + j;
    let mut names = Vec::new();
    for x in &a.elements {
        for y in &b.elements {
            names.push(format!("{x}:{y}"));
        }
    }
    let size = names.len();
    let mut table = vec![vec![0; size]; size];
    for i in 0..a.order() {
        for j in 0..b.order() {
            for k in 0..a.order() {
                for l in 0..b.order() {
                    table[idx(i, j)][idx(k, l)] = idx(a.table[i][k], b.table[j][l]);
                }
            }
        }
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let unit = names[idx(a.unit, b.unit)].clone();
    Monoid::finite(&refs, &unit, table).expect("product")
}

/// Index of the product element `(i, j)` in [`product`].
pub fn pair_index(n: &Monoid, i: usize, j: usize) -> Element {
    Element::Finite(i * n.as_finite().expect("finite").order() + j)
}

/// Finite monoids of order at most four, used to generate lifting squares.
pub fn small_monoids() -> Vec<Monoid> {
    vec![
        Monoid::trivial(),
        z2(),
        idempotent(),
        zn(3),
        z2_with_zero(),
        nilpotent(),
        zn(4),
        product(&z2(), &z2()),
        product(&z2(), &idempotent()),
    ]
}

/// Finite abelian groups of order at most four.
pub fn small_abelian_groups() -> Vec<Monoid> {
    vec![Monoid::trivial(), zn(2), zn(3), zn(4), product(&zn(2), &zn(2))]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_valid() {
        for m in small_monoids() {
            assert!(m.as_finite().unwrap().order() <= 4, "{m}");
        }
        for g in small_abelian_groups() {
            assert!(g.is_group() && g.is_commutative(0), "{g}");
        }
        assert!(!nilpotent().is_group());
        assert_eq!(product(&z2(), &z2()).as_finite().unwrap().order(), 4);
    }
}
