//! Table categories that each break exactly one permutative-category law.

use std::collections::BTreeMap;

use super::{TableCat, TableCatBuilder, LAWS};
use crate::monoid::catalog::{idempotent, nilpotent, z2, zn};
use crate::monoid::Monoid;

type Rule2<'a> = &'a dyn Fn(&str, &str) -> String;

/// A category whose only morphisms are endomorphisms. `homs` lists, per
/// object, its endomorphisms with the identity first.
fn endo_table(
    objects: Monoid,
    homs: &[(&str, &[&str])],
    compose: Rule2<'_>,
    tensor: Rule2<'_>,
    symmetry: Rule2<'_>,
) -> TableCat {
    let mut b = TableCatBuilder::new(objects.clone()).expect("finite objects");
    for (c, ms) in homs {
        for m in *ms {
            b.morphism(m, c, c).expect("morphism");
        }
        b.identity(c, ms[0]).expect("identity");
        for g in *ms {
            for f in *ms {
                b.compose(g, f, &compose(g, f)).expect("compose");
            }
        }
    }
    let all: Vec<&str> = homs.iter().flat_map(|(_, ms)| ms.iter().copied()).collect();
    for f in &all {
        for g in &all {
            b.tensor(f, g, &tensor(f, g)).expect("tensor");
        }
    }
    let names = &objects.as_finite().expect("finite").elements;
    for c1 in names {
        for c2 in names {
            b.symmetry(c1, c2, &symmetry(c1, c2)).expect("symmetry");
        }
    }
    b.build().expect("complete table")
}

/// Group-like composition where `id_*` names act as identities.
fn with_identities(g: &str, f: &str, rest: impl Fn(&str, &str) -> String) -> String {
    if g.starts_with("id_") {
        f.to_string()
    } else if f.starts_with("id_") {
        g.to_string()
    } else {
        rest(g, f)
    }
}

/// Tensor over `{e, x, 0}` where `id_e` is the unit and every product of
/// degree two or more lands on `id_0` unless `special` says otherwise.
fn nilpotent_tensor(f: &str, g: &str, special: impl Fn(&str, &str) -> Option<String>) -> String {
    if let Some(h) = special(f, g) {
        return h;
    }
    match (f, g) {
        ("id_e", h) | (h, "id_e") => h.to_string(),
        _ => "id_0".to_string(),
    }
}

fn nilpotent_symmetry(c1: &str, c2: &str) -> String {
    match (c1, c2) {
        ("e", c) | (c, "e") => format!("id_{c}"),
        _ => "id_0".to_string(),
    }
}

fn composition() -> TableCat {
    endo_table(
        nilpotent(),
        &[("e", &["id_e"]), ("x", &["id_x", "a", "b"]), ("0", &["id_0"])],
        &|g, f| {
            with_identities(g, f, |g, f| match (g, f) {
                ("a", "a") | ("b", "b") => "id_x".into(),
                ("a", "b") => "a".into(),
                _ => "b".into(),
            })
        },
        &|f, g| nilpotent_tensor(f, g, |_, _| None),
        &nilpotent_symmetry,
    )
}

fn identities() -> TableCat {
    endo_table(
        nilpotent(),
        &[("e", &["id_e"]), ("x", &["id_x", "a"]), ("0", &["id_0"])],
        &|g, f| match (g, f) {
            ("id_e", _) => "id_e".into(),
            ("id_0", _) => "id_0".into(),
            _ => "id_x".into(),
        },
        &|f, g| nilpotent_tensor(f, g, |_, _| None),
        &nilpotent_symmetry,
    )
}

fn z2_on_x(g: &str, f: &str) -> String {
    with_identities(g, f, |_, _| "id_x".into())
}

fn strictness() -> TableCat {
    endo_table(
        nilpotent(),
        &[("e", &["id_e"]), ("x", &["id_x", "a"]), ("0", &["id_0"])],
        &z2_on_x,
        &|f, g| {
            nilpotent_tensor(f, g, |f, g| match (f, g) {
                ("id_e", "a") | ("a", "id_e") => Some("id_x".into()),
                _ => None,
            })
        },
        &nilpotent_symmetry,
    )
}

fn structure_maps() -> TableCat {
    endo_table(
        nilpotent(),
        &[("e", &["id_e"]), ("x", &["id_x", "a"]), ("0", &["id_0"])],
        &z2_on_x,
        &|f, g| nilpotent_tensor(f, g, |f, g| (f == "a" && g == "a").then(|| "id_x".into())),
        &nilpotent_symmetry,
    )
}

fn interchange() -> TableCat {
    endo_table(
        nilpotent(),
        &[("e", &["id_e"]), ("x", &["id_x", "a"]), ("0", &["id_0", "z"])],
        &|g, f| with_identities(g, f, |g, _| if g == "a" { "id_x".into() } else { "id_0".into() }),
        &|f, g| nilpotent_tensor(f, g, |f, g| (f == "a" && g == "a").then(|| "z".into())),
        &nilpotent_symmetry,
    )
}

/// `Chaotic(Z2)` written as a table with `γ(e, a)` sent to the arrow `e -> a`.
fn symmetry_typing() -> TableCat {
    let names = ["e", "a"];
    let prod = |x: &str, y: &str| if x == y { "e" } else { "a" };
    let mut b = TableCatBuilder::new(z2()).expect("finite");
    for s in names {
        for t in names {
            b.morphism(&format!("{s}{t}"), s, t).expect("morphism");
        }
    }
    for s in names {
        b.identity(s, &format!("{s}{s}")).expect("identity");
        for t in names {
            for u in names {
                b.compose(&format!("{t}{u}"), &format!("{s}{t}"), &format!("{s}{u}"))
                    .expect("compose");
            }
        }
    }
    let arrows = ["ee", "ea", "ae", "aa"];
    for f in arrows {
        for g in arrows {
            let h = format!("{}{}", prod(&f[..1], &g[..1]), prod(&f[1..], &g[1..]));
            b.tensor(f, g, &h).expect("tensor");
        }
    }
    for s in names {
        for t in names {
            let p = prod(s, t);
            b.symmetry(s, t, &format!("{p}{p}")).expect("symmetry");
        }
    }
    b.symmetry("e", "a", "ea").expect("symmetry");
    b.build().expect("complete table")
}

/// Objects and automorphisms `Z3`, with `γ(m, n) = m·n`.
fn symmetry_involution() -> TableCat {
    let homs: Vec<(String, Vec<String>)> = (0..3)
        .map(|c| (c.to_string(), (0..3).map(|k| format!("g{k}@{c}")).collect()))
        .collect();
    let parse = |m: &str| -> (usize, usize) {
        let (k, c) = m[1..].split_once('@').expect("g<k>@<c>");
        (k.parse().expect("k"), c.parse().expect("c"))
    };
    let refs: Vec<Vec<&str>> = homs.iter().map(|(_, ms)| ms.iter().map(String::as_str).collect()).collect();
    let spec: Vec<(&str, &[&str])> = homs.iter().zip(&refs).map(|((c, _), ms)| (c.as_str(), ms.as_slice())).collect();
    endo_table(
        zn(3),
        &spec,
        &|g, f| {
            let ((a, c), (b, _)) = (parse(g), parse(f));
            format!("g{}@{c}", (a + b) % 3)
        },
        &|f, g| {
            let ((a, c), (b, d)) = (parse(f), parse(g));
            format!("g{}@{}", (a + b) % 3, (c + d) % 3)
        },
        &|c1, c2| {
            let (m, n): (usize, usize) = (c1.parse().expect("m"), c2.parse().expect("n"));
            format!("g{}@{}", (m * n) % 3, (m + n) % 3)
        },
    )
}

/// Objects `{e, z}` with `z·z = z`; on `z`-morphisms `f ⊗ g = f`.
fn symmetry_naturality() -> TableCat {
    endo_table(
        idempotent(),
        &[("e", &["id_e"]), ("z", &["id_z", "t"])],
        &|g, f| with_identities(g, f, |_, _| "id_z".into()),
        &|f, g| match (f, g) {
            ("id_e", h) | (h, "id_e") => h.to_string(),
            (f, _) => f.to_string(),
        },
        &|c1, c2| if c1 == "e" && c2 == "e" { "id_e".into() } else { "id_z".into() },
    )
}

/// `Deloop({e}, Z2)` with `γ(e, e)` the generator.
fn symmetry_coherence() -> TableCat {
    endo_table(
        Monoid::trivial(),
        &[("e", &["0", "1"])],
        &|g, f| if g == f { "0".into() } else { "1".into() },
        &|f, g| if f == g { "0".into() } else { "1".into() },
        &|_, _| "1".into(),
    )
}

/// One table category per law, keyed by the law it breaks. Each one passes
/// every other law.
pub fn negative_controls() -> BTreeMap<&'static str, TableCat> {
    let tables = [
        composition(),
        identities(),
        strictness(),
        structure_maps(),
        interchange(),
        symmetry_typing(),
        symmetry_involution(),
        symmetry_naturality(),
        symmetry_coherence(),
    ];
    LAWS.into_iter().zip(tables).collect()
}
