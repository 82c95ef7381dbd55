//! Seeded random instances at desk scale.
//!
//! Every artifact is built so that it passes its validator: categories come
//! from the standard families and induced categories over them, functors are
//! relabelings transported along random invertible components, acyclic
//! fibrations are collapses of induced categories, and cofibrations are
//! identities or inclusions `A -> A ∨ F(V)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::functors::{from_terminal, relabel, to_terminal};
use crate::gabriel::induced_category;
use crate::modelcat::{FreeCofibrationDatum, PushoutResult};
use crate::monoid::catalog::{product, small_abelian_groups, small_monoids};
use crate::monoid::{is_surjective, Element, LiftingSquare, Monoid, MonoidHom, MonoidKind, Side, Surjectivity};
use crate::permcat::{CatKind, CatRef, Morphism, Payload, PermCat};
use crate::rule::{ComponentFn, MorFn, ObjectMap};
use crate::smfunctor::{transport_lambda, MonoidalNatTrans, SmFunctor};

/// Weights of the four category families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyWeights {
    pub discrete: u32,
    pub chaotic: u32,
    pub deloop: u32,
    pub induced: u32,
}

impl Default for FamilyWeights {
    fn default() -> Self {
        FamilyWeights {
            discrete: 1,
            chaotic: 1,
            deloop: 1,
            induced: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub max_finite_order: usize,
    pub max_free_generators: usize,
    pub depth: usize,
    pub weights: FamilyWeights,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0,
            max_finite_order: 4,
            max_free_generators: 3,
            depth: 3,
            weights: FamilyWeights::default(),
        }
    }
}

/// Most objects a generated category may have at the configured depth;
/// keeps the cubic validators at desk scale.
pub const MAX_ENUMERATED_OBJECTS: usize = 12;

impl GeneratorConfig {
    pub fn with_seed(seed: u64) -> Self {
        GeneratorConfig {
            seed,
            ..Self::default()
        }
    }

    pub fn check(&self) -> Result<()> {
        let w = self.weights;
        let bad = |m: &str| Err(Error::InvalidCategory(format!("generator config: {m}")));
        if !(1..=4).contains(&self.max_finite_order) {
            return bad("max_finite_order must be in 1..=4");
        }
        if !(1..=3).contains(&self.max_free_generators) {
            return bad("max_free_generators must be in 1..=3");
        }
        if !(1..=4).contains(&self.depth) {
            return bad("depth must be in 1..=4");
        }
        if w.discrete + w.chaotic + w.deloop + w.induced == 0 {
            return bad("family weights are all zero");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Discrete,
    Chaotic,
    Deloop,
    Induced,
}

/// A unital functor `G` obtained from a strict `F0` along `α : F0 ⇒ G`.
#[derive(Clone, Debug)]
pub struct TransportInstance {
    pub strict: SmFunctor,
    pub functor: SmFunctor,
    pub alpha: MonoidalNatTrans,
}

/// An acyclic fibration and a free cofibration out of the same category.
#[derive(Clone, Debug)]
pub struct SquareInstance {
    pub fibration: SmFunctor,
    pub cofibration: FreeCofibrationDatum,
    /// For induced instances, the common base category.
    pub base: Option<CatRef>,
}

/// Deterministic instance stream.
pub struct Generator {
    cfg: GeneratorConfig,
    rng: ChaCha8Rng,
}

const FREE_NAMES: [&str; 3] = ["x", "y", "z"];
const V_NAMES: [&str; 2] = ["v", "w"];

impl Generator {
    pub fn new(cfg: GeneratorConfig) -> Result<Self> {
        cfg.check()?;
        Ok(Generator {
            cfg,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        })
    }

    pub fn config(&self) -> &GeneratorConfig {
        &self.cfg
    }

    fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        xs.choose(&mut self.rng).expect("non-empty choice")
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn family(&mut self) -> Family {
        let w = self.cfg.weights;
        let table = [
            (Family::Discrete, w.discrete),
            (Family::Chaotic, w.chaotic),
            (Family::Deloop, w.deloop),
            (Family::Induced, w.induced),
        ];
        table.choose_weighted(&mut self.rng, |e| e.1).expect("weights").0
    }

    fn fits(&self, m: &Monoid) -> bool {
        m.enumerate(self.cfg.depth).len() <= MAX_ENUMERATED_OBJECTS
    }

    /// A finite monoid of order at most `max_finite_order` (all of these
    /// are commutative).
    pub fn finite_monoid(&mut self) -> Monoid {
        let pool: Vec<Monoid> = small_monoids()
            .into_iter()
            .filter(|m| m.as_finite().expect("finite").order() <= self.cfg.max_finite_order)
            .collect();
        self.pick(&pool).clone()
    }

    pub fn abelian_group(&mut self) -> Monoid {
        let pool: Vec<Monoid> = small_abelian_groups()
            .into_iter()
            .filter(|m| m.as_finite().expect("finite").order() <= self.cfg.max_finite_order)
            .collect();
        self.pick(&pool).clone()
    }

    fn free_monoid(&mut self, max: usize) -> Monoid {
        let k = self.rng.gen_range(1..=max.min(self.cfg.max_free_generators));
        Monoid::free(&FREE_NAMES[..k]).expect("free")
    }

    /// An object monoid; commutative ones are finite or free on one letter.
    fn object_monoid(&mut self, commutative: bool) -> Monoid {
        loop {
            let m = match (commutative, self.rng.gen_range(0..4)) {
                (_, 0 | 1) => self.finite_monoid(),
                (true, _) => Monoid::free(&FREE_NAMES[..1]).expect("free"),
                (false, 2) => self.free_monoid(3),
                (false, _) => Monoid::coproduct_of(self.finite_monoid(), self.free_monoid(1)),
            };
            if self.fits(&m) {
                return m;
            }
        }
    }

    /// A uniformly chosen hom `dom -> cod` whose generator (or element)
    /// images have length at most one.
    pub fn hom(&mut self, dom: &Monoid, cod: &Monoid) -> MonoidHom {
        match dom.kind() {
            MonoidKind::Finite(_) => {
                let all = all_homs(dom, cod);
                self.pick(&all).clone()
            }
            MonoidKind::Free { generators } => {
                let pool = cod.enumerate(1);
                let images = generators
                    .iter()
                    .map(|g| (g.clone(), self.pick(&pool).clone()))
                    .collect();
                MonoidHom::from_generators(dom, cod, images).expect("generator images")
            }
            MonoidKind::Coproduct { left, right } => {
                let (l, r) = (self.hom(left, cod), self.hom(right, cod));
                MonoidHom::pair(dom, l, r).expect("pair")
            }
        }
    }

    fn base_category(&mut self) -> PermCat {
        if self.chance(0.5) {
            PermCat::chaotic(self.finite_monoid())
        } else {
            let g = self.abelian_group();
            PermCat::deloop(self.finite_monoid(), g).expect("deloop")
        }
    }

    /// A category from the weighted families.
    pub fn category(&mut self) -> PermCat {
        match self.family() {
            Family::Discrete => PermCat::discrete(self.object_monoid(true)).expect("commutative"),
            Family::Chaotic => PermCat::chaotic(self.object_monoid(false)),
            Family::Deloop => {
                let g = self.abelian_group();
                PermCat::deloop(self.object_monoid(true), g).expect("abelian")
            }
            Family::Induced => {
                let base: CatRef = Arc::new(self.base_category());
                let objects = self.object_monoid(false);
                let q = self.hom(&objects, base.objects());
                induced_category(objects, base, ObjectMap::Hom(q), None).expect("hom")
            }
        }
    }

    /// A strict relabeling `F0 : C -> D` with `Ob(C)` finite, followed by
    /// transport along random invertible unit-preserving components. With
    /// `deloop_only` both ends are from the delooping family (or a discrete
    /// source).
    pub fn transport_instance(&mut self, deloop_only: bool) -> Result<TransportInstance> {
        let n = self.finite_monoid();
        let group = self.abelian_group();
        let source = match (deloop_only, self.rng.gen_range(0..3)) {
            (_, 0) => PermCat::discrete(n.clone())?,
            (true, _) | (false, 1) => PermCat::deloop(n.clone(), group.clone())?,
            (false, _) => PermCat::chaotic(n.clone()),
        };
        let m = self.object_monoid(true);
        let target = match source.kind() {
            CatKind::Chaotic => PermCat::chaotic(m),
            CatKind::Deloop { group } => {
                if !deloop_only && self.chance(0.3) {
                    PermCat::chaotic(m)
                } else {
                    PermCat::deloop(m, group.clone())?
                }
            }
            _ if !deloop_only && self.chance(0.5) => PermCat::chaotic(m),
            _ => PermCat::deloop(m, group)?,
        };
        let (c, d): (CatRef, CatRef) = (Arc::new(source), Arc::new(target));
        let h = self.hom(c.objects(), d.objects());
        let f0 = relabel(&c, &d, h)?;
        self.transport(f0)
    }

    fn transport(&mut self, f0: SmFunctor) -> Result<TransportInstance> {
        let (c, d) = (f0.domain.clone(), f0.codomain.clone());
        let mut g_table = BTreeMap::new();
        let mut alpha_table = BTreeMap::new();
        let targets = d.objects().enumerate(1);
        for x in c.objects().enumerate(0) {
            let fx = f0.obj(&x)?;
            let (gx, a) = if c.objects().is_unit(&x) {
                (fx.clone(), d.identity(&fx)?)
            } else {
                match d.kind() {
                    CatKind::Chaotic => {
                        let gx = self.pick(&targets).clone();
                        (gx.clone(), Morphism::new(fx, gx, Payload::Point))
                    }
                    _ => {
                        let autos = d.hom(&fx, &fx)?;
                        (fx.clone(), self.pick(&autos).clone())
                    }
                }
            };
            g_table.insert(x.clone(), gx);
            alpha_table.insert(x, a);
        }
        let dom = c.objects().clone();
        let g_objects = ObjectMap::rule(move |x: &Element| {
            g_table.get(x).cloned().ok_or_else(|| Error::OutOfTable(dom.show(x)))
        });
        let dom = c.objects().clone();
        let alpha: ComponentFn = Arc::new(move |x: &Element| {
            alpha_table.get(x).cloned().ok_or_else(|| Error::OutOfTable(dom.show(x)))
        });
        let (ff, al, dd) = (f0.clone(), alpha.clone(), d.clone());
        let g_morphisms: MorFn = Arc::new(move |m: &Morphism| {
            let inv = dd.inverse(&al(&m.source)?)?;
            dd.compose_path(&[&inv, &ff.mor(m)?, &al(&m.target)?])
        });
        let (functor, alpha) = transport_lambda(&f0, g_objects, g_morphisms, alpha, self.cfg.depth)?;
        Ok(TransportInstance {
            strict: f0,
            functor,
            alpha,
        })
    }

    /// A cofibration that the retract machinery certifies: identities,
    /// functors out of `𝟙` into categories with free object monoids, and
    /// inclusions `A -> A ∨ F(V)` into chaotic or induced categories.
    pub fn cofibration(&mut self) -> Result<SmFunctor> {
        Ok(match self.rng.gen_range(0..4) {
            0 => {
                let c: CatRef = Arc::new(match self.rng.gen_range(0..3) {
                    0 => PermCat::discrete(self.finite_monoid())?,
                    1 => PermCat::chaotic(self.finite_monoid()),
                    _ => {
                        let g = self.abelian_group();
                        PermCat::deloop(self.finite_monoid(), g)?
                    }
                });
                SmFunctor::identity(&c)
            }
            1 => {
                let v = Monoid::free(&V_NAMES[..1])?;
                let c: CatRef = Arc::new(match self.rng.gen_range(0..3) {
                    0 => PermCat::discrete(v)?,
                    1 => PermCat::chaotic(v),
                    _ => {
                        let g = self.abelian_group();
                        PermCat::deloop(v, g)?
                    }
                });
                from_terminal(&c)
            }
            2 => {
                let a: CatRef = Arc::new(PermCat::chaotic(self.finite_monoid()));
                let cm = Monoid::coproduct_of(a.objects().clone(), Monoid::free(&V_NAMES[..1])?);
                let c: CatRef = Arc::new(PermCat::chaotic(cm));
                relabel(&a, &c, MonoidHom::inclusion(c.objects(), Side::Left)?)?
            }
            _ => self.square()?.cofibration.inclusion,
        })
    }

    /// An acyclic fibration `G : A -> B` together with a free cofibration
    /// `A -> C`.
    ///
    /// Either `A = Chaotic(M)` collapses onto `Chaotic(Q)` along a surjective
    /// hom, or `A` and `B` are induced over a common base `D` from
    /// `N × K -> N -> Ob(D)` and `G` is the projection.
    pub fn square(&mut self) -> Result<SquareInstance> {
        let v = Monoid::free(&V_NAMES[..1])?;
        if self.chance(0.3) {
            let m = self.finite_monoid();
            let (q, h) = self.surjection_from(&m);
            let a: CatRef = Arc::new(PermCat::chaotic(m.clone()));
            let b: CatRef = Arc::new(PermCat::chaotic(q));
            let c: CatRef = Arc::new(PermCat::chaotic(Monoid::coproduct_of(m, v)));
            let fibration = relabel(&a, &b, h)?;
            let incl = relabel(&a, &c, MonoidHom::inclusion(c.objects(), Side::Left)?)?;
            return Ok(SquareInstance {
                fibration,
                cofibration: FreeCofibrationDatum::new(incl)?,
                base: None,
            });
        }
        let base: CatRef = Arc::new(self.base_category());
        let (n, k) = loop {
            let (n, k) = (self.finite_monoid(), self.finite_monoid());
            let size = n.as_finite().expect("finite").order() * k.as_finite().expect("finite").order();
            let n_order = n.as_finite().expect("finite").order();
            if size <= self.cfg.max_finite_order && (2..=3).contains(&n_order) {
                break (n, k);
            }
        };
        let nk = product(&n, &k);
        let proj = projection(&n, &k, &nk)?;
        let q_b = self.hom(&n, base.objects());
        let q_a = q_b.after(&proj)?;
        let q_v = self.hom(&v, base.objects());
        let cm = Monoid::coproduct_of(nk.clone(), v);
        let q_c = MonoidHom::pair(&cm, q_a.clone(), q_v)?;
        let a: CatRef = Arc::new(induced_category(nk, base.clone(), ObjectMap::Hom(q_a), None)?);
        let b: CatRef = Arc::new(induced_category(n, base.clone(), ObjectMap::Hom(q_b), None)?);
        let c: CatRef = Arc::new(induced_category(cm.clone(), base.clone(), ObjectMap::Hom(q_c), None)?);
        let fibration = relabel(&a, &b, proj)?;
        let incl = relabel(&a, &c, MonoidHom::inclusion(&cm, Side::Left)?)?;
        Ok(SquareInstance {
            fibration,
            cofibration: FreeCofibrationDatum::new(incl)?,
            base: Some(base),
        })
    }

    /// A surjective hom out of `m` onto a small monoid.
    fn surjection_from(&mut self, m: &Monoid) -> (Monoid, MonoidHom) {
        let mut options = Vec::new();
        for q in small_monoids() {
            for h in all_homs(m, &q) {
                if is_surjective(&h, 0) == Ok(Surjectivity::Yes) {
                    options.push((q.clone(), h));
                }
            }
        }
        self.pick(&options).clone()
    }

    /// A lifting square `∗ -> N`, `∗ -> F(k)`, surjective `p : N -> Q`,
    /// random `F(k) -> Q`.
    pub fn lifting_square(&mut self) -> Result<LiftingSquare> {
        let m = self.free_monoid(3);
        let n = self.finite_monoid();
        let (q, p) = self.surjection_from(&n);
        let bottom = self.hom(&m, &q);
        let star = Monoid::trivial();
        Ok(LiftingSquare {
            top: MonoidHom::trivial(&star, &n),
            left: MonoidHom::trivial(&star, &m),
            right: p,
            bottom,
        })
    }
}

/// Cocones `(label, R : C -> X, T : B -> X)` over a constructed pushout:
/// the pushout itself, the terminal category, and for induced instances the
/// projection to the base.
pub fn cocones(sq: &SquareInstance, res: &PushoutResult) -> Result<Vec<(&'static str, SmFunctor, SmFunctor)>> {
    let mut out = vec![
        ("canonical", res.p.clone(), res.gamma.clone()),
        ("terminal", to_terminal(&res.p.domain), to_terminal(&res.gamma.domain)),
    ];
    if let Some(base) = &sq.base {
        out.push(("base", unlift(&res.p.domain, base)?, unlift(&res.gamma.domain, base)?));
    }
    Ok(out)
}

/// `Lifted(g) ↦ g` from a strictly induced category to its base.
pub fn unlift(c: &CatRef, base: &CatRef) -> Result<SmFunctor> {
    let CatKind::Induced(i) = c.kind() else {
        return Err(Error::InvalidFunctor(format!("{c} is not induced")));
    };
    let q = i
        .q
        .as_hom()
        .ok_or_else(|| Error::InvalidFunctor("object map is not a hom".into()))?
        .clone();
    Ok(SmFunctor::strict(c.clone(), base.clone(), q, |m: &Morphism| m.base().cloned()))
}

/// `N × K -> N`.
fn projection(n: &Monoid, k: &Monoid, nk: &Monoid) -> Result<MonoidHom> {
    let kk = k.as_finite().expect("finite").order();
    let images = (0..nk.as_finite().expect("finite").order())
        .map(|i| Element::Finite(i / kk))
        .collect();
    MonoidHom::from_table(nk, n, images)
}

/// Every hom out of a finite monoid whose element images have length at
/// most one.
pub fn all_homs(dom: &Monoid, cod: &Monoid) -> Vec<MonoidHom> {
    let f = dom.as_finite().expect("finite domain");
    let pool = cod.enumerate(1);
    let n = f.order();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let images: Vec<Element> = choice.iter().map(|&i| pool[i].clone()).collect();
        if let Ok(h) = MonoidHom::from_table(dom, cod, images) {
            out.push(h);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            choice[i] += 1;
            if choice[i] < pool.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}
