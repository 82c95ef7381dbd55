//! Shared function types for object and morphism assignments.

use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::monoid::{Element, MonoidHom};
use crate::permcat::Morphism;

pub type ObjFn = Arc<dyn Fn(&Element) -> Result<Element> + Send + Sync>;
pub type MorFn = Arc<dyn Fn(&Morphism) -> Result<Morphism> + Send + Sync>;
/// Object-indexed family of morphisms (components of a transformation).
pub type ComponentFn = Arc<dyn Fn(&Element) -> Result<Morphism> + Send + Sync>;
/// Pair-indexed family of morphisms, e.g. a monoidal coherence `λ(c1, c2)`.
pub type PairFn = Arc<dyn Fn(&Element, &Element) -> Result<Morphism> + Send + Sync>;

/// An object assignment: a monoid hom (strict case) or a plain
/// unit-preserving function.
#[derive(Clone)]
pub enum ObjectMap {
    Hom(MonoidHom),
    Rule(ObjFn),
}

impl ObjectMap {
    pub fn rule(f: impl Fn(&Element) -> Result<Element> + Send + Sync + 'static) -> Self {
        ObjectMap::Rule(Arc::new(f))
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        match self {
            ObjectMap::Hom(h) => h.apply(x),
            ObjectMap::Rule(f) => f(x),
        }
    }

    pub fn as_hom(&self) -> Option<&MonoidHom> {
        match self {
            ObjectMap::Hom(h) => Some(h),
            ObjectMap::Rule(_) => None,
        }
    }
}

impl std::fmt::Debug for ObjectMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ObjectMap::Hom(h) => write!(f, "Hom({} -> {})", h.domain(), h.codomain()),
            ObjectMap::Rule(_) => write!(f, "Rule(..)"),
        }
    }
}

/// `f` with its results remembered. The functions wrapped here are pure, so
/// a repeated argument returns the stored value.
pub fn memo_obj(f: ObjFn) -> ObjFn {
    let cache: Mutex<FxHashMap<Element, Result<Element>>> = Mutex::default();
    Arc::new(move |x: &Element| {
        if let Some(v) = cache.lock().expect("cache lock").get(x) {
            return v.clone();
        }
        let v = f(x);
        cache.lock().expect("cache lock").insert(x.clone(), v.clone());
        v
    })
}

/// Pair-indexed counterpart of [`memo_obj`].
pub fn memo_pair(f: PairFn) -> PairFn {
    let cache: Mutex<FxHashMap<(Element, Element), Result<Morphism>>> = Mutex::default();
    Arc::new(move |x: &Element, y: &Element| {
        let key = (x.clone(), y.clone());
        if let Some(v) = cache.lock().expect("cache lock").get(&key) {
            return v.clone();
        }
        let v = f(x, y);
        cache.lock().expect("cache lock").insert(key, v.clone());
        v
    })
}
