//! Seeded random structures and exhaustive instance lists.

use std::collections::BTreeMap;
use std::sync::Mutex;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chains::closure;
use crate::enumerate::enumerate_bounded;
use crate::error::{Error, Result};
use crate::maps::FiniteMap;
use crate::relation::{Kind, OrderKind, Relation};
use crate::ualg::{random_algebra, FiniteAlgebra};

use super::instance::Value;

/// Largest carrier accepted by [`gen_random`].
pub const RANDOM_CARRIER_LIMIT: usize = 64;

pub const DEFAULT_DENSITY: f64 = 0.25;

/// SplitMix64 finalizer.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for sample `index` under `master`:
/// `splitmix64(master + splitmix64(index))` with wrapping addition.
pub fn sample_seed(master: u64, index: u64) -> u64 {
    splitmix64(master.wrapping_add(splitmix64(index)))
}

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// What [`gen_random`] should build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Relation(Kind),
    Surjection,
    Algebra,
}

impl std::str::FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "surjection" => Ok(GenKind::Surjection),
            "algebra" => Ok(GenKind::Algebra),
            other => other.parse().map(GenKind::Relation),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    /// Carrier (domain) size.
    pub n: usize,
    /// Codomain size for surjections.
    pub m: usize,
    /// Probability of each free bit.
    pub density: f64,
    /// Operation arities for algebras.
    pub arities: Vec<usize>,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            n: 4,
            m: 2,
            density: DEFAULT_DENSITY,
            arities: vec![2],
        }
    }
}

/// Deterministic in `(kind, params, seed)`.
pub fn gen_random(kind: GenKind, params: &GenParams, seed: u64) -> Result<Value> {
    if params.n > RANDOM_CARRIER_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "random carrier {} is over the limit of {RANDOM_CARRIER_LIMIT}",
            params.n
        )));
    }
    if !(0.0..=1.0).contains(&params.density) {
        return Err(Error::InvalidParameter("density must lie in [0, 1]".into()));
    }
    let mut rng = rng_for(seed);
    Ok(match kind {
        GenKind::Relation(k) => Value::Rel(relation(&mut rng, params.n, k, params.density)),
        GenKind::Surjection => {
            if params.m > params.n || (params.m == 0 && params.n > 0) {
                return Err(Error::InvalidParameter(format!(
                    "no surjection from {} onto {} elements",
                    params.n, params.m
                )));
            }
            Value::Map(surjection(&mut rng, params.n, params.m))
        }
        GenKind::Algebra => Value::Alg(random_algebra(params.n, &params.arities, &mut rng)?),
    })
}

/// Independent bits at density `d`, then normalized to `kind`. Diagonal
/// bits are random only for [`Kind::Relation`].
pub(crate) fn relation(rng: &mut impl Rng, n: usize, kind: Kind, d: f64) -> Relation {
    let raw = Relation::from_fn(n, |i, j| (i != j || kind == Kind::Relation) && rng.random_bool(d));
    match kind {
        Kind::Relation => raw,
        Kind::Reflexive => raw.with_diagonal(),
        Kind::ReflexiveSymmetric => raw.with_diagonal().union(&raw.dual()),
        Kind::Preorder => closure(OrderKind::Preorder, &raw),
        Kind::Equivalence => closure(OrderKind::Equivalence, &raw),
    }
}

/// A density drawn from a fixed spread, so samples cover sparse and dense
/// relations alike.
pub(crate) fn density(rng: &mut impl Rng) -> f64 {
    const SPREAD: [f64; 5] = [0.08, 0.15, 0.25, 0.35, 0.5];
    SPREAD[rng.random_range(0..SPREAD.len())]
}

pub(crate) fn rel(rng: &mut impl Rng, n: usize, kind: Kind) -> Relation {
    let d = density(rng);
    relation(rng, n, kind, d)
}

/// Uniform values, then each missed codomain element overwrites a position
/// whose value occurs more than once.
pub(crate) fn surjection(rng: &mut impl Rng, n: usize, m: usize) -> FiniteMap {
    let mut values: Vec<usize> = (0..n).map(|_| rng.random_range(0..m.max(1))).collect();
    let mut counts = vec![0usize; m];
    for &v in &values {
        counts[v] += 1;
    }
    for y in 0..m {
        if counts[y] > 0 {
            continue;
        }
        let spare: Vec<usize> = (0..n).filter(|&i| counts[values[i]] > 1).collect();
        let i = spare[rng.random_range(0..spare.len())];
        counts[values[i]] -= 1;
        values[i] = y;
        counts[y] = 1;
    }
    FiniteMap::new(m, values).expect("values drawn below m")
}

/// A surjection from `n` elements onto a random codomain of size `1..=n`.
pub(crate) fn any_surjection(rng: &mut impl Rng, n: usize) -> FiniteMap {
    let m = rng.random_range(1..=n.max(1)).min(n);
    surjection(rng, n, m)
}

/// A random section of a surjection.
pub(crate) fn random_section(rng: &mut impl Rng, f: &FiniteMap) -> Vec<usize> {
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); f.codomain()];
    for (x, &y) in f.values().iter().enumerate() {
        fibers[y].push(x);
    }
    fibers
        .iter()
        .map(|fib| *fib.choose(rng).expect("surjective"))
        .collect()
}

/// A random algebra with one or two operations of arity at most two.
pub(crate) fn small_algebra(rng: &mut impl Rng, n: usize) -> FiniteAlgebra {
    let arities: &[usize] = match rng.random_range(0..3) {
        0 => &[1],
        1 => &[2],
        _ => &[1, 2],
    };
    random_algebra(n, arities, rng).expect("small tables")
}

/// Number of relations of `kind` on `n` elements, when small enough to
/// matter.
pub(crate) fn kind_count(kind: Kind, n: usize) -> u128 {
    const PREORDERS: [u128; 6] = [1, 1, 4, 29, 355, 6942];
    const BELL: [u128; 9] = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
    let pow2 = |e: usize| if e >= 127 { u128::MAX } else { 1u128 << e };
    match kind {
        Kind::Relation => pow2(n * n),
        Kind::Reflexive => pow2(n * n - n),
        Kind::ReflexiveSymmetric => pow2((n * n - n) / 2),
        // the mask scan stops at five elements
        Kind::Preorder if n <= 5 => PREORDERS[n],
        Kind::Preorder => u128::MAX,
        Kind::Equivalence => BELL.get(n).copied().unwrap_or(u128::MAX),
    }
}

pub(crate) fn all(kind: Kind, n: usize) -> Vec<Relation> {
    enumerate_bounded(kind, n, 8).expect("caller checked the count")
}

/// [`all`], computed once per `(kind, n)` and kept for the process.
pub(crate) fn all_cached(kind: Kind, n: usize) -> &'static [Relation] {
    static CACHE: Mutex<BTreeMap<(Kind, usize), &'static [Relation]>> = Mutex::new(BTreeMap::new());
    if let Some(v) = CACHE.lock().expect("cache lock").get(&(kind, n)) {
        return v;
    }
    let list: &'static [Relation] = Box::leak(all(kind, n).into_boxed_slice());
    CACHE.lock().expect("cache lock").entry((kind, n)).or_insert(list)
}

/// Every map from `n` elements onto exactly `m`, in lexicographic order of
/// value lists.
pub(crate) fn surjections(n: usize, m: usize) -> Vec<FiniteMap> {
    let mut out = Vec::new();
    if m == 0 {
        if n == 0 {
            out.push(FiniteMap::identity(0));
        }
        return out;
    }
    let mut values = vec![0usize; n];
    loop {
        let f = FiniteMap::new(m, values.clone()).expect("values below m");
        if f.is_surjective() {
            out.push(f);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < m {
                break;
            }
            values[pos] = 0;
        }
    }
}

/// Surjections from `n` elements onto anything, by codomain then values.
pub(crate) fn all_surjections(n: usize) -> Vec<FiniteMap> {
    (1..=n).flat_map(|m| surjections(n, m)).collect()
}

pub(crate) fn surjection_count(n: usize) -> u128 {
    // Σₘ m!·S(n, m), the ordered Bell numbers
    const FUBINI: [u128; 9] = [1, 1, 3, 13, 75, 541, 4683, 47_293, 545_835];
    FUBINI.get(n).copied().unwrap_or(u128::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_full_density() {
        let p = GenParams { n: 4, density: 0.0, ..GenParams::default() };
        assert_eq!(gen_random(GenKind::Relation(Kind::Reflexive), &p, 3).unwrap(), Value::Rel(Relation::delta(4)));
        let p = GenParams { n: 5, density: 1.0, ..GenParams::default() };
        assert_eq!(gen_random(GenKind::Relation(Kind::Equivalence), &p, 9).unwrap(), Value::Rel(Relation::nabla(5)));
    }

    #[test]
    fn surjections_are_deterministic() {
        let p = GenParams { n: 5, m: 3, ..GenParams::default() };
        let a = gen_random(GenKind::Surjection, &p, 42).unwrap();
        assert_eq!(a, gen_random(GenKind::Surjection, &p, 42).unwrap());
        match a {
            Value::Map(f) => assert!(f.is_surjective()),
            _ => unreachable!(),
        }
    }

    #[test]
    fn bounds() {
        let p = GenParams { n: 65, ..GenParams::default() };
        assert!(gen_random(GenKind::Relation(Kind::Relation), &p, 0).is_err());
        let p = GenParams { n: 2, m: 3, ..GenParams::default() };
        assert!(gen_random(GenKind::Surjection, &p, 0).is_err());
    }

    #[test]
    fn random_surjections_hit_everything() {
        let mut rng = rng_for(7);
        for n in 1..9 {
            for m in 1..=n {
                assert!(surjection(&mut rng, n, m).is_surjective());
            }
        }
    }

    #[test]
    fn surjection_lists() {
        assert_eq!(surjections(3, 2).len(), 6);
        for n in 0..6 {
            assert_eq!(all_surjections(n).len() as u128, if n == 0 { 0 } else { surjection_count(n) });
        }
    }

    #[test]
    fn counts_match_enumeration() {
        for kind in [Kind::Relation, Kind::Reflexive, Kind::ReflexiveSymmetric, Kind::Preorder, Kind::Equivalence] {
            for n in 0..4 {
                assert_eq!(all(kind, n).len() as u128, kind_count(kind, n), "{kind:?} {n}");
            }
        }
    }

    #[test]
    fn seeds_spread() {
        assert_ne!(sample_seed(0, 0), sample_seed(0, 1));
        assert_ne!(sample_seed(0, 1), sample_seed(1, 0));
    }
}
