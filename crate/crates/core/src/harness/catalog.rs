//! The statements the harness knows how to check.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::chains::{chain_trace, closure, default_cutoff, sigma_unchecked, word, words};
use crate::cocart::{self, cocartesian_image, is_cocartesian, join_via_square, modular_formula_check};
use crate::error::{Error, Result};
use crate::maps::{pair_carrier, FiniteMap};
use crate::permut::{mixed_subpermutability, stationarity_conditions, zurab_conditions, Parity};
use crate::relation::{Kind, OrderKind, Relation};
use crate::ualg::{
    congruence_generated, congruence_lattice, corpus, day_formula_check, modularity_check, shifting_scan, Congruence,
    FiniteAlgebra,
};

use super::gen::{self, rel};
use super::instance::{Instance, Value};
use super::oracle;
use super::{Mode, Outcome, Params, Theorem};

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(Outcome::Violated(format!($($msg)+)));
        }
    };
}

macro_rules! assume {
    ($cond:expr) => {
        if !$cond {
            return Ok(Outcome::Skip);
        }
    };
}

/// Largest index parameter an instance may carry.
const INDEX_LIMIT: usize = 16;

fn same_size(rels: &[&Relation]) -> Result<usize> {
    let n = rels[0].size();
    for r in rels {
        if r.size() != n {
            return Err(Error::CarrierMismatch(n, r.size()));
        }
    }
    Ok(n)
}

fn on_domain(f: &FiniteMap, rels: &[&Relation]) -> Result<()> {
    rels.iter().try_for_each(|r| f.check_domain(r))
}

fn index(inst: &Instance, name: &str, min: usize) -> Result<usize> {
    let k = inst.int(name)?;
    if k < min || k > INDEX_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "`{name}` must lie in {min}..={INDEX_LIMIT}, got {k}"
        )));
    }
    Ok(k)
}

fn order_kind(inst: &Instance) -> Result<OrderKind> {
    match inst.int("equivalence")? {
        0 => Ok(OrderKind::Preorder),
        1 => Ok(OrderKind::Equivalence),
        k => Err(Error::InvalidParameter(format!("`equivalence` must be 0 or 1, got {k}"))),
    }
}

fn horizon(p: &Params) -> usize {
    p.max_index.clamp(1, INDEX_LIMIT)
}

fn pick_m(rng: &mut ChaCha8Rng, p: &Params) -> usize {
    rng.random_range(1..=horizon(p))
}

fn pick_kind(rng: &mut ChaCha8Rng) -> Kind {
    if rng.random_bool(1.0 / 3.0) {
        Kind::ReflexiveSymmetric
    } else {
        Kind::Reflexive
    }
}

/// One factor of an exhaustive product.
#[derive(Clone, Copy)]
enum Part {
    Rel(&'static str, Kind),
    Surj(&'static str),
    Int(&'static str, usize, usize),
}

impl Part {
    fn count(self, n: usize) -> u128 {
        match self {
            Part::Rel(_, k) => gen::kind_count(k, n),
            Part::Surj(_) => gen::surjection_count(n),
            Part::Int(_, lo, hi) => (hi + 1).saturating_sub(lo) as u128,
        }
    }

    fn values(self, n: usize) -> (&'static str, Vec<Value>) {
        match self {
            Part::Rel(name, k) => (name, gen::all_cached(k, n).iter().cloned().map(Value::Rel).collect()),
            Part::Surj(name) => (name, gen::all_surjections(n).into_iter().map(Value::Map).collect()),
            Part::Int(name, lo, hi) => (name, (lo..=hi).map(Value::Int).collect()),
        }
    }
}

/// Every combination of the parts on carrier `n`, last part varying
/// fastest; `None` above `limit`.
fn product(n: usize, parts: &[Part], limit: u128) -> Option<Vec<Instance>> {
    let total = parts
        .iter()
        .try_fold(1u128, |acc, p| acc.checked_mul(p.count(n)))?;
    if total > limit {
        return None;
    }
    let lists: Vec<(&str, Vec<Value>)> = parts.iter().map(|p| p.values(n)).collect();
    let mut out = Vec::with_capacity(total as usize);
    if total == 0 {
        return Some(out);
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        let inst = lists
            .iter()
            .zip(&idx)
            .fold(Instance::new(), |acc, ((name, vals), &i)| acc.with(name, vals[i].clone()));
        out.push(inst);
        let mut pos = lists.len();
        loop {
            if pos == 0 {
                return Some(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].1.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// Surjections and relation lattices

fn bijection_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    Instance::new().map_with("f", gen::any_surjection(rng, n))
}

fn bijection_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Surj("f")], limit)
}

fn bijection_eval(inst: &Instance) -> Result<Outcome> {
    let f = inst.map("f")?;
    assume!(f.is_surjective());
    if f.codomain() > 5 || f.domain() > 5 {
        return Err(Error::Capacity {
            what: "bijection check carrier",
            requested: f.domain(),
            limit: 5,
        });
    }
    let k = f.kernel_pair();
    let section = f.section().expect("surjective");
    for kind in [OrderKind::Preorder, OrderKind::Equivalence] {
        let name = kind.name();
        let below = gen::all_cached(kind.as_kind(), f.codomain());
        let pulled: Vec<Relation> = below.iter().map(|s| f.preimage_of(s)).collect();
        for (s, u) in below.iter().zip(&pulled) {
            ensure!(kind.admits(u) && k.is_subset(u), "inverse image of the {name} {s:?} is not a {name} above the kernel");
            ensure!(&f.image_of(u) == s, "image of the inverse image of {s:?} is not {s:?}");
            ensure!(&section.preimage_of(u) == s, "the section does not recover {s:?}");
        }
        let len = below.len();
        let pairs: Box<dyn Iterator<Item = (usize, usize)>> = if len <= 400 {
            Box::new((0..len).flat_map(move |i| (0..len).map(move |j| (i, j))))
        } else {
            Box::new((0..len).flat_map(move |i| [(i, (i + 1) % len), (i, (i * 7919 + 13) % len)]))
        };
        for (i, j) in pairs {
            ensure!(
                below[i].is_subset(&below[j]) == pulled[i].is_subset(&pulled[j]),
                "inverse image does not reflect the order between {:?} and {:?}",
                below[i],
                below[j]
            );
        }
        let mut sorted = pulled.clone();
        sorted.sort();
        sorted.dedup();
        ensure!(sorted.len() == pulled.len(), "inverse image is not injective on {name}s");
        let mut above: Vec<Relation> = gen::all_cached(kind.as_kind(), f.domain())
            .iter()
            .filter(|u| k.is_subset(u))
            .cloned()
            .collect();
        above.sort();
        ensure!(sorted == above, "some {name} above the kernel is not an inverse image");
        for u in &above {
            ensure!(&f.preimage_of(&f.image_of(u)) == u, "{u:?} is not recovered from its image");
        }
    }
    Ok(Outcome::Holds)
}

fn finv_f_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    let f = gen::any_surjection(rng, n);
    let mut t = rel(rng, n, Kind::Reflexive);
    if rng.random_bool(1.0 / 3.0) {
        t = closure(OrderKind::Preorder, &t.union(&f.kernel_pair()));
    }
    Instance::new().map_with("f", f).rel_with("T", t)
}

fn finv_f_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Surj("f"), Part::Rel("T", Kind::Reflexive)], limit)
}

fn finv_f_eval(inst: &Instance) -> Result<Outcome> {
    let (f, t) = (inst.map("f")?, inst.rel("T")?);
    on_domain(f, &[t])?;
    assume!(f.is_surjective() && t.is_reflexive());
    let k = f.kernel_pair();
    let back = f.preimage_of(&f.image_of(t));
    ensure!(back == k.after(&t.after(&k)), "inverse image of f(T) differs from K∘T∘K");
    if t.is_preorder() && k.is_subset(t) {
        ensure!(&back == t, "a preorder above the kernel is not recovered from its image");
    }
    Ok(Outcome::Holds)
}

fn square_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    let r = rel(rng, n, Kind::Equivalence);
    let mut t = rel(rng, n, Kind::Preorder);
    if rng.random_bool(0.5) {
        t = closure(OrderKind::Preorder, &t.union(&r));
    }
    Instance::new().rel_with("R", r).rel_with("T", t)
}

fn square_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Rel("R", Kind::Equivalence), Part::Rel("T", Kind::Preorder)], limit)
}

fn square_eval(inst: &Instance) -> Result<Outcome> {
    let (r, t) = (inst.rel("R")?, inst.rel("T")?);
    same_size(&[r, t])?;
    assume!(r.is_equivalence() && t.is_preorder());
    let rp: Vec<(usize, usize)> = r.pairs().collect();
    let square = rp
        .iter()
        .all(|&(u, u2)| rp.iter().all(|&(v, v2)| t.contains(u, v) == t.contains(u2, v2)));
    ensure!(
        r.is_subset(t) == square,
        "R ⊆ T is {} but the square condition is {square}",
        r.is_subset(t)
    );
    Ok(Outcome::Holds)
}

fn d1_kernel_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    let s = if rng.random_bool(1.0 / 3.0) {
        rel(rng, n, Kind::Equivalence)
    } else {
        rel(rng, n, Kind::Reflexive)
    };
    Instance::new().rel_with("S", s)
}

fn d1_kernel_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Rel("S", Kind::Reflexive)], limit)
}

fn d1_kernel_eval(inst: &Instance) -> Result<Outcome> {
    let s = inst.rel("S")?;
    assume!(s.is_reflexive());
    let pc = pair_carrier(s);
    let img = pc.d1.image_of(&pc.d0.kernel_pair());
    ensure!(img == s.after(&s.dual()), "d1 image of the d0 kernel differs from S∘Sᵒᵖ");
    ensure!(
        (&img == s) == s.is_equivalence(),
        "d1 image of the d0 kernel equals S is {} but S being an equivalence is {}",
        &img == s,
        s.is_equivalence()
    );
    Ok(Outcome::Holds)
}

fn idcomp_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let f = gen::any_surjection(rng, n);
    let r = rel(rng, n, Kind::Reflexive);
    let s = rel(rng, n, Kind::Reflexive);
    Instance::new()
        .map_with("f", f)
        .rel_with("R", r)
        .rel_with("S", s)
        .int_with("max_index", horizon(p))
}

fn idcomp_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    let h = horizon(p);
    product(
        n,
        &[
            Part::Surj("f"),
            Part::Rel("R", Kind::Reflexive),
            Part::Rel("S", Kind::Reflexive),
            Part::Int("max_index", h, h),
        ],
        limit,
    )
}

fn idcomp_eval(inst: &Instance) -> Result<Outcome> {
    let (f, r, s) = (inst.map("f")?, inst.rel("R")?, inst.rel("S")?);
    let h = index(inst, "max_index", 1)?;
    on_domain(f, &[r, s])?;
    assume!(f.is_surjective() && r.is_reflexive() && s.is_reflexive());
    let k = f.kernel_pair();
    let (fr, fs) = (f.image_of(r), f.image_of(s));
    let composite = fs.after(&fr);
    ensure!(
        f.preimage_of(&composite) == k.after(&s.after(&k.after(&r.after(&k)))),
        "inverse image of f(S)∘f(R) differs from K∘S∘K∘R∘K"
    );
    ensure!(f.image_of(&s.after(r)).is_subset(&composite), "f(S∘R) is not inside f(S)∘f(R)");
    ensure!(f.image_of(&s.after(&k.after(r))) == composite, "f(S∘K∘R) differs from f(S)∘f(R)");
    let mut lifted = r.clone();
    let mut power = fr.clone();
    for e in 1..=h {
        lifted = r.after(&k.after(&lifted));
        power = power.after(&fr);
        ensure!(f.image_of(&lifted) == power, "f(R)^{} differs from the image of R(KR)^{e}", e + 1);
    }
    Ok(Outcome::Holds)
}

fn cocart_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    let kind = if rng.random_bool(0.5) {
        OrderKind::Preorder
    } else {
        OrderKind::Equivalence
    };
    let f = gen::any_surjection(rng, n);
    let t = rel(rng, n, kind.as_kind());
    let m = f.codomain();
    let s = if rng.random_bool(0.6) {
        let extra = if rng.random_bool(0.5) {
            gen::relation(rng, m, Kind::Relation, 0.1)
        } else {
            Relation::empty(m)
        };
        closure(kind, &f.image_of(&t).union(&extra))
    } else {
        rel(rng, m, kind.as_kind())
    };
    Instance::new()
        .int_with("equivalence", (kind == OrderKind::Equivalence) as usize)
        .map_with("f", f)
        .rel_with("T", t)
        .rel_with("S", s)
}

fn cocart_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    let kinds = [OrderKind::Preorder, OrderKind::Equivalence];
    let maps_count = gen::surjection_count(n);
    if maps_count > limit {
        return None;
    }
    let maps = gen::all_surjections(n);
    let mut total: u128 = 0;
    for kind in kinds {
        for f in &maps {
            let c = gen::kind_count(kind.as_kind(), n).checked_mul(gen::kind_count(kind.as_kind(), f.codomain()))?;
            total = total.checked_add(c)?;
            if total > limit {
                return None;
            }
        }
    }
    let mut out = Vec::with_capacity(total as usize);
    for kind in kinds {
        for f in &maps {
            for t in gen::all_cached(kind.as_kind(), n) {
                for s in gen::all_cached(kind.as_kind(), f.codomain()) {
                    out.push(
                        Instance::new()
                            .int_with("equivalence", (kind == OrderKind::Equivalence) as usize)
                            .map_with("f", f.clone())
                            .rel_with("T", t.clone())
                            .rel_with("S", s.clone()),
                    );
                }
            }
        }
    }
    Some(out)
}

fn cocart_eval(inst: &Instance) -> Result<Outcome> {
    let kind = order_kind(inst)?;
    let (f, t, s) = (inst.map("f")?, inst.rel("T")?, inst.rel("S")?);
    on_domain(f, &[t])?;
    f.check_codomain(s)?;
    assume!(f.is_surjective() && kind.admits(t) && kind.admits(s));
    let pulled = f.preimage_of(s);
    assume!(t.is_subset(&pulled));
    if f.codomain() > 5 {
        return Err(Error::Capacity {
            what: "universal property codomain",
            requested: f.codomain(),
            limit: 5,
        });
    }
    let universal = gen::all_cached(kind.as_kind(), f.codomain())
        .iter()
        .filter(|other| t.is_subset(&f.preimage_of(other)))
        .all(|other| s.is_subset(other));
    let formula = pulled == sigma_unchecked(&f.kernel_pair(), t);
    ensure!(
        universal == formula,
        "universal property is {universal} but the inverse image formula is {formula}"
    );
    ensure!(is_cocartesian(kind, f, t, s)? == formula, "is_cocartesian disagrees with the formula");
    if formula {
        let c = cocartesian_image(kind, f, t)?;
        ensure!(&c.image == s && c.certified, "cocartesian image differs from the cocartesian S");
    }
    Ok(Outcome::Holds)
}

fn modular_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    let f = gen::any_surjection(rng, n);
    let k = f.kernel_pair();
    let s = if rng.random_bool(0.75) {
        let p = rel(rng, f.codomain(), Kind::Preorder);
        let sec = gen::random_section(rng, &f);
        let on = |x: usize| sec[f.apply(x)] == x;
        Relation::from_fn(n, |x, y| x == y || (on(x) && on(y) && p.contains(f.apply(x), f.apply(y))))
    } else {
        rel(rng, n, Kind::Preorder)
    };
    let d = gen::density(rng) / 2.0;
    let extra = gen::relation(rng, n, Kind::Relation, d);
    let t = closure(OrderKind::Preorder, &k.union(&extra));
    Instance::new().map_with("f", f).rel_with("S", s).rel_with("T", t)
}

fn modular_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(
        n,
        &[Part::Surj("f"), Part::Rel("S", Kind::Preorder), Part::Rel("T", Kind::Preorder)],
        limit,
    )
}

fn modular_eval(inst: &Instance) -> Result<Outcome> {
    let (f, s, t) = (inst.map("f")?, inst.rel("S")?, inst.rel("T")?);
    on_domain(f, &[s, t])?;
    let k = f.kernel_pair();
    let fs = f.image_of(s);
    assume!(f.is_surjective() && s.is_preorder() && t.is_preorder() && k.is_subset(t) && fs.is_preorder());
    ensure!(
        sigma_unchecked(&k, s) == f.preimage_of(&fs),
        "K ∨ S differs from the inverse image of f(S)"
    );
    ensure!(
        fs.intersect(&f.image_of(t)) == f.image_of(&s.intersect(t)),
        "f(S) ∧ f(T) differs from f(S ∧ T)"
    );
    ensure!(
        modular_formula_check(f, s, t, cocart::Mode::Strict)?,
        "(K ∨ S) ∧ T differs from K ∨ (S ∧ T)"
    );
    Ok(Outcome::Holds)
}

fn firstex_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    let f = gen::any_surjection(rng, n);
    let kind = if rng.random_bool(1.0 / 3.0) {
        Kind::Equivalence
    } else {
        Kind::Preorder
    };
    Instance::new().map_with("f", f).rel_with("T", rel(rng, n, kind))
}

fn firstex_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Surj("f"), Part::Rel("T", Kind::Preorder)], limit)
}

fn firstex_eval(inst: &Instance) -> Result<Outcome> {
    let (f, t) = (inst.map("f")?, inst.rel("T")?);
    on_domain(f, &[t])?;
    assume!(f.is_surjective() && t.is_preorder());
    let img = f.image_of(t);
    let mut power = img.clone();
    let mut k = 1;
    loop {
        let next = power.after(&img);
        if next == power {
            break;
        }
        power = next;
        k += 1;
    }
    let c = cocartesian_image(OrderKind::Preorder, f, t)?;
    ensure!(c.image == power, "cocartesian image differs from f(T)^{k}");
    ensure!(
        c.join_over_kernel == f.preimage_of(&power) && c.certified,
        "K ∨ T differs from the inverse image of f(T)^{k}"
    );
    if t.is_equivalence() {
        let e = cocartesian_image(OrderKind::Equivalence, f, t)?;
        ensure!(e.image == power, "equivalence image differs from f(T)^{k}");
    }
    Ok(Outcome::Holds)
}

fn two_reflexive_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let kind = pick_kind(rng);
    let r = rel(rng, n, kind);
    let s = rel(rng, n, kind);
    Instance::new().rel_with("R", r).rel_with("S", s).int_with("max_index", horizon(p))
}

fn two_reflexive_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    let h = horizon(p);
    product(
        n,
        &[
            Part::Rel("R", Kind::Reflexive),
            Part::Rel("S", Kind::Reflexive),
            Part::Int("max_index", h, h),
        ],
        limit,
    )
}

fn one_reflexive_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let kind = pick_kind(rng);
    Instance::new().rel_with("R", rel(rng, n, kind)).int_with("max_index", horizon(p))
}

fn one_reflexive_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    let h = horizon(p);
    product(n, &[Part::Rel("R", Kind::Reflexive), Part::Int("max_index", h, h)], limit)
}

fn rn_eval(inst: &Instance) -> Result<Outcome> {
    let r = inst.rel("R")?;
    let h = index(inst, "max_index", 1)?;
    assume!(r.is_reflexive());
    let mut p = r.clone();
    for k in 1..=h + 1 {
        let q = p.after(r);
        ensure!(
            (q == p) == p.is_preorder(),
            "R^{} = R^{k} is {} but R^{k} being a preorder is {}",
            k + 1,
            q == p,
            p.is_preorder()
        );
        if r.is_symmetric() {
            ensure!((q == p) == p.is_equivalence(), "symmetric R: R^{k} stationarity and equivalence disagree");
        }
        p = q;
    }
    Ok(Outcome::Holds)
}

// ---------------------------------------------------------------------------
// Chains

fn stationary(r: &Relation, s: &Relation) -> Result<Option<usize>> {
    Ok(chain_trace(r, s, default_cutoff(r.size()))?.stationary_index)
}

fn intertwine_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    let h = index(inst, "max_index", 1)?;
    same_size(&[r, s])?;
    assume!(r.is_reflexive() && s.is_reflexive());
    let Some(st) = stationary(r, s)? else {
        return Ok(Outcome::Violated("chain did not become stationary before the cutoff".into()));
    };
    let top = 2 * h + 1;
    let from = st.max(2);
    let upto = top.max(from + 1) + 4;
    let a = words(r, s, upto);
    let b = words(s, r, upto);
    for n in 0..=top {
        for k in 1..=3 {
            ensure!(b[n].is_subset(&a[n + k]), "(S,R)_{n} is not inside (R,S)_{}", n + k);
            ensure!(a[n].is_subset(&b[n + k]), "(R,S)_{n} is not inside (S,R)_{}", n + k);
        }
    }
    for n in from..=from + 1 {
        ensure!(b[n].is_subset(&a[n]), "stationary from {n}, yet (S,R)_{n} is not inside (R,S)_{n}");
        for k in 1..=3 {
            ensure!(
                b[n + k] == a[n] && a[n + k] == a[n],
                "stationary from {n}, yet the chains differ at {}",
                n + k
            );
        }
    }
    Ok(Outcome::Holds)
}

fn chain_pair_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let r = if rng.random_bool(0.5) {
        rel(rng, n, Kind::Preorder)
    } else {
        rel(rng, n, Kind::Reflexive)
    };
    let s = rel(rng, n, Kind::Reflexive);
    Instance::new().rel_with("R", r).rel_with("S", s).int_with("max_index", horizon(p))
}

fn identities_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    let h = index(inst, "max_index", 1)?;
    same_size(&[r, s])?;
    assume!(r.is_reflexive() && s.is_reflexive());
    let pre = r.is_preorder();
    let a = words(r, s, 2 * (h + 1) * 3 + 2);
    for n in 0..=h {
        for m in 0..=h {
            ensure!(a[2 * n].after(&a[m]) == a[2 * n + m], "(R,S)_{}(R,S)_{m} differs from (R,S)_{}", 2 * n, 2 * n + m);
            let p = a[2 * n + 1].after(&a[2 * m]);
            ensure!(
                a[2 * n + 2 * m].is_subset(&p) && p.is_subset(&a[2 * n + 2 * m + 2]),
                "(R,S)_{}(R,S)_{} escapes its bounds",
                2 * n + 1,
                2 * m
            );
            if pre && m >= 1 {
                ensure!(p == a[2 * n + 2 * m], "R a preorder, yet (R,S)_{}(R,S)_{} differs from (R,S)_{}", 2 * n + 1, 2 * m, 2 * n + 2 * m);
            }
            let q = a[2 * n + 1].after(&a[2 * m + 1]);
            ensure!(
                a[2 * n + 2 * m + 1].is_subset(&q) && q.is_subset(&a[2 * n + 2 * m + 3]),
                "(R,S)_{}(R,S)_{} escapes its bounds",
                2 * n + 1,
                2 * m + 1
            );
            if pre {
                ensure!(q == a[2 * n + 2 * m + 1], "R a preorder, yet (R,S)_{}(R,S)_{} differs from (R,S)_{}", 2 * n + 1, 2 * m + 1, 2 * n + 2 * m + 1);
            }
            if n + m >= 1 {
                let c = a[n].after(&a[m]);
                ensure!(
                    a[n + m - 1].is_subset(&c) && c.is_subset(&a[n + m + 1]),
                    "(R,S)_{n}(R,S)_{m} escapes its bounds"
                );
            }
        }
        if n >= 1 {
            let sq = a[n].after(&a[n]);
            ensure!(
                a[2 * n - 1].is_subset(&sq) && sq.is_subset(&a[2 * n + 1]),
                "(R,S)_{n} squared escapes its bounds"
            );
        }
        for k in 1..=3 {
            let pw = a[2 * n + 1].power(k);
            ensure!(
                a[2 * n * k + 1].is_subset(&pw) && pw.is_subset(&a[2 * (n + 1) * k - 1]),
                "(R,S)_{}^{k} escapes its bounds",
                2 * n + 1
            );
            if pre {
                ensure!(pw == a[2 * n * k + 1], "R a preorder, yet (R,S)_{}^{k} differs from (R,S)_{}", 2 * n + 1, 2 * n * k + 1);
            }
            ensure!(a[2 * n].power(k) == a[2 * n * k], "(R,S)_{}^{k} differs from (R,S)_{}", 2 * n, 2 * n * k);
        }
    }
    Ok(Outcome::Holds)
}

fn rsr_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    let h = index(inst, "max_index", 1)?;
    same_size(&[r, s])?;
    assume!(r.is_reflexive() && s.is_reflexive());
    let a = words(r, s, 4 * h);
    for k in 1..=h {
        let p = a[3].power(k);
        ensure!(
            a[2 * k + 1].is_subset(&p) && p.is_subset(&a[4 * k - 1]),
            "(RSR)^{k} escapes [(R,S)_{}, (R,S)_{}]",
            2 * k + 1,
            4 * k - 1
        );
        if r.is_preorder() {
            ensure!(p == a[2 * k + 1], "R a preorder, yet (RSR)^{k} differs from (R,S)_{}", 2 * k + 1);
        }
    }
    Ok(Outcome::Holds)
}

fn map_rel_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let f = gen::any_surjection(rng, n);
    let t = if rng.random_bool(1.0 / 3.0) {
        rel(rng, n, Kind::Preorder)
    } else {
        rel(rng, n, Kind::Reflexive)
    };
    Instance::new().map_with("f", f).rel_with("T", t).int_with("max_index", horizon(p))
}

fn map_rel_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    let h = horizon(p);
    product(
        n,
        &[Part::Surj("f"), Part::Rel("T", Kind::Reflexive), Part::Int("max_index", h, h)],
        limit,
    )
}

fn image_powers_eval(inst: &Instance) -> Result<Outcome> {
    let (f, t) = (inst.map("f")?, inst.rel("T")?);
    let h = index(inst, "max_index", 1)?;
    on_domain(f, &[t])?;
    assume!(f.is_surjective() && t.is_reflexive());
    let k = f.kernel_pair();
    let ft = f.image_of(t);
    let tk = words(t, &k, 2 * h + 1);
    let kt = words(&k, t, 2 * h + 1);
    for m in 1..=h {
        let p = ft.power(m);
        ensure!(f.image_of(&tk[2 * m - 1]) == p, "f((T,K)_{}) differs from f(T)^{m}", 2 * m - 1);
        ensure!(f.image_of(&tk[2 * m]) == p, "f((T,K)_{}) differs from f(T)^{m}", 2 * m);
        ensure!(f.image_of(&kt[2 * m]) == p, "f((K,T)_{}) differs from f(T)^{m}", 2 * m);
        ensure!(f.image_of(&kt[2 * m + 1]) == p, "f((K,T)_{}) differs from f(T)^{m}", 2 * m + 1);
    }
    Ok(Outcome::Holds)
}

fn supermain_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    same_size(&[r, s])?;
    assume!(r.is_reflexive() && s.is_reflexive());
    let sig = sigma_unchecked(r, s);
    ensure!(sig.is_preorder(), "Σ is not a preorder");
    if r.is_symmetric() && s.is_symmetric() {
        ensure!(sig.is_equivalence(), "Σ of symmetric relations is not an equivalence");
    }
    ensure!(sigma_unchecked(s, r) == sig, "Σ((S,R)) differs from Σ((R,S))");
    ensure!(
        sigma_unchecked(&r.dual(), &s.dual()) == sig.dual(),
        "Σ((Rᵒᵖ,Sᵒᵖ)) differs from Σ((R,S))ᵒᵖ"
    );
    ensure!(sig == oracle::preorder_join(r, s), "Σ differs from the least preorder containing R ∪ S");
    for (k, w) in words(r, s, 5).iter().enumerate() {
        ensure!(w.after(&sig) == sig && sig.after(w) == sig, "(R,S)_{k} does not absorb into Σ");
    }
    Ok(Outcome::Holds)
}

fn keylemma_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    same_size(&[r, s])?;
    assume!(r.is_reflexive() && s.is_reflexive());
    let Some(st) = stationary(r, s)? else {
        return Ok(Outcome::Violated("chain did not become stationary before the cutoff".into()));
    };
    const STEPS: usize = 3;
    let last = st.max(2) + 1;
    let a = words(r, s, last + 2 * STEPS + 2);
    let b = words(s, r, last + 2 * STEPS + 2);
    let mut seen = false;
    for n in 2..=last {
        if a[n + 1] != a[n] {
            continue;
        }
        seen = true;
        ensure!(
            b[n + 2] == b[n + 1] && a[n + 3] == a[n + 2],
            "(R,S)_{} = (R,S)_{n} does not propagate one step",
            n + 1
        );
        for i in 1..=STEPS {
            ensure!(
                b[n + 2 * i] == b[n + 2 * i - 1] && a[n + 2 * i + 1] == a[n + 2 * i],
                "(R,S)_{} = (R,S)_{n} does not propagate {i} steps",
                n + 1
            );
        }
        for i in 0..=STEPS {
            ensure!(
                b[n + 2 * i].is_subset(&a[n + 2 * i]) && a[n + 2 * i + 1].is_subset(&b[n + 2 * i + 1]),
                "(R,S)_{} = (R,S)_{n}, yet the chains do not interleave at {}",
                n + 1,
                n + 2 * i
            );
        }
    }
    assume!(seen);
    Ok(Outcome::Holds)
}

fn keylemma2_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    same_size(&[r, s])?;
    assume!(r.is_reflexive() && s.is_reflexive());
    let Some(st) = stationary(r, s)? else {
        return Ok(Outcome::Violated("chain did not become stationary before the cutoff".into()));
    };
    let far = default_cutoff(r.size());
    let last = st.max(2) + 2;
    let a = words(r, s, last + far);
    for n in 0..=last {
        let two = a[n + 2] == a[n];
        let forever = (1..=far).all(|j| a[n + j] == a[n]);
        ensure!(
            two == forever,
            "(R,S)_{} = (R,S)_{n} is {two} but stationarity from {n} is {forever}",
            n + 2
        );
    }
    Ok(Outcome::Holds)
}

// ---------------------------------------------------------------------------
// Stationarity theorems

fn odd_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let (r, s) = if rng.random_bool(0.25) {
        (rel(rng, n, Kind::Equivalence), rel(rng, n, Kind::Equivalence))
    } else {
        let s_kind = if rng.random_bool(0.3) { Kind::Preorder } else { Kind::Reflexive };
        (rel(rng, n, Kind::Preorder), rel(rng, n, s_kind))
    };
    Instance::new().rel_with("R", r).rel_with("S", s).int_with("m", pick_m(rng, p))
}

fn odd_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(
        n,
        &[
            Part::Rel("R", Kind::Preorder),
            Part::Rel("S", Kind::Reflexive),
            Part::Int("m", 1, horizon(p)),
        ],
        limit,
    )
}

fn odd_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    let m = index(inst, "m", 1)?;
    same_size(&[r, s])?;
    assume!(r.is_preorder() && s.is_reflexive());
    let rep = stationarity_conditions(Parity::Odd, r, s, m, cocart::Mode::Strict)?;
    ensure!(rep.consistent, "the five conditions disagree: {:?}", rep.conditions);
    if rep.get(1) {
        let term = word(r, s, 2 * m + 1);
        ensure!(term == sigma_unchecked(r, s), "conditions hold, yet (R,S)_{} is not R ∨ S", 2 * m + 1);
        if r.is_symmetric() && s.is_symmetric() {
            ensure!(term.is_equivalence(), "conditions hold for equivalences, yet the join is not one");
        }
    }
    Ok(Outcome::Holds)
}

fn even_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let (r, s) = if rng.random_bool(0.25) {
        (rel(rng, n, Kind::Equivalence), rel(rng, n, Kind::Equivalence))
    } else {
        let r_kind = if rng.random_bool(0.3) { Kind::Preorder } else { Kind::Reflexive };
        (rel(rng, n, r_kind), rel(rng, n, Kind::Preorder))
    };
    Instance::new().rel_with("R", r).rel_with("S", s).int_with("m", pick_m(rng, p))
}

fn even_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(
        n,
        &[
            Part::Rel("R", Kind::Reflexive),
            Part::Rel("S", Kind::Preorder),
            Part::Int("m", 1, horizon(p)),
        ],
        limit,
    )
}

fn even_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    let m = index(inst, "m", 1)?;
    same_size(&[r, s])?;
    assume!(r.is_reflexive() && s.is_preorder());
    let rep = stationarity_conditions(Parity::Even, r, s, m, cocart::Mode::Strict)?;
    ensure!(rep.consistent, "conditions violate the even pattern: {:?}", rep.conditions);
    if rep.get(1) {
        let term = word(r, s, 2 * m);
        ensure!(term == sigma_unchecked(r, s), "conditions hold, yet (R,S)_{} is not R ∨ S", 2 * m);
        if r.is_symmetric() && s.is_symmetric() {
            ensure!(term.is_equivalence(), "conditions hold for equivalences, yet the join is not one");
        }
    }
    Ok(Outcome::Holds)
}

fn even_converse_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    let m = index(inst, "m", 1)?;
    same_size(&[r, s])?;
    assume!(r.is_reflexive() && s.is_preorder());
    let rep = stationarity_conditions(Parity::Even, r, s, m, cocart::Mode::Strict)?;
    if rep.second_list_without_first() {
        return Ok(Outcome::Violated(format!(
            "conditions 4 and 5 hold while 1 to 3 fail at index {}",
            2 * m
        )));
    }
    Ok(Outcome::Holds)
}

fn map_rel_m_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let f = gen::any_surjection(rng, n);
    let t = if rng.random_bool(1.0 / 3.0) {
        rel(rng, n, Kind::Preorder)
    } else {
        rel(rng, n, Kind::Reflexive)
    };
    Instance::new().map_with("f", f).rel_with("T", t).int_with("m", pick_m(rng, p))
}

fn map_rel_m_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(
        n,
        &[Part::Surj("f"), Part::Rel("T", Kind::Reflexive), Part::Int("m", 1, horizon(p))],
        limit,
    )
}

fn stat11_eval(inst: &Instance) -> Result<Outcome> {
    let (f, t) = (inst.map("f")?, inst.rel("T")?);
    let m = index(inst, "m", 1)?;
    on_domain(f, &[t])?;
    assume!(f.is_surjective() && t.is_reflexive());
    let k = f.kernel_pair();
    let power = f.image_of(t).power(m);
    let left = word(t, &k, 2 * m + 1);
    let right = word(&k, t, 2 * m + 1);
    let c1 = power.is_preorder();
    let c2 = left.is_subset(&right);
    ensure!(
        c1 == c2,
        "f(T)^{m} being a preorder is {c1} but (T,K)_{0} ⊆ (K,T)_{0} is {c2}",
        2 * m + 1
    );
    if c1 && t.is_preorder() {
        let c = cocartesian_image(OrderKind::Preorder, f, t)?;
        ensure!(c.image == power, "cocartesian image differs from f(T)^{m}");
        ensure!(c.join_over_kernel == right, "K ∨ T differs from (K,T)_{}", 2 * m + 1);
    }
    Ok(Outcome::Holds)
}

// ---------------------------------------------------------------------------
// Instances of the stationarity theorems

fn disy_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    Instance::new()
        .map_with("f", gen::any_surjection(rng, n))
        .rel_with("R", rel(rng, n, Kind::Equivalence))
        .rel_with("S", rel(rng, n, Kind::Equivalence))
        .int_with("m", pick_m(rng, p))
}

fn disy_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(
        n,
        &[
            Part::Surj("f"),
            Part::Rel("R", Kind::Equivalence),
            Part::Rel("S", Kind::Equivalence),
            Part::Int("m", 1, horizon(p)),
        ],
        limit,
    )
}

fn disy_eval(inst: &Instance) -> Result<Outcome> {
    let (f, r, s) = (inst.map("f")?, inst.rel("R")?, inst.rel("S")?);
    let m = index(inst, "m", 1)?;
    on_domain(f, &[r, s])?;
    assume!(f.is_surjective() && r.is_equivalence() && s.is_equivalence());
    let k = f.kernel_pair();
    let eq = f.image_of(r).power(m).is_equivalence();
    let sub = word(r, &k, 2 * m + 1).is_subset(&word(&k, r, 2 * m + 1));
    ensure!(eq == sub, "f(R)^{m} being an equivalence is {eq} but the chain inclusion is {sub}");
    let pc = pair_carrier(r);
    let moved = pc.d1.image_of(&pc.d0.preimage_of(s));
    ensure!(moved == r.after(&s.after(r)), "d1(d0⁻¹(S)) differs from R∘S∘R");
    let term = word(r, s, 2 * m + 1);
    ensure!(moved.power(m) == term, "(RSR)^{m} differs from (R,S)_{}", 2 * m + 1);
    if term.is_equivalence() {
        ensure!(term == sigma_unchecked(r, s), "(R,S)_{} is an equivalence but not R ∨ S", 2 * m + 1);
    }
    Ok(Outcome::Holds)
}

fn reflexive_n_sample(lo: usize, hi: usize) -> impl Fn(&mut ChaCha8Rng, usize, &Params) -> Instance {
    move |rng, n, _| {
        let kind = pick_kind(rng);
        Instance::new().rel_with("R", rel(rng, n, kind)).int_with("n", rng.random_range(lo..=hi))
    }
}

fn zurab_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    reflexive_n_sample(3, horizon(p) + 2)(rng, n, p)
}

fn zurab_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Rel("R", Kind::Reflexive), Part::Int("n", 3, horizon(p) + 2)], limit)
}

fn zurab_eval(inst: &Instance) -> Result<Outcome> {
    let r = inst.rel("R")?;
    let n = index(inst, "n", 3)?;
    assume!(r.is_reflexive());
    let p = r.power(n - 1);
    let q = p.after(r);
    let dual = r.dual();
    ensure!((q == p) == p.is_preorder(), "R^{n} = R^{} disagrees with R^{} being a preorder", n - 1, n - 1);
    ensure!(
        (dual.is_subset(&p) && q == p) == p.is_equivalence(),
        "the two-part condition disagrees with R^{} being an equivalence",
        n - 1
    );
    let rep = zurab_conditions(r, n)?;
    ensure!(
        rep.power_stationary == Some(q == p) && rep.dual_below_power == Some(dual.is_subset(&p)),
        "report disagrees with direct computation"
    );
    ensure!(
        rep.zigzag_stationary == word(r, &dual, n - 1).is_preorder(),
        "(R,Rᵒᵖ)_{} = (R,Rᵒᵖ)_{} disagrees with (R,Rᵒᵖ)_{} being a preorder",
        n + 1,
        n - 1,
        n - 1
    );
    Ok(Outcome::Holds)
}

fn genmal_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    reflexive_n_sample(1, horizon(p) + 1)(rng, n, p)
}

fn genmal_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Rel("R", Kind::Reflexive), Part::Int("n", 1, horizon(p) + 1)], limit)
}

fn genmal_eval(inst: &Instance) -> Result<Outcome> {
    let r = inst.rel("R")?;
    let n = index(inst, "n", 1)?;
    assume!(r.is_reflexive());
    let p = r.power(n);
    let q = p.after(r);
    let cond = q == p && r.dual().is_subset(&p);
    ensure!(
        p.is_equivalence() == cond,
        "R^{n} being an equivalence is {} but the stationarity condition is {cond}",
        p.is_equivalence()
    );
    if p.is_equivalence() {
        ensure!(p == closure(OrderKind::Equivalence, r), "R^{n} is an equivalence but not the one generated by R");
    }
    Ok(Outcome::Holds)
}

fn mixed_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let r = if rng.random_bool(0.2) {
        Relation::delta(n)
    } else {
        rel(rng, n, Kind::Preorder)
    };
    Instance::new()
        .rel_with("R", r)
        .rel_with("S", rel(rng, n, Kind::Reflexive))
        .int_with("n", rng.random_range(2..=horizon(p) + 1))
}

fn mixed_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(
        n,
        &[
            Part::Rel("R", Kind::Preorder),
            Part::Rel("S", Kind::Reflexive),
            Part::Int("n", 2, horizon(p) + 1),
        ],
        limit,
    )
}

fn mixed_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    let n = index(inst, "n", 2)?;
    same_size(&[r, s])?;
    assume!(r.is_preorder() && s.is_reflexive());
    let sub = mixed_subpermutability(r, s, n, cocart::Mode::Strict)?;
    let pre = word(r, s, 2 * n - 1).is_preorder();
    ensure!(sub == pre, "(S,R) ⊆ (R,S) at {0} is {sub} but (R,S)_{0} being a preorder is {pre}", 2 * n - 1);
    let delta = Relation::delta(r.size());
    ensure!(
        mixed_subpermutability(&delta, s, n, cocart::Mode::Strict)? == s.power(n).is_subset(&s.power(n - 1)),
        "with R = Δ the condition is not S^{n} ⊆ S^{}",
        n - 1
    );
    ensure!(word(r, s, 2 * n + 1) == word(r, s, 3).power(n), "(RSR)^{n} differs from (R,S)_{}", 2 * n + 1);
    Ok(Outcome::Holds)
}

fn main2_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    Instance::new()
        .rel_with("R", rel(rng, n, Kind::Equivalence))
        .rel_with("S", rel(rng, n, Kind::Preorder))
}

fn main2_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Rel("R", Kind::Equivalence), Part::Rel("S", Kind::Preorder)], limit)
}

fn main2_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    same_size(&[r, s])?;
    assume!(r.is_equivalence() && s.is_preorder());
    let j = join_via_square(r, s)?;
    ensure!(j == oracle::preorder_join(r, s), "square construction differs from R ∨ S");
    let pc = pair_carrier(r);
    let back = cocartesian_image(OrderKind::Preorder, &pc.d1, &pc.d0.kernel_pair())?.image;
    ensure!(&back == r, "d1 image of the d0 kernel differs from R");
    Ok(Outcome::Holds)
}

// ---------------------------------------------------------------------------
// Algebras

fn corpus_of_size(n: usize) -> Vec<FiniteAlgebra> {
    corpus().into_iter().filter(|(_, a)| a.size() == n).map(|(_, a)| a).collect()
}

fn algebra_of_size(rng: &mut ChaCha8Rng, n: usize, random_up_to: usize) -> FiniteAlgebra {
    let fixed = corpus_of_size(n);
    if !fixed.is_empty() && (n > random_up_to || rng.random_bool(0.5)) {
        fixed.choose(rng).expect("non-empty").clone()
    } else {
        gen::small_algebra(rng, n)
    }
}

fn day_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    let a = algebra_of_size(rng, n, 6);
    let gen_cong = |rng: &mut ChaCha8Rng| {
        let seed = gen::relation(rng, n, Kind::Relation, 0.15);
        congruence_generated(&a, &seed).expect("carrier within the lattice bound").into_relation()
    };
    let t = gen_cong(rng);
    let s = gen_cong(rng);
    let r = gen_cong(rng);
    Instance::new().alg_with("A", a).rel_with("T", t).rel_with("S", s).rel_with("R", r)
}

fn day_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    let mut out = Vec::new();
    for a in corpus_of_size(n) {
        let lat = congruence_lattice(&a).ok()?;
        let len = lat.len() as u128;
        if out.len() as u128 + len * len * len > limit {
            return None;
        }
        for t in &lat.elements {
            for s in &lat.elements {
                for r in &lat.elements {
                    out.push(
                        Instance::new()
                            .alg_with("A", a.clone())
                            .rel_with("T", t.clone())
                            .rel_with("S", s.clone())
                            .rel_with("R", r.clone()),
                    );
                }
            }
        }
    }
    Some(out)
}

fn congruence_of(a: &FiniteAlgebra, r: &Relation) -> Result<Option<Congruence>> {
    if r.size() != a.size() {
        return Err(Error::CarrierMismatch(a.size(), r.size()));
    }
    Ok(Congruence::new(a, r.clone()).ok())
}

fn day_eval(inst: &Instance) -> Result<Outcome> {
    let a = inst.alg("A")?;
    let (t, s, r) = (
        congruence_of(a, inst.rel("T")?)?,
        congruence_of(a, inst.rel("S")?)?,
        congruence_of(a, inst.rel("R")?)?,
    );
    let (Some(t), Some(s), Some(r)) = (t, s, r) else {
        return Ok(Outcome::Skip);
    };
    ensure!(
        day_formula_check(a, &t, &s, &r)?,
        "(T ∨ S) ∩ R differs from the union of the chain terms met with R"
    );
    Ok(Outcome::Holds)
}

fn gumm_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    Instance::new().alg_with("A", algebra_of_size(rng, n, 5))
}

fn gumm_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    let list: Vec<Instance> = corpus_of_size(n)
        .into_iter()
        .map(|a| Instance::new().alg_with("A", a))
        .collect();
    (list.len() as u128 <= limit).then_some(list)
}

fn gumm_eval(inst: &Instance) -> Result<Outcome> {
    let a = inst.alg("A")?;
    let modular = modularity_check(a)?.is_none();
    let shifting = shifting_scan(a)?.witness.is_none();
    ensure!(!shifting || modular, "shifting holds but the congruence lattice is not modular");
    if let Some((name, _)) = corpus().into_iter().find(|(_, b)| b == a) {
        match name {
            "z4" | "z2xz2" | "z6" | "s3" => {
                ensure!(shifting && modular, "{name}: expected shifting and modularity, got {shifting} and {modular}")
            }
            "set4" => ensure!(
                !shifting && !modular,
                "set4: expected neither shifting nor modularity, got {shifting} and {modular}"
            ),
            _ => {}
        }
    }
    Ok(Outcome::Holds)
}

// ---------------------------------------------------------------------------
// Statements that fail in finite sets

fn goursat_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    Instance::new()
        .map_with("f", gen::any_surjection(rng, n))
        .rel_with("T", rel(rng, n, Kind::Preorder))
}

fn goursat_eval(inst: &Instance) -> Result<Outcome> {
    let (f, t) = (inst.map("f")?, inst.rel("T")?);
    on_domain(f, &[t])?;
    assume!(f.is_surjective() && t.is_preorder());
    ensure!(f.image_of(t).is_transitive(), "f(T) is not transitive");
    Ok(Outcome::Holds)
}

fn planted_path(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Relation {
    let mut r = gen::relation(rng, n, Kind::Reflexive, 0.05);
    if rng.random_bool(0.5) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        for w in perm.windows(2).take(k) {
            r.insert(w[0], w[1]);
        }
    }
    r
}

fn not_perm_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    let k = p.n.unwrap_or(3);
    Instance::new().rel_with("R", planted_path(rng, n, k)).int_with("n", k)
}

fn not_perm_exhaust(n: usize, p: &Params, limit: u128) -> Option<Vec<Instance>> {
    let k = p.n.unwrap_or(3);
    product(n, &[Part::Rel("R", Kind::Reflexive), Part::Int("n", k, k)], limit)
}

fn not_perm3_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    Instance::new().rel_with("R", planted_path(rng, n, 3)).int_with("n", 3)
}

fn not_perm3_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Rel("R", Kind::Reflexive), Part::Int("n", 3, 3)], limit)
}

fn not_perm_eval(inst: &Instance) -> Result<Outcome> {
    let r = inst.rel("R")?;
    let k = index(inst, "n", 1)?;
    assume!(r.is_reflexive());
    ensure!(r.power(k) == r.power(k - 1), "R^{k} differs from R^{}", k - 1);
    Ok(Outcome::Holds)
}

fn mixed3_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    Instance::new()
        .rel_with("R", rel(rng, n, Kind::Preorder))
        .rel_with("S", rel(rng, n, Kind::Reflexive))
}

fn mixed3_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(n, &[Part::Rel("R", Kind::Preorder), Part::Rel("S", Kind::Reflexive)], limit)
}

fn mixed3_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s) = (inst.rel("R")?, inst.rel("S")?);
    same_size(&[r, s])?;
    assume!(r.is_preorder() && s.is_reflexive());
    ensure!(word(s, r, 3).is_subset(&word(r, s, 3)), "(S,R)_3 is not inside (R,S)_3");
    Ok(Outcome::Holds)
}

fn partition_sample(rng: &mut ChaCha8Rng, n: usize, _: &Params) -> Instance {
    let r = rel(rng, n, Kind::Equivalence);
    let s = rel(rng, n, Kind::Equivalence);
    let t = closure(OrderKind::Equivalence, &r.union(&gen::relation(rng, n, Kind::Relation, 0.15)));
    Instance::new().rel_with("R", r).rel_with("S", s).rel_with("T", t)
}

fn partition_exhaust(n: usize, _: &Params, limit: u128) -> Option<Vec<Instance>> {
    product(
        n,
        &[
            Part::Rel("R", Kind::Equivalence),
            Part::Rel("S", Kind::Equivalence),
            Part::Rel("T", Kind::Equivalence),
        ],
        limit,
    )
}

fn partition_eval(inst: &Instance) -> Result<Outcome> {
    let (r, s, t) = (inst.rel("R")?, inst.rel("S")?, inst.rel("T")?);
    same_size(&[r, s, t])?;
    assume!(r.is_equivalence() && s.is_equivalence() && t.is_equivalence() && r.is_subset(t));
    ensure!(
        sigma_unchecked(r, s).intersect(t) == sigma_unchecked(r, &s.intersect(t)),
        "(R ∨ S) ∧ T differs from R ∨ (S ∧ T)"
    );
    Ok(Outcome::Holds)
}

fn stat_even_converse_sample(rng: &mut ChaCha8Rng, n: usize, p: &Params) -> Instance {
    Instance::new()
        .rel_with("R", rel(rng, n, Kind::Reflexive))
        .rel_with("S", rel(rng, n, Kind::Preorder))
        .int_with("m", pick_m(rng, p))
}

// ---------------------------------------------------------------------------

const fn thm(
    id: &'static str,
    statement: &'static str,
    mode: Mode,
    sizes: (usize, usize),
    sample: super::SampleFn,
    exhaust: Option<super::ExhaustFn>,
    eval: super::EvalFn,
) -> Theorem {
    Theorem {
        id,
        statement,
        mode,
        default_size: sizes.0,
        max_size: sizes.1,
        sample,
        exhaust,
        eval,
    }
}

static CATALOG: [Theorem; 32] = [
    thm(
        "thm-main3-bijection",
        "Inverse image along a surjection is an order isomorphism from preorders (equivalences) on the codomain onto those above the kernel, with the direct image as inverse.",
        Mode::Verify,
        (4, 5),
        bijection_sample,
        Some(bijection_exhaust),
        bijection_eval,
    ),
    thm(
        "thm-main3-finv-f",
        "For reflexive T, the inverse image of f(T) is K∘T∘K; a preorder above K is recovered from its image.",
        Mode::Verify,
        (5, 8),
        finv_f_sample,
        Some(finv_f_exhaust),
        finv_f_eval,
    ),
    thm(
        "lem-square2-cartesian",
        "For an equivalence R and a preorder T, R ⊆ T exactly when T relates u to v iff it relates u' to v' for all R-related pairs.",
        Mode::Verify,
        (6, 8),
        square_sample,
        Some(square_exhaust),
        square_eval,
    ),
    thm(
        "lem-d1-kernel",
        "On the pair carrier of a reflexive S, the d1 image of the d0 kernel is S∘Sᵒᵖ, which equals S iff S is an equivalence.",
        Mode::Verify,
        (6, 8),
        d1_kernel_sample,
        Some(d1_kernel_exhaust),
        d1_kernel_eval,
    ),
    thm(
        "prop-idcomp-star",
        "Images along f compose through the kernel: f⁻¹(f(S)∘f(R)) = K∘S∘K∘R∘K and f(S)∘f(R) = f(S∘K∘R).",
        Mode::Verify,
        (6, 8),
        idcomp_sample,
        Some(idcomp_exhaust),
        idcomp_eval,
    ),
    thm(
        "prop10-cocartesian",
        "A surjection f : T → S is cocartesian exactly when f⁻¹(S) = K ∨ T.",
        Mode::Verify,
        (4, 5),
        cocart_sample,
        Some(cocart_exhaust),
        cocart_eval,
    ),
    thm(
        "cor-modular-formula",
        "If f(S) is a preorder and K ⊆ T, then (K ∨ S) ∧ T = K ∨ (S ∧ T).",
        Mode::Verify,
        (6, 8),
        modular_sample,
        Some(modular_exhaust),
        modular_eval,
    ),
    thm(
        "prop-Rn-stationary",
        "For reflexive R, R^(k+1) = R^k iff R^k is a preorder (an equivalence when R is symmetric).",
        Mode::Verify,
        (6, 8),
        one_reflexive_sample,
        Some(one_reflexive_exhaust),
        rn_eval,
    ),
    thm(
        "cor-firstex-cocart",
        "The cocartesian image of a preorder T is the first stationary power of f(T).",
        Mode::Verify,
        (6, 8),
        firstex_sample,
        Some(firstex_exhaust),
        firstex_eval,
    ),
    thm(
        "chain-intertwine",
        "The chains of (R,S) and (S,R) interleave, and coincide once either is stationary from an index of at least 2.",
        Mode::Verify,
        (7, 8),
        two_reflexive_sample,
        Some(two_reflexive_exhaust),
        intertwine_eval,
    ),
    thm(
        "prop-chain-identities",
        "Products of chain terms are bracketed by chain terms, with equality when R is a preorder.",
        Mode::Verify,
        (7, 8),
        chain_pair_sample,
        Some(two_reflexive_exhaust),
        identities_eval,
    ),
    thm(
        "cor-RSR-power",
        "(RSR)^k lies between (R,S)_(2k+1) and (R,S)_(4k-1), and equals the former when R is a preorder.",
        Mode::Verify,
        (7, 8),
        chain_pair_sample,
        Some(two_reflexive_exhaust),
        rsr_eval,
    ),
    thm(
        "lem-image-powers",
        "f(T)^m is the image of each of (T,K)_(2m-1), (T,K)_2m, (K,T)_2m and (K,T)_(2m+1).",
        Mode::Verify,
        (7, 8),
        map_rel_sample,
        Some(map_rel_exhaust),
        image_powers_eval,
    ),
    thm(
        "supermain-sigma-preorder",
        "Σ((R,S)) is the least preorder containing R and S, symmetric in its arguments and an equivalence for symmetric inputs.",
        Mode::Verify,
        (8, 16),
        two_reflexive_sample,
        Some(two_reflexive_exhaust),
        supermain_eval,
    ),
    thm(
        "keylemma-implications",
        "Once (R,S)_(n+1) = (R,S)_n for some n ≥ 2, equality propagates along both chains and they interleave.",
        Mode::Verify,
        (8, 12),
        two_reflexive_sample,
        Some(two_reflexive_exhaust),
        keylemma_eval,
    ),
    thm(
        "keylemma2-equivalence",
        "(R,S)_(n+2) = (R,S)_n iff the chain is stationary from n.",
        Mode::Verify,
        (8, 10),
        two_reflexive_sample,
        Some(two_reflexive_exhaust),
        keylemma2_eval,
    ),
    thm(
        "stat-odd-equivalence",
        "For a preorder R and reflexive S the five stationarity conditions at index 2m+1 are equivalent.",
        Mode::Verify,
        (7, 10),
        odd_sample,
        Some(odd_exhaust),
        odd_eval,
    ),
    thm(
        "stat-even-implication",
        "For reflexive R and a preorder S, conditions 1 to 3 at index 2m agree, 4 and 5 agree, and the first group implies the second.",
        Mode::Verify,
        (7, 10),
        even_sample,
        Some(even_exhaust),
        even_eval,
    ),
    thm(
        "cor-stat11-two-way",
        "f(T)^m is a preorder iff (T,K)_(2m+1) ⊆ (K,T)_(2m+1); then it is the cocartesian image of a preorder T.",
        Mode::Verify,
        (7, 8),
        map_rel_m_sample,
        Some(map_rel_m_exhaust),
        stat11_eval,
    ),
    thm(
        "disy-instance",
        "For equivalences R and S, d1(d0⁻¹(S)) = RSR and its m-th power is (R,S)_(2m+1), which is R ∨ S when it is an equivalence.",
        Mode::Verify,
        (6, 8),
        disy_sample,
        Some(disy_exhaust),
        disy_eval,
    ),
    thm(
        "zurab-instance-scan",
        "For reflexive R, R^n = R^(n-1) iff R^(n-1) is a preorder, and adding Rᵒᵖ ⊆ R^(n-1) characterizes equivalences.",
        Mode::Verify,
        (7, 10),
        zurab_sample,
        Some(zurab_exhaust),
        zurab_eval,
    ),
    thm(
        "genmal-instance-scan",
        "R^n is an equivalence iff R^(n+1) = R^n and Rᵒᵖ ⊆ R^n; it is then the equivalence generated by R.",
        Mode::Verify,
        (7, 10),
        genmal_sample,
        Some(genmal_exhaust),
        genmal_eval,
    ),
    thm(
        "mixed-instance",
        "For a preorder R, (S,R)_(2n-1) ⊆ (R,S)_(2n-1) iff (R,S)_(2n-1) is a preorder.",
        Mode::Verify,
        (7, 10),
        mixed_sample,
        Some(mixed_exhaust),
        mixed_eval,
    ),
    thm(
        "main2-join-via-square",
        "For an equivalence R and a preorder S, R ∨ S is the d1 cocartesian image of d0⁻¹(S) on the pair carrier of R.",
        Mode::Verify,
        (4, 8),
        main2_sample,
        Some(main2_exhaust),
        main2_eval,
    ),
    thm(
        "day-formula",
        "For congruences T, S, R of an algebra, (T ∨ S) ∩ R is the union of the chain terms (T,S)_i ∩ R.",
        Mode::Verify,
        (6, 6),
        day_sample,
        Some(day_exhaust),
        day_eval,
    ),
    thm(
        "gumm-shifting-vs-modular",
        "An algebra satisfying the shifting property has a modular congruence lattice.",
        Mode::Verify,
        (6, 6),
        gumm_sample,
        Some(gumm_exhaust),
        gumm_eval,
    ),
    thm(
        "goursat-direct-image",
        "The direct image of a preorder along a surjection is transitive.",
        Mode::Falsify,
        (4, 6),
        goursat_sample,
        Some(firstex_exhaust),
        goursat_eval,
    ),
    thm(
        "set-not-n-permutable",
        "Every reflexive relation satisfies R^n = R^(n-1).",
        Mode::Falsify,
        (6, 8),
        not_perm_sample,
        Some(not_perm_exhaust),
        not_perm_eval,
    ),
    thm(
        "set-not-3-permutable",
        "Every reflexive relation satisfies R^3 = R^2.",
        Mode::Falsify,
        (5, 8),
        not_perm3_sample,
        Some(not_perm3_exhaust),
        not_perm_eval,
    ),
    thm(
        "mixed-3-subperm-fails-in-set",
        "For every preorder R and reflexive S, (S,R)_3 ⊆ (R,S)_3.",
        Mode::Falsify,
        (4, 6),
        mixed3_sample,
        Some(mixed3_exhaust),
        mixed3_eval,
    ),
    thm(
        "partition-lattice-nonmodular",
        "Equivalences on a set satisfy the modular law.",
        Mode::Falsify,
        (4, 5),
        partition_sample,
        Some(partition_exhaust),
        partition_eval,
    ),
    thm(
        "stat-even-converse",
        "Search for reflexive R and a preorder S where conditions 4 and 5 hold at index 2m but 1 to 3 fail.",
        Mode::Explore,
        (6, 8),
        stat_even_converse_sample,
        Some(even_exhaust),
        even_converse_eval,
    ),
];

/// Every statement the harness can check, in a fixed order.
pub fn catalog() -> &'static [Theorem] {
    &CATALOG
}
