//! Finite algebras and their congruences.

mod corpus;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

pub use corpus::{corpus, named};

use crate::chains::{chain_trace, default_cutoff, sigma_unchecked};
use crate::enumerate::enumerate_bounded;
use crate::error::{Error, Result};
use crate::relation::{check_carrier, same_carrier, Kind, OrderKind, Relation};
use crate::text::{content_lines, header, parse_usize};

/// Largest table an operation may have.
const TABLE_LIMIT: usize = 1 << 22;

/// Default carrier bound for materializing congruence lattices.
pub const DEFAULT_LATTICE_BOUND: usize = 6;

/// A finitary operation given by its full table. Tuples are laid out in
/// row-major order: the first argument is the most significant digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Operation {
    pub name: String,
    pub arity: usize,
    pub table: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    size: usize,
    ops: Vec<Operation>,
}

fn table_len(n: usize, arity: usize) -> Option<usize> {
    let mut len: usize = 1;
    for _ in 0..arity {
        len = len.checked_mul(n)?;
    }
    Some(len)
}

impl FiniteAlgebra {
    pub fn new(n: usize, ops: Vec<Operation>) -> Result<Self> {
        check_carrier(n)?;
        for op in &ops {
            let len = table_len(n, op.arity).filter(|&l| l <= TABLE_LIMIT).ok_or(Error::Capacity {
                what: "operation table",
                requested: op.arity,
                limit: TABLE_LIMIT,
            })?;
            if op.table.len() != len {
                return Err(Error::MalformedTable(format!(
                    "`{}` has {} entries, expected {len}",
                    op.name,
                    op.table.len()
                )));
            }
            if let Some(v) = op.table.iter().find(|&&v| v >= n) {
                return Err(Error::MalformedTable(format!("`{}` has entry {v} outside the carrier", op.name)));
            }
        }
        Ok(FiniteAlgebra { size: n, ops })
    }

    /// A set with no operations.
    pub fn bare(n: usize) -> Self {
        FiniteAlgebra { size: n, ops: Vec::new() }
    }

    pub fn binary(n: usize, name: &str, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..n * n).map(|i| f(i / n, i % n)).collect();
        FiniteAlgebra::new(
            n,
            vec![Operation {
                name: name.to_string(),
                arity: 2,
                table,
            }],
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn operations(&self) -> &[Operation] {
        &self.ops
    }

    fn check_relation(&self, r: &Relation) -> Result<()> {
        if r.size() == self.size {
            Ok(())
        } else {
            Err(Error::CarrierMismatch(self.size, r.size()))
        }
    }

    /// Images `(p(x⃗), p(y⃗))` over all componentwise related tuples, passed to
    /// `visit` until it returns `false`.
    fn for_each_image(&self, r: &Relation, mut visit: impl FnMut(usize, usize) -> bool) {
        let pairs: Vec<(usize, usize)> = r.pairs().collect();
        for op in &self.ops {
            if op.arity == 0 {
                if !visit(op.table[0], op.table[0]) {
                    return;
                }
                continue;
            }
            if pairs.is_empty() {
                continue;
            }
            let k = op.arity;
            let mut choice = vec![0usize; k];
            'tuples: loop {
                let (mut ix, mut iy) = (0, 0);
                for &c in &choice {
                    ix = ix * self.size + pairs[c].0;
                    iy = iy * self.size + pairs[c].1;
                }
                if !visit(op.table[ix], op.table[iy]) {
                    return;
                }
                let mut pos = k;
                loop {
                    if pos == 0 {
                        break 'tuples;
                    }
                    pos -= 1;
                    choice[pos] += 1;
                    if choice[pos] < pairs.len() {
                        break;
                    }
                    choice[pos] = 0;
                }
            }
        }
    }

    /// Whether `r` is preserved by every operation.
    pub fn is_compatible(&self, r: &Relation) -> bool {
        if r.size() != self.size {
            return false;
        }
        let mut ok = true;
        self.for_each_image(r, |a, b| {
            ok = r.contains(a, b);
            ok
        });
        ok
    }

    /// `r` together with all images of related tuples.
    fn one_step(&self, r: &Relation) -> Relation {
        let mut out = r.clone();
        self.for_each_image(r, |a, b| {
            out.insert(a, b);
            true
        });
        out
    }

    /// The least compatible reflexive symmetric relation containing `t`.
    pub fn tolerance_generated(&self, t: &Relation) -> Result<Relation> {
        self.check_relation(t)?;
        let mut cur = t.with_diagonal().union(&t.dual());
        loop {
            let next = self.one_step(&cur);
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alg {}", self.size)?;
        for op in &self.ops {
            writeln!(f, "op {} {}", op.name, op.arity)?;
            let row = if op.arity == 0 { 1 } else { self.size.max(1) };
            for chunk in op.table.chunks(row) {
                let vals: Vec<String> = chunk.iter().map(|v| v.to_string()).collect();
                writeln!(f, "{}", vals.join(" "))?;
            }
        }
        Ok(())
    }
}

pub fn parse_algebra(src: &str) -> Result<FiniteAlgebra> {
    let mut lines = content_lines(src).peekable();
    let (_, h) = header(&mut lines, "alg", 1)?;
    let n = h[0];
    check_carrier(n)?;
    let mut ops = Vec::new();
    while let Some((no, l)) = lines.next() {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 || toks[0] != "op" {
            return Err(Error::parse(no, "expected `op <name> <arity>`"));
        }
        let arity = parse_usize(no, toks[2])?;
        let len = table_len(n, arity)
            .filter(|&l| l <= TABLE_LIMIT)
            .ok_or_else(|| Error::parse(no, "operation table too large"))?;
        let mut table = Vec::with_capacity(len);
        while table.len() < len {
            match lines.peek() {
                Some((_, l)) if !l.starts_with("op") => {
                    let (vno, l) = lines.next().unwrap();
                    for t in l.split_whitespace() {
                        table.push(parse_usize(vno, t)?);
                    }
                }
                _ => break,
            }
        }
        if table.len() != len {
            return Err(Error::parse(no, format!("`{}` needs {len} entries, got {}", toks[1], table.len())));
        }
        ops.push(Operation {
            name: toks[1].to_string(),
            arity,
            table,
        });
    }
    FiniteAlgebra::new(n, ops)
}

/// An equivalence relation known to be compatible with an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    relation: Relation,
}

impl Congruence {
    /// Validate `r` as a congruence of `a`.
    pub fn new(a: &FiniteAlgebra, r: Relation) -> Result<Self> {
        a.check_relation(&r)?;
        OrderKind::Equivalence.require("relation", &r)?;
        if !a.is_compatible(&r) {
            return Err(Error::hypothesis("relation", "compatible with the operations"));
        }
        Ok(Congruence { relation: r })
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn into_relation(self) -> Relation {
        self.relation
    }
}

pub fn is_compatible(a: &FiniteAlgebra, r: &Relation) -> bool {
    a.is_compatible(r)
}

/// The least congruence containing `t`: alternate equivalence closure and
/// one step of operation closure until nothing changes.
pub fn congruence_generated(a: &FiniteAlgebra, t: &Relation) -> Result<Congruence> {
    a.check_relation(t)?;
    let mut cur = crate::chains::closure(OrderKind::Equivalence, t);
    loop {
        let next = crate::chains::closure(OrderKind::Equivalence, &a.one_step(&cur));
        if next == cur {
            return Ok(Congruence { relation: cur });
        }
        cur = next;
    }
}

/// `R ∨ S` as `Σ((R, S))`, re-certified compatible.
pub fn congruence_join(a: &FiniteAlgebra, r: &Congruence, s: &Congruence) -> Result<Congruence> {
    same_carrier(&r.relation, &s.relation)?;
    Congruence::new(a, sigma_unchecked(&r.relation, &s.relation))
}

/// All congruences in ascending order with meet and join tables indexed
/// into that list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceLattice {
    pub elements: Vec<Relation>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

impl CongruenceLattice {
    pub fn index_of(&self, r: &Relation) -> Option<usize> {
        self.elements.binary_search(r).ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn leq(&self, i: usize, j: usize) -> bool {
        self.meet[i][j] == i
    }
}

pub fn congruence_lattice(a: &FiniteAlgebra) -> Result<CongruenceLattice> {
    let all = enumerate_bounded(Kind::Equivalence, a.size, DEFAULT_LATTICE_BOUND)?;
    let elements: Vec<Relation> = all.into_par_iter().filter(|r| a.is_compatible(r)).collect();
    let find = |r: &Relation| {
        elements
            .binary_search(r)
            .expect("meets and joins of congruences are congruences")
    };
    let rows: Vec<(Vec<usize>, Vec<usize>)> = elements
        .par_iter()
        .map(|x| {
            elements
                .iter()
                .map(|y| (find(&x.intersect(y)), find(&sigma_unchecked(x, y))))
                .unzip()
        })
        .collect();
    let (meet, join) = rows.into_iter().unzip();
    Ok(CongruenceLattice { elements, meet, join })
}

/// A violation `(R ∨ S) ∧ T ≠ R ∨ (S ∧ T)` with `R ⊆ T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularityWitness {
    pub r: Relation,
    pub s: Relation,
    pub t: Relation,
    pub left: Relation,
    pub right: Relation,
}

/// Whether the modular law holds for `(R, S, T)` with `R ⊆ T`.
pub fn modular_triple(lat: &CongruenceLattice, r: usize, s: usize, t: usize) -> bool {
    lat.meet[lat.join[r][s]][t] == lat.join[r][lat.meet[s][t]]
}

/// First violation of the modular law, scanning `T`, then `R ⊆ T`, then `S`
/// in lattice order; `None` when the lattice is modular.
pub fn modularity_check(a: &FiniteAlgebra) -> Result<Option<ModularityWitness>> {
    let lat = congruence_lattice(a)?;
    let n = lat.len();
    for t in 0..n {
        for r in (0..n).filter(|&r| lat.leq(r, t)) {
            for s in 0..n {
                if !modular_triple(&lat, r, s, t) {
                    return Ok(Some(ModularityWitness {
                        r: lat.elements[r].clone(),
                        s: lat.elements[s].clone(),
                        t: lat.elements[t].clone(),
                        left: lat.elements[lat.meet[lat.join[r][s]][t]].clone(),
                        right: lat.elements[lat.join[r][lat.meet[s][t]]].clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Check the shifting property for one admissible triple. Returns the least
/// quadruple `(x, x', t, t')` with `x S t`, `x' S t'`, `x R x'`, `t T t'`
/// but not `x T x'`.
pub fn shifting_principle_check(a: &FiniteAlgebra, t: &Relation, s: &Relation, r: &Relation) -> Result<Option<[usize; 4]>> {
    for x in [t, s, r] {
        a.check_relation(x)?;
    }
    let ct = Congruence::new(a, t.clone()).map_err(|_| Error::hypothesis("T", "a congruence"))?;
    Congruence::new(a, r.clone()).map_err(|_| Error::hypothesis("R", "a congruence"))?;
    if !t.is_subset(r) {
        return Err(Error::hypothesis("T", "contained in R"));
    }
    if !(s.is_reflexive() && s.is_symmetric() && a.is_compatible(s)) {
        return Err(Error::hypothesis("S", "a compatible reflexive symmetric relation"));
    }
    if !s.intersect(r).is_subset(t) {
        return Err(Error::hypothesis("S ∩ R", "contained in T"));
    }
    Ok(shifting_witness(ct.relation(), s, r))
}

fn shifting_witness(t: &Relation, s: &Relation, r: &Relation) -> Option<[usize; 4]> {
    for (x, x2) in r.pairs() {
        if t.contains(x, x2) {
            continue;
        }
        for y in s.successors(x) {
            for y2 in t.successors(y) {
                if s.contains(x2, y2) {
                    return Some([x, x2, y, y2]);
                }
            }
        }
    }
    None
}

/// Every compatible reflexive symmetric relation, ascending.
pub fn tolerances(a: &FiniteAlgebra) -> Result<Vec<Relation>> {
    let n = a.size;
    if n > DEFAULT_LATTICE_BOUND {
        return Err(Error::Capacity {
            what: "tolerance carrier",
            requested: n,
            limit: DEFAULT_LATTICE_BOUND,
        });
    }
    let mut seen = BTreeSet::new();
    let base = a.tolerance_generated(&Relation::delta(n))?;
    let mut stack = vec![base.clone()];
    seen.insert(base);
    while let Some(u) = stack.pop() {
        for i in 0..n {
            for j in i + 1..n {
                if u.contains(i, j) {
                    continue;
                }
                let mut v = u.clone();
                v.insert(i, j);
                let v = a.tolerance_generated(&v)?;
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Result of checking the shifting property on every admissible triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftingScan {
    pub triples: usize,
    /// The first failing triple `(T, S, R)` and its quadruple.
    pub witness: Option<(Relation, Relation, Relation, [usize; 4])>,
}

/// Admissible triples counted for one `(T, R)` pair, and the first failure.
type PairScan = (usize, Option<(usize, [usize; 4])>);

pub fn shifting_scan(a: &FiniteAlgebra) -> Result<ShiftingScan> {
    let lat = congruence_lattice(a)?;
    let tols = tolerances(a)?;
    let n = lat.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|t| (0..n).map(move |r| (t, r)))
        .filter(|&(t, r)| lat.leq(t, r))
        .collect();
    let per_pair: Vec<PairScan> = pairs
        .par_iter()
        .map(|&(ti, ri)| {
            let (t, r) = (&lat.elements[ti], &lat.elements[ri]);
            let mut count = 0;
            for (si, s) in tols.iter().enumerate() {
                if !s.intersect(r).is_subset(t) {
                    continue;
                }
                count += 1;
                if let Some(q) = shifting_witness(t, s, r) {
                    return (count, Some((si, q)));
                }
            }
            (count, None)
        })
        .collect();
    let mut triples = 0;
    for (&(ti, ri), (count, found)) in pairs.iter().zip(per_pair) {
        triples += count;
        if let Some((si, q)) = found {
            return Ok(ShiftingScan {
                triples,
                witness: Some((lat.elements[ti].clone(), tols[si].clone(), lat.elements[ri].clone(), q)),
            });
        }
    }
    Ok(ShiftingScan { triples, witness: None })
}

/// `(T ∨ S) ∩ R` against the union of `(T, S)ᵢ ∩ R` over the chain.
pub fn day_formula_check(a: &FiniteAlgebra, t: &Congruence, s: &Congruence, r: &Congruence) -> Result<bool> {
    let (t, s, r) = (t.relation(), s.relation(), r.relation());
    a.check_relation(t)?;
    same_carrier(t, s)?;
    same_carrier(t, r)?;
    let left = congruence_join(a, &Congruence { relation: t.clone() }, &Congruence { relation: s.clone() })?
        .into_relation()
        .intersect(r);
    let trace = chain_trace(t, s, default_cutoff(t.size()))?;
    let mut right = Relation::empty(t.size());
    for term in &trace.terms {
        right = right.union(&term.intersect(r));
    }
    Ok(left == right)
}

/// An algebra with random tables for the given arities.
pub fn random_algebra(n: usize, arities: &[usize], rng: &mut impl rand::Rng) -> Result<FiniteAlgebra> {
    if n == 0 && arities.contains(&0) {
        return Err(Error::InvalidParameter("nullary operation on an empty carrier".into()));
    }
    let ops = arities
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let len = table_len(n, k).filter(|&l| l <= TABLE_LIMIT).ok_or(Error::Capacity {
                what: "operation table",
                requested: k,
                limit: TABLE_LIMIT,
            })?;
            Ok(Operation {
                name: format!("f{i}"),
                arity: k,
                table: (0..len).map(|_| rng.random_range(0..n)).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteAlgebra::new(n, ops)
}
