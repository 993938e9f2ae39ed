//! Binary relations on a finite carriers `{0, .., n-1}`.
//!
//! A [`Relation`] is a dense `n × n` bit matrix with each row packed into
//! 64-bit words. Composition is the boolean matrix product computed row by
//! row: row `x` of `S ∘ R` is the OR of the rows `y` of `S` for every `y`
//! set in row `x` of `R`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{self, AtomicUsize};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Default upper bound on carrier sizes accepted at input boundaries.
pub const DEFAULT_MAX_CARRIER: usize = 4096;

static MAX_CARRIER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_CARRIER);

/// Current carrier-size limit enforced by fallible constructors and parsers.
pub fn max_carrier() -> usize {
    MAX_CARRIER.load(atomic::Ordering::Relaxed)
}

/// Change the carrier-size limit for the whole process.
pub fn set_max_carrier(limit: usize) {
    MAX_CARRIER.store(limit, atomic::Ordering::Relaxed);
}

pub(crate) fn check_carrier(n: usize) -> Result<()> {
    let limit = max_carrier();
    if n > limit {
        return Err(Error::Capacity {
            what: "carrier size",
            requested: n,
            limit,
        });
    }
    Ok(())
}

/// A binary relation on a finite carrier. Equality is entrywise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    size: usize,
    stride: usize,
    bits: Vec<u64>,
}

/// The two distinguished relations every carrier has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constant {
    /// The identity (discrete) relation Δ.
    Delta,
    /// The full (undiscrete) relation ∇.
    Nabla,
}

impl Relation {
    /// The empty relation on `n` elements.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(WORD_BITS);
        Relation {
            size: n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    /// The identity relation Δ.
    pub fn delta(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    /// The full relation ∇.
    pub fn nabla(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            let row = r.row_mut(i);
            for (w, word) in row.iter_mut().enumerate() {
                let hi = (n - w * WORD_BITS).min(WORD_BITS);
                *word = if hi == WORD_BITS { !0 } else { (1u64 << hi) - 1 };
            }
        }
        r
    }

    pub fn constant(kind: Constant, n: usize) -> Self {
        match kind {
            Constant::Delta => Self::delta(n),
            Constant::Nabla => Self::nabla(n),
        }
    }

    /// Build a relation from a list of pairs. Duplicates collapse.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_carrier(n)?;
        let mut r = Self::empty(n);
        for (i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange(i, j, n));
            }
            r.insert(i, j);
        }
        Ok(r)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.size && j < self.size && self.bits[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize) {
        debug_assert!(i < self.size && j < self.size);
        self.bits[i * self.stride + j / WORD_BITS] |= 1 << (j % WORD_BITS);
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.bits[i * self.stride..(i + 1) * self.stride]
    }

    /// Elements `j` with `i` related to `j`, ascending.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * WORD_BITS + b)
            })
        })
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |i| self.successors(i).map(move |j| (i, j)))
    }

    /// Number of related pairs.
    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn assert_same_carrier(&self, other: &Relation) {
        assert_eq!(
            self.size, other.size,
            "relations live on carriers of different sizes"
        );
    }

    /// `self ∘ first`: relate `x` to `z` when some `y` has `x first y` and
    /// `y self z`. So `first` is applied first.
    ///
    /// # Panics
    ///
    /// When the carriers differ. Use [`compose`] for a checked version.
    pub fn after(&self, first: &Relation) -> Relation {
        self.assert_same_carrier(first);
        let mut out = Relation::empty(self.size);
        for x in 0..self.size {
            let dst = &mut out.bits[x * self.stride..(x + 1) * self.stride];
            for y in first.successors(x) {
                for (d, s) in dst.iter_mut().zip(self.row(y)) {
                    *d |= s;
                }
            }
        }
        out
    }

    /// The dual (converse) relation.
    pub fn dual(&self) -> Relation {
        let mut out = Relation::empty(self.size);
        for (i, j) in self.pairs() {
            out.insert(j, i);
        }
        out
    }

    fn zip_with(&self, other: &Relation, f: impl Fn(u64, u64) -> u64) -> Relation {
        self.assert_same_carrier(other);
        Relation {
            size: self.size,
            stride: self.stride,
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn union(&self, other: &Relation) -> Relation {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &Relation) -> Relation {
        self.zip_with(other, |a, b| a & b)
    }

    /// Inclusion `self ⊆ other`.
    pub fn is_subset(&self, other: &Relation) -> bool {
        self.assert_same_carrier(other);
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| a & !b == 0)
    }

    /// `self ∪ Δ`.
    pub fn with_diagonal(&self) -> Relation {
        self.union(&Relation::delta(self.size))
    }

    /// The `k`-fold composite, with `R⁰ = Δ`.
    pub fn power(&self, k: usize) -> Relation {
        let mut acc = Relation::delta(self.size);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.after(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.after(&base);
            }
        }
        acc
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|i| self.contains(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.dual().is_subset(self)
    }

    pub fn is_transitive(&self) -> bool {
        self.after(self).is_subset(self)
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_preorder() && self.is_symmetric()
    }

    pub fn classify(&self) -> Properties {
        let reflexive = self.is_reflexive();
        let symmetric = self.is_symmetric();
        let transitive = self.is_transitive();
        Properties {
            reflexive,
            symmetric,
            transitive,
            preorder: reflexive && transitive,
            equivalence: reflexive && transitive && symmetric,
        }
    }

    /// Classes of an equivalence relation, each sorted, ordered by least
    /// element. Meaningless for relations that are not equivalences.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for i in 0..self.size {
            if seen[i] {
                continue;
            }
            let class: Vec<usize> = self.successors(i).collect();
            for &j in &class {
                seen[j] = true;
            }
            out.push(class);
        }
        out
    }

    /// The equivalence relation whose classes are the given blocks.
    /// Elements missing from every block form singletons.
    pub fn from_partition(n: usize, blocks: &[&[usize]]) -> Result<Relation> {
        check_carrier(n)?;
        let mut r = Relation::delta(n);
        for block in blocks {
            for &a in *block {
                for &b in *block {
                    if a >= n || b >= n {
                        return Err(Error::IndexOutOfRange(a, b, n));
                    }
                    r.insert(a, b);
                }
            }
        }
        Ok(r)
    }
}

/// Lexicographic order on the row-major bit string (carrier size first).
impl Ord for Relation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| {
            for (&a, &b) in self.bits.iter().zip(&other.bits) {
                let diff = a ^ b;
                if diff != 0 {
                    let lowest = diff & diff.wrapping_neg();
                    return if a & lowest != 0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Relation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({})", self.size)?;
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// The flags returned by [`Relation::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Properties {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub preorder: bool,
    pub equivalence: bool,
}

impl fmt::Display for Properties {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "reflexive: {}", self.reflexive)?;
        writeln!(f, "symmetric: {}", self.symmetric)?;
        writeln!(f, "transitive: {}", self.transitive)?;
        writeln!(f, "preorder: {}", self.preorder)?;
        write!(f, "equivalence: {}", self.equivalence)
    }
}

/// Classes of relations used for validation, enumeration and generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Any relation.
    Relation,
    Reflexive,
    /// Reflexive and symmetric.
    ReflexiveSymmetric,
    Preorder,
    Equivalence,
}

impl Kind {
    pub fn admits(self, r: &Relation) -> bool {
        match self {
            Kind::Relation => true,
            Kind::Reflexive => r.is_reflexive(),
            Kind::ReflexiveSymmetric => r.is_reflexive() && r.is_symmetric(),
            Kind::Preorder => r.is_preorder(),
            Kind::Equivalence => r.is_equivalence(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Relation => "relation",
            Kind::Reflexive => "reflexive",
            Kind::ReflexiveSymmetric => "reflexive-symmetric",
            Kind::Preorder => "preorder",
            Kind::Equivalence => "equivalence",
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "relation" | "any" => Kind::Relation,
            "reflexive" => Kind::Reflexive,
            "reflexive-symmetric" | "rsym" => Kind::ReflexiveSymmetric,
            "preorder" => Kind::Preorder,
            "equivalence" => Kind::Equivalence,
            _ => return Err(Error::InvalidParameter(format!("unknown relation kind `{s}`"))),
        })
    }
}

/// The two order-like kinds that closures, joins and cocartesian images are
/// taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Preorder,
    Equivalence,
}

impl OrderKind {
    pub fn admits(self, r: &Relation) -> bool {
        self.as_kind().admits(r)
    }

    pub fn as_kind(self) -> Kind {
        match self {
            OrderKind::Preorder => Kind::Preorder,
            OrderKind::Equivalence => Kind::Equivalence,
        }
    }

    pub fn name(self) -> &'static str {
        self.as_kind().name()
    }

    pub(crate) fn require(self, role: &'static str, r: &Relation) -> Result<()> {
        if self.admits(r) {
            Ok(())
        } else {
            Err(Error::hypothesis(
                role,
                match self {
                    OrderKind::Preorder => "a preorder",
                    OrderKind::Equivalence => "an equivalence",
                },
            ))
        }
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "preorder" => Ok(OrderKind::Preorder),
            "equivalence" => Ok(OrderKind::Equivalence),
            _ => Err(Error::InvalidParameter(format!(
                "kind must be `preorder` or `equivalence`, got `{s}`"
            ))),
        }
    }
}

pub(crate) fn same_carrier(a: &Relation, b: &Relation) -> Result<()> {
    if a.size() == b.size() {
        Ok(())
    } else {
        Err(Error::CarrierMismatch(a.size(), b.size()))
    }
}

pub(crate) fn require_reflexive(role: &'static str, r: &Relation) -> Result<()> {
    if r.is_reflexive() {
        Ok(())
    } else {
        Err(Error::hypothesis(role, "reflexive"))
    }
}

/// Checked composition `s ∘ r` (`r` first).
pub fn compose(s: &Relation, r: &Relation) -> Result<Relation> {
    same_carrier(s, r)?;
    Ok(s.after(r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Union,
    Intersect,
    Leq,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeValue {
    Relation(Relation),
    Bool(bool),
}

/// Checked lattice operations in the subobject lattice of `X × X`.
pub fn lattice(op: LatticeOp, a: &Relation, b: &Relation) -> Result<LatticeValue> {
    same_carrier(a, b)?;
    Ok(match op {
        LatticeOp::Union => LatticeValue::Relation(a.union(b)),
        LatticeOp::Intersect => LatticeValue::Relation(a.intersect(b)),
        LatticeOp::Leq => LatticeValue::Bool(a.is_subset(b)),
        LatticeOp::Equal => LatticeValue::Bool(a == b),
    })
}
