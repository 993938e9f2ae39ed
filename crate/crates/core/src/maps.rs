//! Maps between finite carriers and the relations they induce.

use crate::error::{Error, Result};
use crate::relation::{check_carrier, Relation};

/// A function `{0..n} -> {0..m}` stored as its value list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMap {
    codomain: usize,
    values: Vec<usize>,
}

impl FiniteMap {
    pub fn new(codomain: usize, values: Vec<usize>) -> Result<Self> {
        check_carrier(codomain)?;
        check_carrier(values.len())?;
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v >= codomain) {
            return Err(Error::MapValueOutOfRange {
                index,
                value,
                codomain,
            });
        }
        Ok(FiniteMap { codomain, values })
    }

    pub fn identity(n: usize) -> Self {
        FiniteMap {
            codomain: n,
            values: (0..n).collect(),
        }
    }

    pub fn domain(&self) -> usize {
        self.values.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain];
        for &v in &self.values {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub(crate) fn require_surjective(&self) -> Result<()> {
        if self.is_surjective() {
            Ok(())
        } else {
            Err(Error::hypothesis("map", "surjective"))
        }
    }

    /// The section picking the least preimage of each codomain element, or
    /// `None` when the map is not surjective.
    pub fn section(&self) -> Option<FiniteMap> {
        let mut least = vec![usize::MAX; self.codomain];
        for (x, &y) in self.values.iter().enumerate().rev() {
            least[y] = x;
        }
        if least.contains(&usize::MAX) {
            return None;
        }
        Some(FiniteMap {
            codomain: self.domain(),
            values: least,
        })
    }

    /// The kernel equivalence `R[f]`.
    pub fn kernel_pair(&self) -> Relation {
        Relation::from_fn(self.domain(), |a, b| self.values[a] == self.values[b])
    }

    /// `f(R)`, unchecked: `r` must live on the domain.
    pub(crate) fn image_of(&self, r: &Relation) -> Relation {
        let mut out = Relation::empty(self.codomain);
        for (a, b) in r.pairs() {
            out.insert(self.values[a], self.values[b]);
        }
        out
    }

    /// `f⁻¹(S)`, unchecked: `s` must live on the codomain.
    pub(crate) fn preimage_of(&self, s: &Relation) -> Relation {
        Relation::from_fn(self.domain(), |a, b| s.contains(self.values[a], self.values[b]))
    }

    pub(crate) fn check_domain(&self, r: &Relation) -> Result<()> {
        if r.size() == self.domain() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch(self.domain(), r.size()))
        }
    }

    pub(crate) fn check_codomain(&self, s: &Relation) -> Result<()> {
        if s.size() == self.codomain {
            Ok(())
        } else {
            Err(Error::CarrierMismatch(self.codomain, s.size()))
        }
    }
}

pub fn kernel_pair(f: &FiniteMap) -> Relation {
    f.kernel_pair()
}

/// The direct image `f(R) = {(f x, f x') : x R x'}`.
pub fn direct_image(f: &FiniteMap, r: &Relation) -> Result<Relation> {
    f.check_domain(r)?;
    Ok(f.image_of(r))
}

/// The inverse image `f⁻¹(S) = {(x, x') : f x S f x'}`.
pub fn inverse_image(f: &FiniteMap, s: &Relation) -> Result<Relation> {
    f.check_codomain(s)?;
    Ok(f.preimage_of(s))
}

/// The double relation `R □ S`: quadruples `(u, v, u', v')` with `u R u'`,
/// `v R v'`, `u S v` and `u' S v'`, sorted.
pub fn square(r: &Relation, s: &Relation) -> Result<Vec<[usize; 4]>> {
    crate::relation::same_carrier(r, s)?;
    let mut out = Vec::new();
    for (u, v) in s.pairs() {
        for u2 in r.successors(u) {
            for v2 in r.successors(v) {
                if s.contains(u2, v2) {
                    out.push([u, v, u2, v2]);
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// A relation viewed as a carrier of its own: its pairs, listed
/// lexicographically, with the two projections onto the base carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCarrier {
    pub pairs: Vec<(usize, usize)>,
    pub d0: FiniteMap,
    pub d1: FiniteMap,
}

pub fn pair_carrier(r: &Relation) -> PairCarrier {
    let pairs: Vec<(usize, usize)> = r.pairs().collect();
    let n = r.size();
    PairCarrier {
        d0: FiniteMap {
            codomain: n,
            values: pairs.iter().map(|p| p.0).collect(),
        },
        d1: FiniteMap {
            codomain: n,
            values: pairs.iter().map(|p| p.1).collect(),
        },
        pairs,
    }
}
