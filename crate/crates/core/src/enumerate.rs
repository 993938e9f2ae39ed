//! Exhaustive enumeration of relations of a given kind.

use std::sync::atomic::{self, AtomicUsize};

use crate::error::{Error, Result};
use crate::relation::{Kind, Relation};

/// Default bound on the carrier size accepted by [`enumerate`].
pub const DEFAULT_ENUM_BOUND: usize = 5;

/// Largest number of candidate masks a single enumeration will scan.
const MASK_LIMIT_BITS: usize = 24;

static ENUM_BOUND: AtomicUsize = AtomicUsize::new(DEFAULT_ENUM_BOUND);

pub fn enum_bound() -> usize {
    ENUM_BOUND.load(atomic::Ordering::Relaxed)
}

pub fn set_enum_bound(bound: usize) {
    ENUM_BOUND.store(bound, atomic::Ordering::Relaxed);
}

/// All relations of `kind` on `n` elements, duplicate-free, in ascending
/// [`Relation`] order (lexicographic on the row-major bit string).
///
/// Equivalences are produced from set partitions and are cheap well past
/// the default bound; [`crate::ualg`] uses that to reach six elements.
pub fn enumerate(kind: Kind, n: usize) -> Result<Vec<Relation>> {
    enumerate_bounded(kind, n, enum_bound())
}

pub(crate) fn enumerate_bounded(kind: Kind, n: usize, bound: usize) -> Result<Vec<Relation>> {
    if n > bound {
        return Err(Error::Capacity {
            what: "enumeration carrier",
            requested: n,
            limit: bound,
        });
    }
    if kind == Kind::Equivalence {
        return Ok(equivalences(n));
    }
    let free_bits = match kind {
        Kind::Relation => n * n,
        _ => n * n - n,
    };
    if free_bits > MASK_LIMIT_BITS {
        return Err(Error::Capacity {
            what: "enumeration bits",
            requested: free_bits,
            limit: MASK_LIMIT_BITS,
        });
    }
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| kind == Kind::Relation || i != j)
        .collect();
    let base = if kind == Kind::Relation {
        Relation::empty(n)
    } else {
        Relation::delta(n)
    };
    let len = positions.len();
    let mut out = Vec::new();
    // Mask bit len-1-p stands for position p, so ascending masks give
    // ascending relations.
    for mask in 0u64..(1u64 << len) {
        let mut r = base.clone();
        for (p, &(i, j)) in positions.iter().enumerate() {
            if mask >> (len - 1 - p) & 1 == 1 {
                r.insert(i, j);
            }
        }
        if kind.admits(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Every equivalence relation on `n` elements via restricted growth strings.
fn equivalences(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut label = vec![0usize; n];
    fn rec(pos: usize, max: usize, label: &mut Vec<usize>, out: &mut Vec<Relation>) {
        let n = label.len();
        if pos == n {
            out.push(Relation::from_fn(n, |i, j| label[i] == label[j]));
            return;
        }
        for c in 0..=max + 1 {
            if pos == 0 && c > 0 {
                break;
            }
            label[pos] = c;
            rec(pos + 1, if pos == 0 { 0 } else { max.max(c) }, label, out);
        }
    }
    if n == 0 {
        return vec![Relation::empty(0)];
    }
    rec(0, 0, &mut label, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let pre: Vec<usize> = (0..=4).map(|n| enumerate(Kind::Preorder, n).unwrap().len()).collect();
        assert_eq!(pre, [1, 1, 4, 29, 355]);
        let eq: Vec<usize> = (0..=4).map(|n| enumerate(Kind::Equivalence, n).unwrap().len()).collect();
        assert_eq!(eq, [1, 1, 2, 5, 15]);
        assert_eq!(enumerate(Kind::Reflexive, 2).unwrap().len(), 4);
        assert_eq!(enumerate(Kind::Relation, 2).unwrap().len(), 16);
        assert_eq!(enumerate(Kind::ReflexiveSymmetric, 3).unwrap().len(), 8);
    }

    #[test]
    fn equivalences_on_six() {
        assert_eq!(enumerate_bounded(Kind::Equivalence, 6, 6).unwrap().len(), 203);
    }

    #[test]
    fn sorted_and_distinct() {
        for kind in [Kind::Preorder, Kind::Equivalence, Kind::Reflexive] {
            let all = enumerate(kind, 3).unwrap();
            assert!(all.windows(2).all(|w| w[0] < w[1]), "{kind:?}");
        }
    }

    #[test]
    fn bound_is_capacity_error() {
        assert!(enumerate(Kind::Preorder, 6).unwrap_err().is_capacity());
        assert!(enumerate(Kind::Relation, 5).unwrap_err().is_capacity());
    }

    #[test]
    fn preorders_on_five() {
        assert_eq!(enumerate(Kind::Preorder, 5).unwrap().len(), 6942);
    }
}
