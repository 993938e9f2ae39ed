//! Alternating chains `((R, S))` and their suprema.
//!
//! `(R, S)₀ = Δ` and `(R, S)ₖ₊₁ = (R, S)ₖ ∘ L` where `L` is `R` for odd
//! `k + 1` and `S` for even `k + 1`. So `(R, S)₂ = R ∘ S` (apply `S`
//! first) and `(R, S)₃ = R ∘ S ∘ R`. Read as paths: `x (R,S)ₙ z` when there
//! is a walk `x = y₀, …, yₙ = z` whose `i`-th step (counting from 1) lies in
//! `R` if `i ≡ n (mod 2)` and in `S` otherwise.
//!
//! Every other module builds chain terms through this one.

use std::fmt;

use crate::error::Result;
use crate::relation::{require_reflexive, same_carrier, OrderKind, Relation};

/// Terms `0..=upto` of the alternating chain, for any pair of relations.
pub fn words(r: &Relation, s: &Relation, upto: usize) -> Vec<Relation> {
    let mut terms = Vec::with_capacity(upto + 1);
    let mut t = Relation::delta(r.size());
    terms.push(t.clone());
    for k in 1..=upto {
        t = t.after(if k % 2 == 1 { r } else { s });
        terms.push(t.clone());
    }
    terms
}

/// `(R, S)ₙ` with no hypotheses on `R` and `S` beyond a shared carrier.
///
/// # Panics
///
/// When the carriers differ.
pub fn word(r: &Relation, s: &Relation, n: usize) -> Relation {
    let mut t = Relation::delta(r.size());
    for k in 1..=n {
        t = t.after(if k % 2 == 1 { r } else { s });
    }
    t
}

fn validate(r: &Relation, s: &Relation) -> Result<()> {
    same_carrier(r, s)?;
    require_reflexive("R", r)?;
    require_reflexive("S", s)
}

/// `(R, S)ₙ` for reflexive `R` and `S`.
pub fn chain_term(r: &Relation, s: &Relation, n: usize) -> Result<Relation> {
    validate(r, s)?;
    Ok(word(r, s, n))
}

/// Default cutoff for a carrier of `n` elements.
///
/// Past index 2 an unchanged step can be followed by a growing one, but
/// never two unchanged steps in a row unless the chain has stopped, so
/// the chain gains a pair at least every other step.
pub fn default_cutoff(n: usize) -> usize {
    2 * n * n + 3
}

/// The recorded prefix of `((R, S))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTrace {
    pub left: Relation,
    pub right: Relation,
    pub terms: Vec<Relation>,
    /// Least `n` with `terms[n] = terms[n + 2]`; for these increasing chains
    /// that is exactly the least index from which the chain is constant.
    /// `None` when the cutoff came first.
    pub stationary_index: Option<usize>,
}

impl ChainTrace {
    /// The stabilized term, when the chain stabilized.
    pub fn limit(&self) -> Option<&Relation> {
        self.stationary_index.map(|n| &self.terms[n])
    }

    pub fn last(&self) -> &Relation {
        self.terms.last().expect("a trace always records (R,S)_0")
    }
}

impl fmt::Display for ChainTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            writeln!(f, "{k}: {}", t.count())?;
        }
        match self.stationary_index {
            Some(n) => writeln!(f, "stationary: {n}"),
            None => writeln!(f, "stationary: none (truncated at {})", self.terms.len() - 1),
        }
    }
}

/// Compute terms until the chain is seen to be stationary or the index
/// reaches `cutoff`.
pub fn chain_trace(r: &Relation, s: &Relation, cutoff: usize) -> Result<ChainTrace> {
    validate(r, s)?;
    let mut terms = vec![Relation::delta(r.size())];
    let mut stationary_index = None;
    let mut k = 0;
    while k < cutoff {
        k += 1;
        let next = terms[k - 1].after(if k % 2 == 1 { r } else { s });
        terms.push(next);
        if k >= 2 && terms[k] == terms[k - 2] {
            stationary_index = Some(k - 2);
            break;
        }
    }
    Ok(ChainTrace {
        left: r.clone(),
        right: s.clone(),
        terms,
        stationary_index,
    })
}

pub(crate) fn sigma_unchecked(r: &Relation, s: &Relation) -> Relation {
    let mut prev2 = Relation::delta(r.size());
    let mut prev1 = r.clone();
    let mut k = 1;
    loop {
        k += 1;
        let next = prev1.after(if k % 2 == 1 { r } else { s });
        if next == prev2 {
            return next;
        }
        prev2 = std::mem::replace(&mut prev1, next);
    }
}

/// `Σ((R, S))`: the term at which the chain stabilizes.
pub fn supremum_sigma(r: &Relation, s: &Relation) -> Result<Relation> {
    validate(r, s)?;
    Ok(sigma_unchecked(r, s))
}

/// Least preorder (`Σ((T∪Δ, T∪Δ))`) or equivalence (`Σ((T∪Δ, (T∪Δ)ᵒᵖ))`)
/// containing `T`.
pub fn closure(kind: OrderKind, t: &Relation) -> Relation {
    let t = t.with_diagonal();
    match kind {
        OrderKind::Preorder => sigma_unchecked(&t, &t),
        OrderKind::Equivalence => sigma_unchecked(&t, &t.dual()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn refl(n: usize, pairs: &[(usize, usize)]) -> Relation {
        Relation::from_pairs(n, pairs.iter().copied()).unwrap().with_diagonal()
    }

    #[test]
    fn chain_terms_follow_orientation() {
        let r1 = refl(3, &[(0, 1)]);
        let s1 = refl(3, &[(1, 2)]);
        assert_eq!(chain_term(&r1, &s1, 0).unwrap(), Relation::delta(3));
        assert_eq!(chain_term(&r1, &s1, 1).unwrap(), r1);
        assert_eq!(chain_term(&r1, &s1, 2).unwrap(), refl(3, &[(0, 1), (1, 2)]));
        // 0 -R-> 1 -S-> 2 -R-> 2 is a witness path for (R,S)_3
        assert_eq!(chain_term(&r1, &s1, 3).unwrap(), refl(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(chain_term(&s1, &r1, 2).unwrap().contains(0, 2));
    }

    #[test]
    fn unit_right_collapses_to_powers() {
        let r = refl(4, &[(0, 1), (1, 2), (2, 3)]);
        let d = Relation::delta(4);
        for n in 0..7 {
            assert_eq!(chain_term(&r, &d, n).unwrap(), r.power(n.div_ceil(2)), "n = {n}");
        }
    }

    #[test]
    fn reflexivity_is_checked() {
        let bad = Relation::from_pairs(2, [(0, 1)]).unwrap();
        assert_eq!(
            chain_term(&bad, &Relation::delta(2), 1),
            Err(Error::hypothesis("R", "reflexive"))
        );
        assert_eq!(
            chain_term(&Relation::delta(2), &Relation::delta(3), 1),
            Err(Error::CarrierMismatch(2, 3))
        );
    }

    #[test]
    fn traces() {
        let r1 = refl(3, &[(0, 1)]);
        let s1 = refl(3, &[(1, 2)]);
        let t = chain_trace(&r1, &s1, default_cutoff(3)).unwrap();
        assert_eq!(t.stationary_index, Some(3));
        assert_eq!(t.limit().unwrap().count(), 6);
        let d = Relation::delta(3);
        assert_eq!(chain_trace(&d, &d, 10).unwrap().stationary_index, Some(0));
        let all = Relation::nabla(3);
        let t = chain_trace(&all, &all, 10).unwrap();
        assert!(t.stationary_index.unwrap() <= 1);
        assert_eq!(t.limit().unwrap(), &all);
        let t = chain_trace(&r1, &s1, 2).unwrap();
        assert_eq!(t.stationary_index, None);
        assert_eq!(t.terms.len(), 3);
    }

    #[test]
    fn single_repeat_is_not_stationarity() {
        let d = Relation::delta(3);
        let s = refl(3, &[(0, 1)]);
        let t = chain_trace(&d, &s, 10).unwrap();
        assert_eq!(t.terms[0], t.terms[1]);
        assert_eq!(t.stationary_index, Some(2));
        assert_eq!(t.limit().unwrap(), &s);
    }

    #[test]
    fn trace_report() {
        let d = Relation::delta(2);
        let t = chain_trace(&d, &d, 5).unwrap();
        assert_eq!(t.to_string(), "0: 2\n1: 2\n2: 2\nstationary: 0\n");
    }

    #[test]
    fn closures() {
        let t = Relation::from_pairs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(closure(OrderKind::Preorder, &t), refl(3, &[(0, 1), (1, 2), (0, 2)]));
        let t = Relation::from_pairs(3, [(0, 1)]).unwrap();
        assert_eq!(closure(OrderKind::Equivalence, &t), refl(3, &[(0, 1), (1, 0)]));
        let d = Relation::delta(3);
        assert_eq!(closure(OrderKind::Preorder, &d), d);
        assert_eq!(closure(OrderKind::Equivalence, &d), d);
        assert_eq!(closure(OrderKind::Equivalence, &Relation::empty(0)), Relation::empty(0));
    }

    #[test]
    fn sigma_of_path_pair() {
        let r1 = refl(3, &[(0, 1)]);
        let s1 = refl(3, &[(1, 2)]);
        assert_eq!(supremum_sigma(&r1, &s1).unwrap(), refl(3, &[(0, 1), (1, 2), (0, 2)]));
        assert_eq!(supremum_sigma(&s1, &r1).unwrap(), supremum_sigma(&r1, &s1).unwrap());
    }
}
