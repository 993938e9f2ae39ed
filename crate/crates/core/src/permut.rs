//! Stationarity conditions and permutability tests on single instances.
//!
//! Nothing here claims anything about all relations; these functions
//! evaluate conditions on the instance at hand and the harness does the
//! quantifying.

use std::fmt;

use crate::chains::{word, words};
use crate::cocart::Mode;
use crate::error::{Error, Result};
use crate::relation::{require_reflexive, same_carrier, OrderKind, Properties, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Conditions at index `2m + 1`; needs `R` a preorder, `S` reflexive.
    Odd,
    /// Conditions at index `2m`; needs `R` reflexive, `S` a preorder.
    Even,
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            _ => Err(Error::InvalidParameter(format!("parity must be `odd` or `even`, got `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatReport {
    pub parity: Parity,
    pub m: usize,
    /// Conditions 1 to 5 in order.
    pub conditions: [(&'static str, bool); 5],
    /// Whether the equivalences (odd) or the two equivalence groups and the
    /// implication between them (even) hold on this instance.
    pub consistent: bool,
    /// False when computed with hypotheses relaxed.
    pub validated: bool,
}

impl StatReport {
    pub fn get(&self, i: usize) -> bool {
        self.conditions[i - 1].1
    }

    /// Conditions 1 to 3 hold while 4 and 5 fail (only possible for the
    /// odd parity when inconsistent) or, for the even parity, 4 and 5 hold
    /// while 1 to 3 fail.
    pub fn second_list_without_first(&self) -> bool {
        self.get(4) && self.get(5) && !self.get(1) && !self.get(2) && !self.get(3)
    }
}

impl fmt::Display for StatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.parity {
            Parity::Odd => "odd",
            Parity::Even => "even",
        };
        writeln!(f, "parity: {p}")?;
        writeln!(f, "m: {}", self.m)?;
        for (i, (name, v)) in self.conditions.iter().enumerate() {
            writeln!(f, "{}) {name}: {v}", i + 1)?;
        }
        writeln!(f, "consistent: {}", self.consistent)?;
        writeln!(f, "validated: {}", self.validated)
    }
}

fn stationary_from(t: &[Relation], n: usize) -> bool {
    t[n] == t[n + 1] && t[n + 1] == t[n + 2]
}

/// Evaluate the five conditions of the odd or even stationarity theorem.
pub fn stationarity_conditions(parity: Parity, r: &Relation, s: &Relation, m: usize, mode: Mode) -> Result<StatReport> {
    same_carrier(r, s)?;
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    match (mode, parity) {
        (Mode::Strict, Parity::Odd) => {
            OrderKind::Preorder.require("R", r)?;
            require_reflexive("S", s)?;
        }
        (Mode::Strict, Parity::Even) => {
            require_reflexive("R", r)?;
            OrderKind::Preorder.require("S", s)?;
        }
        (Mode::Exploratory, _) => {
            require_reflexive("R", r)?;
            require_reflexive("S", s)?;
        }
    }
    let k = match parity {
        Parity::Odd => 2 * m + 1,
        Parity::Even => 2 * m,
    };
    let a = words(r, s, k + 2);
    let b = words(s, r, k + 1);
    let c = [
        ("(R,S)_{k+1} = (R,S)_k", a[k + 1] == a[k]),
        ("stationary from k", stationary_from(&a, k)),
        ("(R,S)_k is a preorder", a[k].is_preorder()),
        ("(S,R)_{k+1} = (R,S)_k", b[k + 1] == a[k]),
        ("(S,R)_k ⊆ (R,S)_k", b[k].is_subset(&a[k])),
    ];
    let consistent = match parity {
        Parity::Odd => c.iter().all(|x| x.1 == c[0].1),
        Parity::Even => c[0].1 == c[1].1 && c[1].1 == c[2].1 && c[3].1 == c[4].1 && (!c[0].1 || c[3].1),
    };
    Ok(StatReport {
        parity,
        m,
        conditions: c,
        consistent,
        validated: mode == Mode::Strict,
    })
}

/// Least `n` in `2..=nmax` with `(R,S)ₙ = (S,R)ₙ`, with the common term.
pub fn pair_permutability_level(r: &Relation, s: &Relation, nmax: usize, mode: Mode) -> Result<Option<(usize, Relation)>> {
    same_carrier(r, s)?;
    match mode {
        Mode::Strict => {
            OrderKind::Equivalence.require("R", r)?;
            OrderKind::Equivalence.require("S", s)?;
        }
        Mode::Exploratory => {
            require_reflexive("R", r)?;
            require_reflexive("S", s)?;
        }
    }
    let a = words(r, s, nmax);
    let b = words(s, r, nmax);
    Ok((2..=nmax).find(|&n| a[n] == b[n]).map(|n| (n, a[n].clone())))
}

/// Instance values of the three uniform conditions for `n`-permutability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZurabReport {
    pub n: usize,
    /// `Rᵒᵖ ⊆ Rⁿ⁻¹`; `None` when `R` is not reflexive.
    pub dual_below_power: Option<bool>,
    /// `Rⁿ = Rⁿ⁻¹`; `None` when `R` is not reflexive.
    pub power_stationary: Option<bool>,
    /// `(T,Tᵒᵖ)ₙ₊₁ = (T,Tᵒᵖ)ₙ₋₁` with `T = R`.
    pub zigzag_stationary: bool,
}

impl fmt::Display for ZurabReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "dual below power: {}", show(self.dual_below_power))?;
        writeln!(f, "power stationary: {}", show(self.power_stationary))?;
        writeln!(f, "zigzag stationary: {}", self.zigzag_stationary)
    }
}

pub fn zurab_conditions(r: &Relation, n: usize) -> Result<ZurabReport> {
    if n < 3 {
        return Err(Error::InvalidParameter("n must be at least 3".into()));
    }
    let dual = r.dual();
    let zigzag_stationary = word(r, &dual, n + 1) == word(r, &dual, n - 1);
    let (dual_below_power, power_stationary) = if r.is_reflexive() {
        let p = r.power(n - 1);
        (Some(dual.is_subset(&p)), Some(r.after(&p) == p))
    } else {
        (None, None)
    };
    Ok(ZurabReport {
        n,
        dual_below_power,
        power_stationary,
        zigzag_stationary,
    })
}

/// `(S,R)₂ₙ₋₁ ⊆ (R,S)₂ₙ₋₁`.
pub fn mixed_subpermutability(r: &Relation, s: &Relation, n: usize, mode: Mode) -> Result<bool> {
    same_carrier(r, s)?;
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    match mode {
        Mode::Strict => OrderKind::Preorder.require("R", r)?,
        Mode::Exploratory => require_reflexive("R", r)?,
    }
    require_reflexive("S", s)?;
    Ok(word(s, r, 2 * n - 1).is_subset(&word(r, s, 2 * n - 1)))
}

/// `Rⁿ⁻¹` and its classification.
pub fn closure_power(r: &Relation, n: usize) -> Result<(Relation, Properties)> {
    require_reflexive("R", r)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let p = r.power(n - 1);
    let props = p.classify();
    Ok((p, props))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::closure;

    fn refl(n: usize, pairs: &[(usize, usize)]) -> Relation {
        Relation::from_pairs(n, pairs.iter().copied()).unwrap().with_diagonal()
    }

    #[test]
    fn odd_conditions_agree() {
        let r = closure(OrderKind::Preorder, &refl(3, &[(0, 1), (0, 2)]));
        let s = refl(3, &[(1, 2)]);
        let rep = stationarity_conditions(Parity::Odd, &r, &s, 1, Mode::Strict).unwrap();
        assert!(rep.consistent, "{rep}");
        // R = Δ: every condition says S is transitive
        let s = refl(3, &[(0, 1), (1, 2)]);
        let rep = stationarity_conditions(Parity::Odd, &Relation::delta(3), &s, 1, Mode::Strict).unwrap();
        assert!(rep.consistent);
        assert!(rep.conditions.iter().all(|c| !c.1));
        let s = closure(OrderKind::Preorder, &s);
        let rep = stationarity_conditions(Parity::Odd, &Relation::delta(3), &s, 1, Mode::Strict).unwrap();
        assert!(rep.conditions.iter().all(|c| c.1));
    }

    #[test]
    fn even_with_unit_left() {
        let s = closure(OrderKind::Preorder, &refl(4, &[(0, 1), (1, 2), (3, 2)]));
        let rep = stationarity_conditions(Parity::Even, &Relation::delta(4), &s, 1, Mode::Strict).unwrap();
        assert!(rep.get(1) && rep.get(2) && rep.get(3));
        assert!(rep.consistent);
    }

    #[test]
    fn hypotheses_enforced() {
        let s = refl(3, &[(0, 1), (1, 2)]);
        let err = stationarity_conditions(Parity::Odd, &s, &s, 1, Mode::Strict).unwrap_err();
        assert_eq!(err, Error::hypothesis("R", "a preorder"));
        let rep = stationarity_conditions(Parity::Odd, &s, &s, 1, Mode::Exploratory).unwrap();
        assert!(!rep.validated);
        assert!(stationarity_conditions(Parity::Odd, &s, &s, 0, Mode::Exploratory).is_err());
    }

    #[test]
    fn permutability_levels() {
        let m2 = Relation::from_fn(6, |i, j| i % 2 == j % 2);
        let m3 = Relation::from_fn(6, |i, j| i % 3 == j % 3);
        assert_eq!(pair_permutability_level(&m2, &m3, 6, Mode::Strict).unwrap().unwrap().0, 2);
        assert_eq!(pair_permutability_level(&m2, &m2, 6, Mode::Strict).unwrap().unwrap().0, 2);
        let a = Relation::from_partition(3, &[&[0, 1]]).unwrap();
        let b = Relation::from_partition(3, &[&[1, 2]]).unwrap();
        let (n, common) = pair_permutability_level(&a, &b, 6, Mode::Strict).unwrap().unwrap();
        assert_eq!((n, common), (3, Relation::nabla(3)));
        assert_eq!(pair_permutability_level(&a, &b, 2, Mode::Strict).unwrap(), None);
    }

    #[test]
    fn zurab_instances() {
        let path = refl(4, &[(0, 1), (1, 2), (2, 3)]);
        let z = zurab_conditions(&path, 3).unwrap();
        assert_eq!(z.power_stationary, Some(false));
        let e = Relation::from_partition(5, &[&[0, 3], &[1, 2, 4]]).unwrap();
        for n in 3..6 {
            let z = zurab_conditions(&e, n).unwrap();
            assert_eq!((z.dual_below_power, z.power_stationary, z.zigzag_stationary), (Some(true), Some(true), true));
            let z = zurab_conditions(&Relation::nabla(4), n).unwrap();
            assert_eq!((z.dual_below_power, z.power_stationary, z.zigzag_stationary), (Some(true), Some(true), true));
        }
        let strict = Relation::from_pairs(3, [(0, 1)]).unwrap();
        assert_eq!(zurab_conditions(&strict, 3).unwrap().power_stationary, None);
    }

    #[test]
    fn mixed_examples() {
        let s = refl(3, &[(0, 1), (1, 2)]);
        assert!(!mixed_subpermutability(&Relation::delta(3), &s, 2, Mode::Strict).unwrap());
        let big = closure(OrderKind::Preorder, &refl(4, &[(0, 1), (1, 2), (2, 3)]));
        let small = refl(4, &[(1, 2)]);
        assert!(mixed_subpermutability(&big, &small, 2, Mode::Strict).unwrap());
        assert!(mixed_subpermutability(&big, &big, 3, Mode::Strict).unwrap());
    }

    #[test]
    fn closure_powers() {
        let e = Relation::from_partition(3, &[&[0, 2]]).unwrap();
        assert!(closure_power(&e, 4).unwrap().1.equivalence);
        let r = refl(2, &[(0, 1)]);
        let (p, props) = closure_power(&r, 3).unwrap();
        assert_eq!(p, r);
        assert!(props.preorder && !props.symmetric);
        for r in crate::enumerate::enumerate(crate::relation::Kind::Reflexive, 2).unwrap() {
            assert!(closure_power(&r, 3).unwrap().1.transitive);
        }
    }
}
