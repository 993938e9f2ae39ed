//! Joins and cocartesian images along surjections.

use std::fmt;

use crate::chains::sigma_unchecked;
use crate::error::{Error, Result};
use crate::maps::{pair_carrier, FiniteMap};
use crate::relation::{require_reflexive, same_carrier, OrderKind, Relation};

/// `R ∨ S` among preorders or equivalences, computed as `Σ((R, S))`.
pub fn join(kind: OrderKind, r: &Relation, s: &Relation) -> Result<Relation> {
    same_carrier(r, s)?;
    kind.require("R", r)?;
    kind.require("S", s)?;
    Ok(sigma_unchecked(r, s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocartesianResult {
    pub map: FiniteMap,
    pub source: Relation,
    /// `f(R[f] ∨ T)`.
    pub image: Relation,
    /// `R[f] ∨ T = Σ((R[f], T))`.
    pub join_over_kernel: Relation,
    /// Whether `f⁻¹(image) = R[f] ∨ T` was confirmed.
    pub certified: bool,
}

impl fmt::Display for CocartesianResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# source")?;
        write!(f, "{}", self.source)?;
        writeln!(f, "# kernel")?;
        write!(f, "{}", self.map.kernel_pair())?;
        writeln!(f, "# join over kernel")?;
        write!(f, "{}", self.join_over_kernel)?;
        writeln!(f, "# image")?;
        write!(f, "{}", self.image)?;
        writeln!(f, "certified: {}", self.certified)
    }
}

fn check_surjection_source(kind: OrderKind, f: &FiniteMap, t: &Relation) -> Result<()> {
    f.check_domain(t)?;
    f.require_surjective()?;
    kind.require("T", t)
}

/// The cocartesian image of `T` along a surjection `f`.
pub fn cocartesian_image(kind: OrderKind, f: &FiniteMap, t: &Relation) -> Result<CocartesianResult> {
    check_surjection_source(kind, f, t)?;
    let join_over_kernel = sigma_unchecked(&f.kernel_pair(), t);
    let image = f.image_of(&join_over_kernel);
    let certified = f.preimage_of(&image) == join_over_kernel;
    Ok(CocartesianResult {
        map: f.clone(),
        source: t.clone(),
        image,
        join_over_kernel,
        certified,
    })
}

/// Whether `f : T → S` is cocartesian, that is `f⁻¹(S) = R[f] ∨ T`.
///
/// It is an error for `f` not to be a morphism `T → S` at all.
pub fn is_cocartesian(kind: OrderKind, f: &FiniteMap, t: &Relation, s: &Relation) -> Result<bool> {
    check_surjection_source(kind, f, t)?;
    f.check_codomain(s)?;
    kind.require("S", s)?;
    let pulled = f.preimage_of(s);
    if !t.is_subset(&pulled) {
        return Err(Error::hypothesis("T", "contained in the inverse image of S"));
    }
    Ok(pulled == sigma_unchecked(&f.kernel_pair(), t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Hypotheses are enforced and reported as errors.
    #[default]
    Strict,
    /// Only what is needed to evaluate is enforced.
    Exploratory,
}

/// Compare `(R[f] ∨ S) ∧ T` with `R[f] ∨ (S ∧ T)`.
///
/// Strict mode requires `f` surjective, `S` and `T` preorders, `R[f] ⊆ T`
/// and `f(S)` a preorder; under those the answer is always `true`.
/// Exploratory mode only needs `S` and `T` reflexive.
pub fn modular_formula_check(f: &FiniteMap, s: &Relation, t: &Relation, mode: Mode) -> Result<bool> {
    f.check_domain(s)?;
    f.check_domain(t)?;
    let kernel = f.kernel_pair();
    match mode {
        Mode::Strict => {
            f.require_surjective()?;
            OrderKind::Preorder.require("S", s)?;
            OrderKind::Preorder.require("T", t)?;
            if !kernel.is_subset(t) {
                return Err(Error::hypothesis("T", "above the kernel of f"));
            }
            if !f.image_of(s).is_preorder() {
                return Err(Error::hypothesis("f(S)", "a preorder"));
            }
        }
        Mode::Exploratory => {
            require_reflexive("S", s)?;
            require_reflexive("T", t)?;
        }
    }
    let left = sigma_unchecked(&kernel, s).intersect(t);
    let right = sigma_unchecked(&kernel, &s.intersect(t));
    Ok(left == right)
}

/// `R ∨ S` for an equivalence `R` and a preorder `S`, built on the pair
/// carrier of `R` as the cocartesian image of `d₀⁻¹(S)` along `d₁`.
pub fn join_via_square(r: &Relation, s: &Relation) -> Result<Relation> {
    same_carrier(r, s)?;
    OrderKind::Equivalence.require("R", r)?;
    OrderKind::Preorder.require("S", s)?;
    let pc = pair_carrier(r);
    let lifted = pc.d0.preimage_of(s);
    Ok(cocartesian_image(OrderKind::Preorder, &pc.d1, &lifted)?.image)
}
