//! Finite relation calculus.
//!
//! Relations on finite carriers, the maps between them, the alternating
//! chains `Δ ⊆ R ⊆ RS ⊆ RSR ⊆ …` and their suprema, cocartesian images
//! along surjections, permutability conditions, congruences of finite
//! algebras, and a harness that checks statements about all of these by
//! exhaustion or seeded sampling.
//!
//! ```
//! use relcat::{chains, Relation};
//!
//! let r = Relation::from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1)])?;
//! let s = Relation::from_pairs(3, [(0, 0), (1, 1), (2, 2), (1, 2)])?;
//! let sup = chains::supremum_sigma(&r, &s)?;
//! assert!(sup.contains(0, 2));
//! assert!(sup.is_preorder());
//! # Ok::<(), relcat::Error>(())
//! ```

pub mod error;
pub mod relation;
pub mod enumerate;
pub mod text;
pub mod maps;
pub mod chains;
pub mod cocart;
pub mod permut;
pub mod ualg;
pub mod harness;
pub mod cli;

pub use error::{Error, Result};
pub use maps::FiniteMap;
pub use relation::{Kind, OrderKind, Relation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/relations.md")]
    mod relations {}
    #[doc = include_str!("../../../book/src/maps.md")]
    mod maps {}
    #[doc = include_str!("../../../book/src/chains.md")]
    mod chains {}
    #[doc = include_str!("../../../book/src/cocartesian.md")]
    mod cocartesian {}
    #[doc = include_str!("../../../book/src/permutability.md")]
    mod permutability {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
