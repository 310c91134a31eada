//! Rook monoids, Bruhat–Chevalley–Renner order, Putcha posets and two-sided
//! weak orders, with exhaustive checkers for their order-theoretic properties.

pub mod bitset;
pub mod bruhat;
pub mod cosets;
pub mod error;
pub mod perm;
pub mod poset;
pub mod putcha;
pub mod verify;
pub mod weak;

pub use bruhat::{IdempotentE, RennerPoset, StandardForm};
pub use error::{Error, Result};
pub use perm::{EnumerationLimits, PartialPerm, Permutation, SimpleSubset};
pub use poset::FinitePoset;
