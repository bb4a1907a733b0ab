//! Exact-arithmetic models of the Solomon descent algebra of W(A_n) and
//! its commutative, semisimple class algebra, together with the
//! parabolic Burnside ring and permutation character machinery used to
//! verify them.

pub mod characters;
pub mod class_algebra;
pub mod coset;
pub mod error;
pub mod linalg;
pub mod solomon;
pub mod table;
pub mod weyl;

/// The exact scalar used throughout the verification chain.
pub type Rat = num::BigRational;

pub use error::{Error, Result};
pub use weyl::{Partition, Permutation, Rank, Root, SimpleRootSet};
