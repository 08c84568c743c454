//! Exact symmetric functions and plethysm, with constructors for the
//! characteristics of `Lie_n`, `Conj_n` and `Lie_n^(2)` and a registry of
//! plethystic identities that can be checked degree by degree.

pub mod constructions;
pub mod error;
pub mod lie_family;
pub mod partitions;
pub mod registry;
pub mod schur;
pub mod series;
pub mod symfunc;
pub mod tables;
pub mod wire;

pub use error::{Error, Result};
pub use partitions::{PartFilter, Partition};
pub use symfunc::{plethysm, Rational, SymFunc};
