//! Noncommutative Poisson algebras and algebras with bracket: exact classification,
//! free objects, representations, cohomology and long exact sequences.

pub mod error;
pub mod actions;
pub mod algebra;
pub mod cohomology;
pub mod exactlin;
pub mod freealg;
pub mod lescheck;
pub mod par;
pub mod random;
pub mod suite;

#[cfg(test)]
mod proptests;

pub use error::{Error, Result};
