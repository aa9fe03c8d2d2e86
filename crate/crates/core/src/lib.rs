#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod binaryrank;
pub mod catalog;
pub mod classify;
pub mod covariants;
pub mod depaolis;
pub mod error;
pub mod exact;
pub mod poly;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, FieldElement, Inertia, Radicand, Rational, Solution, UPoly};
pub use poly::{BinaryCubic, Decomposition, LinearForm, ProjectivePoint, TernaryCubic, TernaryForm};
