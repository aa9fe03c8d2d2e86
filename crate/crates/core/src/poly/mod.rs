//! Ternary and binary forms, linear forms, points and cube decompositions.

pub mod binary;
pub mod decomposition;
pub mod form;
pub mod linear;

pub use binary::BinaryCubic;
pub use decomposition::{expand_cubes, merge_proportional, Decomposition, Term};
pub use form::{monomial_index, monomials, TernaryCubic, TernaryForm};
pub use linear::{LinearForm, ProjectivePoint};
