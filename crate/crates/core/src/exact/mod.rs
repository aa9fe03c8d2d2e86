//! Exact scalars, univariate polynomials and small dense linear algebra.

pub mod field;
pub mod matrix;
pub mod rational;
pub mod roots;
pub mod squarefree;
pub mod upoly;

pub use field::{FieldElement, Radicand};
pub use matrix::{ExactMatrix, Inertia, Solution};
pub use rational::Rational;
pub use upoly::UPoly;
