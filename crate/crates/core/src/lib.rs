//! Exact and modular computations with determinantal ideals of symmetric,
//! exterior and tensor powers of matrices.
//!
//! Polynomials have rational coefficients and are compared one graded
//! component at a time, either exactly or modulo random primes.

pub mod combinat;
pub mod echelon;
pub mod error;
pub mod field;
pub mod ideal;
pub mod matrix;
pub mod multilinear;
pub mod poly;
pub mod span;
pub mod young;

pub use error::{AlgebraError, Result};
pub use field::{Field, PrimeField, Rationals};
pub use ideal::IdealGens;
pub use matrix::PolyMatrix;
pub use poly::{Monomial, Polynomial, VarTable};
pub use span::{ExactSpan, GradedSpan, ModularSpan, MonomialBasis};
pub use young::{Partition, ShapeSet};
