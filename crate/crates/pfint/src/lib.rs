//! Pfaffian integration identities, exactly and numerically.
//!
//! This crate evaluates and cross-checks a family of identities tying
//! Pfaffians of antisymmetric matrices to integrals over finite measure
//! spaces:
//!
//! - Pfaffians by a combinatorial matching oracle and by skew Gaussian
//!   elimination, over exact rationals or complex doubles ([`pfaffian`]).
//! - Elementary symmetric functions of power sums, via the partition sum,
//!   the Newton recursion and the generating exponential ([`symfun`]).
//! - The Ishikawa-Wakayama minor summation formulas ([`minorsum`]).
//! - de Bruijn's integral formula and moment matrices of function systems
//!   on weighted point sets ([`measure`]).
//! - The Pfaffian integration theorem, its tau-polynomial form, and the
//!   Fredholm Pfaffian / determinant identities ([`theorem`]).
//!
//! Integration always means a weighted finite sum: continuous measures
//! enter through quadrature rules such as the tensor Gauss-Hermite grid on
//! the complex plane, so every identity can be checked either exactly (on
//! rational data) or to a stated tolerance (on quadrature data).

pub mod error;
pub mod json;
pub mod matrix;
pub mod measure;
pub mod minorsum;
pub mod pfaffian;
pub mod random;
pub mod scalar;
pub mod symfun;
pub mod taupoly;
pub mod theorem;

pub use error::{Error, Result};
pub use matrix::{IndexSubset, Matrix, SkewMatrix};
pub use measure::{BasisTable, KernelInstance, MeasureSpace};
pub use pfaffian::{pfaffian, pfaffian_oracle};
pub use scalar::Scalar;
pub use symfun::{Partition, PowerSums};
pub use taupoly::TauPoly;
