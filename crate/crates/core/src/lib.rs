//! MDS self-dual codes over finite fields of odd characteristic.
//!
//! The crate builds (extended) generalized Reed-Solomon codes whose
//! multipliers make them Euclidean self-dual, and checks the results with
//! independent oracles:
//!
//! - [`gf`]: exact arithmetic in `F_{p^m}`, quadratic character, square roots.
//! - [`grs`]: GRS and extended GRS codes, generator matrices, dual multipliers.
//! - [`duality`]: self-duality criteria, multiplier synthesis, MDS checks.
//! - [`construct`]: explicit point-set constructions (four families).
//! - [`census`]: admissible even lengths for a field size, old vs. new rules.

pub mod arith;
pub mod census;
pub mod construct;
pub mod duality;
mod error;
pub mod gf;
pub mod grs;
mod poly;

pub use error::{Error, Result};
pub use gf::{Fe, FieldContext, FieldSpec};
pub use grs::{CodeSpec, EvalPoints, GeneratorMatrix};
