//! Graded Specht modules of level-two cyclotomic KLR algebras labelled by
//! hook bipartitions `((n-m),(1^m))`, with quantum characteristic `e >= 3`.
//!
//! The module is built from explicit formulas for the action of the
//! generators `e(i)`, `y_r` and `ψ_r` on the standard basis `v(A)`, where `A`
//! runs over the `m`-subsets of `{1..n}` that fill the leg. Everything else
//! (relation checks, homomorphisms, composition series) is computed from the
//! resulting sparse matrices over an exact field.

pub mod combinatorics;
pub mod error;
pub mod field;
pub mod homs;
pub mod klr;
pub mod linalg;
pub mod specht;
pub mod structure;

pub use combinatorics::{GenWord, LegSet, Params, ResidueSeq};
pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals};
pub use specht::{HookSpechtModule, SignTable};
