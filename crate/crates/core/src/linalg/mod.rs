//! Sparse exact linear algebra over a [`Field`](crate::field::Field).

mod sparse;
mod subspace;

pub use sparse::{SparseMatrix, SparseVec};
pub use subspace::{map_image_kernel, rref_span, spin, spin_from, Subspace};
