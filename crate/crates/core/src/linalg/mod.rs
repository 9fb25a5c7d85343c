//! Dense exact linear algebra: matrices, RREF, solving and subspaces.

mod coords;
mod matrix;
mod subspace;

pub use coords::Coordinates;
pub use matrix::{combine, combine_matrices, Matrix, Rref, Solution};
pub use subspace::{Quotient, Subspace};
