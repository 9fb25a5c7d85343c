pub mod algebra;
pub mod basis;
pub mod catalog;
pub mod cells;
pub mod duality;
pub mod error;
pub mod highest_weight;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod scalar;
pub mod tilting;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use scalar::{FRuntime, FieldKind, Fp, Rational, Scalar, F101, F2, F3, F5, F7};
