//! Exact Gaussian-rational scalars and dense matrices.
//!
//! Every decision made elsewhere in the crate (rank, solvability,
//! positivity, equality of structure maps) is computed here without
//! floating point.

mod matrix;
mod scalar;
pub mod vector;

pub use matrix::{Echelon, Matrix, SolutionSet};
pub use scalar::{parse_rational, Scalar};
