//! Exact-arithmetic finite quantum hypergroups.

pub mod algebra;
pub mod constructions;
pub mod duality;
pub mod error;
pub mod exactnum;
pub mod groups;
pub mod integrals;
pub mod pairing;

pub use algebra::{Algebra, Functional};
pub use error::{Error, Result};
pub use exactnum::{Matrix, Scalar, SolutionSet};
pub use groups::{FiniteGroup, Subgroup};
pub use pairing::{Action, DualPair, Side};

/// Version tag carried by every top-level JSON document.
pub const SCHEMA: &str = "fqhg/1";
