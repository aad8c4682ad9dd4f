//! Concrete pairs of algebras: Hecke pairs of a group and subgroup, the
//! two-dimensional α-families, small counterexamples, and the
//! two-subgroup groupoid construction.

mod counterexamples;
mod families;
mod hecke;
mod twosub;

pub use counterexamples::{c3, c4, groupoid2, m2, pairing_from_dual_basis};
pub use families::{alpha_dual_pair, alpha_family, AlphaKind};
pub use hecke::{
    function_algebra, group_algebra, group_pair, hecke_pair, ExpectationReport, HeckePair,
};
pub use twosub::{
    free_product_expectation, omega_free, omega_from_group, twosub_pair, FreeProductReport, Omega, OmegaReport,
};

use crate::algebra::{Algebra, Functional};
use crate::duality::{verify_fqh, Fqh, FqhCertificate};
use crate::error::Result;
use crate::exactnum::{vector, Matrix, Scalar};
use crate::pairing::{DualPair, Side};

/// A pair of algebras with a candidate left integral on each side and,
/// where the construction provides them, closed forms for the coproducts
/// and antipodes. Closed forms are kept separate from the structure the
/// pairing induces so that the two can be compared.
#[derive(Clone, Debug)]
pub struct Example {
    pub name: String,
    pub pair: DualPair,
    pub integral_a: Functional,
    pub integral_b: Option<Functional>,
    pub coproduct_a: Option<Matrix>,
    pub coproduct_b: Option<Matrix>,
    pub antipode_a: Option<Matrix>,
    pub antipode_b: Option<Matrix>,
}

impl Example {
    fn new(name: impl Into<String>, pair: DualPair, integral_a: Functional) -> Self {
        Example {
            name: name.into(),
            pair,
            integral_a,
            integral_b: None,
            coproduct_a: None,
            coproduct_b: None,
            antipode_a: None,
            antipode_b: None,
        }
    }

    pub fn algebra(&self, side: Side) -> &Algebra {
        self.pair.algebra(side)
    }

    pub fn coproduct(&self, side: Side) -> Result<Matrix> {
        self.pair.induced_coproduct(side)
    }

    pub fn counit(&self, side: Side) -> Vec<Scalar> {
        self.pair.induced_counit(side)
    }

    pub fn integral(&self, side: Side) -> Option<&Functional> {
        match side {
            Side::A => Some(&self.integral_a),
            Side::B => self.integral_b.as_ref(),
        }
    }

    pub fn certificate(&self, side: Side) -> Result<Option<FqhCertificate>> {
        let Some(phi) = self.integral(side) else {
            return Ok(None);
        };
        Ok(Some(verify_fqh(self.algebra(side), &self.coproduct(side)?, &self.counit(side), phi)?))
    }

    /// The certified structure on one side, with the pair oriented so that
    /// this side comes first.
    pub fn fqh(&self, side: Side) -> Result<(Fqh, DualPair)> {
        let phi = self
            .integral(side)
            .ok_or_else(|| crate::Error::Precondition("no integral on this side".into()))?
            .clone();
        let pair = match side {
            Side::A => self.pair.clone(),
            Side::B => self.pair.flipped(),
        };
        let f = Fqh::certify(pair.a().clone(), pair.induced_coproduct(Side::A)?, pair.induced_counit(Side::A), phi)?;
        Ok((f, pair))
    }
}

pub(crate) fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// `ℂ^n` with orthogonal idempotents as basis.
pub(crate) fn diagonal_algebra(labels: Vec<String>) -> Algebra {
    let n = labels.len();
    Algebra::from_product_fn(
        labels,
        |i, j| if i == j { vector::unit(n, i) } else { vector::zeros(n) },
        vec![Scalar::from_int(1); n],
        Some(Matrix::identity(n)),
    )
    .expect("nonempty")
}
