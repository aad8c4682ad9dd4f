use num_traits::{One, Zero};

use super::{names, Example};
use crate::algebra::Algebra;
use crate::duality::Fqh;
use crate::error::{Error, Result};
use crate::exactnum::{vector, Matrix, Scalar};
use crate::pairing::DualPair;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaKind {
    /// Two idempotents `v`, `w` with `⟨v, w⟩ = α⁻¹`.
    Vw,
    /// An idempotent `v` against a nilpotent `y`.
    Vy,
    /// Two nilpotents `x`, `y`; α is normalized to 1.
    Xy,
}

impl std::str::FromStr for AlphaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vw" => Ok(AlphaKind::Vw),
            "vy" => Ok(AlphaKind::Vy),
            "xy" => Ok(AlphaKind::Xy),
            other => Err(Error::UnknownPreset(format!("family kind {other:?}"))),
        }
    }
}

/// Basis `{1, x}` with `x² = x` or `x² = 0`.
fn line(x: &str, idempotent: bool) -> Algebra {
    Algebra::from_product_fn(
        names(&["1", x]),
        |i, j| match (i, j) {
            (0, 0) => vector::unit(2, 0),
            (1, 1) if !idempotent => vector::zeros(2),
            _ => vector::unit(2, 1),
        },
        vector::unit(2, 0),
        Some(Matrix::identity(2)),
    )
    .expect("two-dimensional")
}

fn check_rational(alpha: &Scalar) -> Result<()> {
    if !alpha.is_real() {
        return Err(Error::InvalidParameter(format!("α must be rational, got {alpha}")));
    }
    Ok(())
}

fn forbid_minus_one(alpha: &Scalar) -> Result<()> {
    if *alpha == -Scalar::one() {
        return Err(Error::InvalidParameter("α=-1 forbidden: φ cannot be faithful".into()));
    }
    Ok(())
}

fn forbid_zero(alpha: &Scalar) -> Result<()> {
    if alpha.is_zero() {
        return Err(Error::InvalidParameter("α=0 forbidden: the pairing ⟨v,w⟩ = α⁻¹ is undefined".into()));
    }
    Ok(())
}

/// `{1, v}` with `v² = v`, `Δ(v) = v⊗1 + 1⊗v + αv⊗v`, `ε(v) = 0`,
/// `φ(v) = 1`, `φ(1) = −α`. The antipode is the identity.
pub fn alpha_family(alpha: &Scalar) -> Result<Fqh> {
    check_rational(alpha)?;
    forbid_minus_one(alpha)?;
    let a = line("v", true);
    let mut delta = Matrix::zeros(4, 2);
    delta.set(0, 0, Scalar::one());
    delta.set(1, 1, Scalar::one());
    delta.set(2, 1, Scalar::one());
    delta.set(3, 1, alpha.clone());
    let counit = vector::unit(2, 0);
    let integral = vec![-alpha.clone(), Scalar::one()];
    Fqh::certify(a, delta, counit, integral)
}

pub fn alpha_dual_pair(kind: AlphaKind, alpha: &Scalar) -> Result<Example> {
    check_rational(alpha)?;
    forbid_zero(alpha)?;
    if kind != AlphaKind::Xy {
        forbid_minus_one(alpha)?;
    }
    let alpha = if kind == AlphaKind::Xy { Scalar::one() } else { alpha.clone() };
    let inv = alpha.inv().expect("nonzero");
    let pairing = Matrix::from_rows(vec![vec![Scalar::one(), Scalar::zero()], vec![Scalar::zero(), inv]])?;
    let (a, b, phi_a, phi_b) = match kind {
        AlphaKind::Vw => (line("v", true), line("w", true), vec![-alpha.clone(), Scalar::one()], vec![
            -alpha.clone(),
            Scalar::one(),
        ]),
        AlphaKind::Vy => {
            (line("v", true), line("y", false), vector::unit(2, 1), vec![-alpha.clone(), Scalar::one()])
        }
        AlphaKind::Xy => (line("x", false), line("y", false), vector::unit(2, 1), vector::unit(2, 1)),
    };
    let name = match kind {
        AlphaKind::Vw => format!("family vw α={alpha}"),
        AlphaKind::Vy => format!("family vy α={alpha}"),
        AlphaKind::Xy => "family xy".to_string(),
    };
    let mut ex = Example::new(name, DualPair::new(a, b, pairing)?, phi_a);
    ex.integral_b = Some(phi_b);
    ex.antipode_a = Some(Matrix::identity(2));
    ex.antipode_b = Some(Matrix::identity(2));
    Ok(ex)
}
