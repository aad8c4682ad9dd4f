use num_traits::{One, Zero};

use super::{diagonal_algebra, names, Example};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactnum::{vector, Matrix, Scalar};
use crate::pairing::DualPair;

/// The pairing under which the elements whose coordinates are the columns
/// of `t` form the dual basis of `B`'s basis: `P = (tᵀ)⁻¹`.
pub fn pairing_from_dual_basis(t: &Matrix) -> Result<Matrix> {
    t.transpose().inverse().ok_or_else(|| Error::InvalidParameter("dual basis elements are dependent".into()))
}

fn with_dual_basis(name: String, a: Algebra, b_labels: &[&str], t: Matrix) -> Result<Example> {
    let pairing = pairing_from_dual_basis(&t)?;
    let b = diagonal_algebra(names(b_labels));
    // The integral is ⟨·, h⟩ where h is dual to 1.
    let phi = pairing.column(0);
    Ok(Example::new(name, DualPair::new(a, b, pairing)?, phi))
}

/// `ℂ²` with `Δ(p) = p⊗p`, `Δ(q) = q⊗q` paired with a groupoid algebra.
/// The coproduct is not unital and no nonzero functional is invariant.
pub fn groupoid2() -> Example {
    let a = diagonal_algebra(names(&["p", "q"]));
    let b = diagonal_algebra(names(&["x", "y"]));
    let mut ex = Example::new("groupoid2", DualPair::new(a, b, Matrix::identity(2)).expect("square"), vector::from_ints(&[1, 1]));
    ex.antipode_a = Some(Matrix::identity(2));
    ex
}

/// `ℂ³` where `1, u, v` are dual to the idempotents `h, x, y`, with
/// `u = e1 + e2 − e3` and `v = e1 − e2 + e3`.
pub fn c3() -> Example {
    let a = diagonal_algebra(names(&["e1", "e2", "e3"]));
    let t = Matrix::from_ints(&[&[1, 1, 1], &[1, 1, -1], &[1, -1, 1]]);
    with_dual_basis("c3".into(), a, &["h", "x", "y"], t).expect("independent")
}

/// `ℂ⁴` where `1, u, v, w + λ1` are dual to `h, x, y, z`.
pub fn c4(lambda: &Scalar) -> Result<Example> {
    let a = diagonal_algebra(names(&["e1", "e2", "e3", "e4"]));
    let one = Scalar::one();
    let w = vector::from_ints(&[1, -1, 1, -1]);
    let w_shift: Vec<Scalar> = w.iter().map(|x| x + lambda).collect();
    let cols = vec![
        vec![one.clone(); 4],
        vector::from_ints(&[1, 1, -1, -1]),
        vector::from_ints(&[1, -1, -1, 1]),
        w_shift,
    ];
    let t = Matrix::from_columns(&cols)?;
    with_dual_basis(format!("c4 λ={lambda}"), a, &["h", "x", "y", "z"], t)
}

/// `M₂(ℂ)` where `1, u = e12 + e21, v = e12 − e21, w = p·e11 + q·e22` are
/// dual to the idempotents `h, x, y, z`.
pub fn m2(p: &Scalar, q: &Scalar) -> Result<Example> {
    if p == q || *p == -q || p.is_zero() || q.is_zero() {
        return Err(Error::InvalidParameter(format!("m2 needs p ≠ ±q and p, q ≠ 0 (got p={p}, q={q})")));
    }
    // Basis e11, e12, e21, e22; e_ab e_cd = δ_bc e_ad.
    let idx = |r: usize, c: usize| r * 2 + c;
    let a = Algebra::from_product_fn(
        names(&["e11", "e12", "e21", "e22"]),
        |i, j| {
            let (a1, b1, a2, b2) = (i / 2, i % 2, j / 2, j % 2);
            if b1 == a2 {
                vector::unit(4, idx(a1, b2))
            } else {
                vector::zeros(4)
            }
        },
        vector::from_ints(&[1, 0, 0, 1]),
        Some(Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])),
    )?;
    let z = Scalar::zero();
    let cols = vec![
        vector::from_ints(&[1, 0, 0, 1]),
        vector::from_ints(&[0, 1, 1, 0]),
        vector::from_ints(&[0, 1, -1, 0]),
        vec![p.clone(), z.clone(), z, q.clone()],
    ];
    with_dual_basis(format!("m2 p={p} q={q}"), a, &["h", "x", "y", "z"], Matrix::from_columns(&cols)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_faithful, validate_coproduct};
    use crate::integrals::{invariant_functionals, is_invariant, solve_antipode, verify_integral, AntipodeStatus, Hand};
    use crate::pairing::Side;

    #[test]
    fn groupoid_has_no_invariant_functional() {
        let ex = groupoid2();
        let a = ex.algebra(Side::A);
        let delta = ex.coproduct(Side::A).unwrap();
        assert!(invariant_functionals(a, &delta, Hand::Left).unwrap().is_empty());
        let r = validate_coproduct(a, &delta, &ex.counit(Side::A)).unwrap();
        assert!(r.coassociative && !r.unital);
        for phi in [vector::from_ints(&[1, 1]), vector::from_ints(&[2, -5]), vector::from_ints(&[0, 0])] {
            assert!(verify_integral(a, &delta, &phi, &Matrix::identity(2), Hand::Left, None).unwrap());
            assert_ne!(solve_antipode(a, &delta, &phi, Hand::Left).unwrap().status, AntipodeStatus::NoSolution);
        }
    }

    #[test]
    fn c3_invariant_but_no_antipode() {
        let ex = c3();
        assert_eq!(ex.integral_a, vec![Scalar::zero(), Scalar::ratio(1, 2), Scalar::ratio(1, 2)]);
        let a = ex.algebra(Side::A);
        let delta = ex.coproduct(Side::A).unwrap();
        assert!(is_invariant(a, &delta, &ex.integral_a, Hand::Left).unwrap());
        assert!(!is_faithful(a, &ex.integral_a));
        assert_eq!(solve_antipode(a, &delta, &ex.integral_a, Hand::Left).unwrap().status, AntipodeStatus::NoSolution);
    }

    #[test]
    fn c4_values_of_phi() {
        let ex = c4(&Scalar::zero()).unwrap();
        assert_eq!(ex.integral_a, vec![Scalar::ratio(1, 4); 4]);
        let ex = c4(&Scalar::from_int(1)).unwrap();
        // φ(e_i) = (1 ∓ λ)/4
        assert_eq!(ex.integral_a, vector::from_ratios(&[(0, 1), (1, 2), (0, 1), (1, 2)]));
    }

    #[test]
    fn m2_parameters() {
        assert!(m2(&Scalar::from_int(1), &Scalar::from_int(1)).is_err());
        assert!(m2(&Scalar::from_int(1), &Scalar::from_int(-1)).is_err());
        assert!(m2(&Scalar::zero(), &Scalar::from_int(2)).is_err());
        let ex = m2(&Scalar::from_int(1), &Scalar::from_int(2)).unwrap();
        assert_eq!(ex.integral_a, vector::from_ints(&[2, 0, 0, -1]));
    }
}
