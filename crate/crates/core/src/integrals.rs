//! Invariant functionals, integrals and the antipodes they determine.
//!
//! A left integral `φ` with antipode `S` satisfies, for all `a, c`,
//!
//! ```text
//! S((ι⊗φ)(Δ(a)(1⊗c))) = (ι⊗φ)((1⊗a)Δ(c))
//! ```
//!
//! and a right integral `ψ` with antipode `S'` satisfies
//!
//! ```text
//! S'((ψ⊗ι)((c⊗1)Δ(a))) = (ψ⊗ι)(Δ(c)(a⊗1)).
//! ```
//!
//! Over the basis both are linear systems in the entries of `S`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, gram, Algebra, Functional};
use crate::error::{Error, Result};
use crate::exactnum::{vector, Matrix, Scalar, SolutionSet};
use crate::pairing::{counit_is_hom, is_anti_isomorphism, Action, DualPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hand {
    Left,
    Right,
}

fn check_delta(a: &Algebra, delta: &Matrix, phi: &[Scalar]) -> Result<usize> {
    let d = a.dim();
    if delta.rows() != d * d || delta.cols() != d || phi.len() != d {
        return Err(Error::DimensionMismatch("coproduct or functional does not match the algebra".into()));
    }
    Ok(d)
}

/// Left: `(ι⊗φ)Δ(a) = φ(a)1`. Right: `(φ⊗ι)Δ(a) = φ(a)1`.
pub fn is_invariant(a: &Algebra, delta: &Matrix, phi: &[Scalar], hand: Hand) -> Result<bool> {
    check_delta(a, delta, phi)?;
    let sliced = match hand {
        Hand::Left => algebra::contract_right(delta, phi),
        Hand::Right => algebra::contract_left(delta, phi),
    };
    let expected = Matrix::column_vector(a.unit()).mul(&Matrix::row_vector(phi));
    Ok(sliced == expected)
}

/// Basis of the space of invariant functionals.
pub fn invariant_functionals(a: &Algebra, delta: &Matrix, hand: Hand) -> Result<Vec<Functional>> {
    let d = a.dim();
    check_delta(a, delta, &vector::zeros(d))?;
    // One equation per (j, r): Σ_s coef(j, r, s) φ_s − φ_j 1_r = 0.
    let mut rows = Vec::with_capacity(d * d);
    for j in 0..d {
        for r in 0..d {
            let mut row: Vec<Scalar> = (0..d)
                .map(|s| match hand {
                    Hand::Left => delta.get(r * d + s, j).clone(),
                    Hand::Right => delta.get(s * d + r, j).clone(),
                })
                .collect();
            row[j] -= &a.unit()[r];
            rows.push(row);
        }
    }
    Ok(Matrix::from_rows(rows)?.null_space())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AntipodeStatus {
    Unique,
    NonUnique,
    NoSolution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntipodeResult {
    pub status: AntipodeStatus,
    /// A solution; the unique one when `status` is `unique`.
    #[serde(rename = "S")]
    pub s: Option<Matrix>,
    /// Dimension of the affine family of solutions, `dim·(dim − rank 𝕏)`.
    pub freedom_dim: usize,
    /// First basis pair `(a, c)`, in lexicographic order, at which the
    /// system becomes inconsistent.
    pub witness: Option<[usize; 2]>,
}

/// The `dim × dim²` matrices `𝕏`, `𝕐` with `S·𝕏 = 𝕐`; column `a·dim + c`
/// belongs to the basis pair `(e_a, e_c)`.
pub fn antipode_system(a: &Algebra, delta: &Matrix, phi: &[Scalar], hand: Hand) -> Result<(Matrix, Matrix)> {
    let d = check_delta(a, delta, phi)?;
    let g = gram(a, phi);
    let mut x = Matrix::zeros(d, d * d);
    let mut y = Matrix::zeros(d, d * d);
    for i in 0..d {
        for k in 0..d {
            let col = i * d + k;
            for out in 0..d {
                let mut xs = Scalar::zero();
                let mut ys = Scalar::zero();
                for s in 0..d {
                    match hand {
                        Hand::Left => {
                            // Δ(e_i)(1⊗e_k) sliced by φ on the right leg.
                            let di = delta.get(out * d + s, i);
                            if !di.is_zero() {
                                xs += &(di * g.get(s, k));
                            }
                            let dk = delta.get(out * d + s, k);
                            if !dk.is_zero() {
                                ys += &(dk * g.get(i, s));
                            }
                        }
                        Hand::Right => {
                            let di = delta.get(s * d + out, i);
                            if !di.is_zero() {
                                xs += &(g.get(k, s) * di);
                            }
                            let dk = delta.get(s * d + out, k);
                            if !dk.is_zero() {
                                ys += &(dk * g.get(s, i));
                            }
                        }
                    }
                }
                x.set(out, col, xs);
                y.set(out, col, ys);
            }
        }
    }
    Ok((x, y))
}

pub fn solve_antipode(a: &Algebra, delta: &Matrix, phi: &[Scalar], hand: Hand) -> Result<AntipodeResult> {
    let d = a.dim();
    let (x, y) = antipode_system(a, delta, phi, hand)?;
    let xt = x.transpose();
    let yt = y.transpose();
    match xt.solve(&yt)? {
        SolutionSet::Unique(st) => {
            Ok(AntipodeResult { status: AntipodeStatus::Unique, s: Some(st.transpose()), freedom_dim: 0, witness: None })
        }
        SolutionSet::Affine { particular, .. } => {
            let rank = x.rank();
            Ok(AntipodeResult {
                status: AntipodeStatus::NonUnique,
                s: Some(particular.transpose()),
                freedom_dim: d * (d - rank),
                witness: None,
            })
        }
        SolutionSet::None => {
            let witness = first_inconsistent_pair(&xt, &yt, d)?;
            Ok(AntipodeResult { status: AntipodeStatus::NoSolution, s: None, freedom_dim: 0, witness })
        }
    }
}

fn first_inconsistent_pair(xt: &Matrix, yt: &Matrix, d: usize) -> Result<Option<[usize; 2]>> {
    let take = |m: &Matrix, n: usize| Matrix::from_fn(n, m.cols(), |i, j| m.get(i, j).clone());
    for n in 1..=xt.rows() {
        if take(xt, n).solve(&take(yt, n))? == SolutionSet::None {
            let col = n - 1;
            return Ok(Some([col / d, col % d]));
        }
    }
    Ok(None)
}

/// Checks the integral equation for a given `S`. With a pair, the
/// equivalent pairing form is checked as well:
/// `φ((a◁S_B(b))c) = φ(a(c◁b))` on the left and
/// `ψ(c(S'_B(b)▷a)) = ψ((b▷c)a)` on the right, where `S_B` is the adjoint of `S`.
pub fn verify_integral(
    a: &Algebra,
    delta: &Matrix,
    phi: &[Scalar],
    s: &Matrix,
    hand: Hand,
    pair: Option<&DualPair>,
) -> Result<bool> {
    let d = a.dim();
    if s.rows() != d || s.cols() != d {
        return Err(Error::DimensionMismatch("antipode shape".into()));
    }
    let (x, y) = antipode_system(a, delta, phi, hand)?;
    let equation = s.mul(&x) == y;
    match pair {
        None => Ok(equation),
        Some(p) => Ok(equation && pairing_form_holds(p, phi, s, hand)?),
    }
}

/// The pairing form of the integral equation on its own.
pub fn pairing_form_holds(pair: &DualPair, phi: &[Scalar], s: &Matrix, hand: Hand) -> Result<bool> {
    let a = pair.a();
    let d = a.dim();
    let s_b = pair.adjoint_to_b(s)?;
    for bi in 0..d {
        let b = pair.b().basis_vector(bi);
        let sb = s_b.mul_vec(&b);
        let (lhs_map, rhs_map) = match hand {
            Hand::Left => {
                (pair.action_matrix(Action::BActsRightOnA, &sb)?, pair.action_matrix(Action::BActsRightOnA, &b)?)
            }
            Hand::Right => {
                (pair.action_matrix(Action::BActsLeftOnA, &sb)?, pair.action_matrix(Action::BActsLeftOnA, &b)?)
            }
        };
        for ai in 0..d {
            let av = a.basis_vector(ai);
            for ci in 0..d {
                let c = a.basis_vector(ci);
                let (lhs, rhs) = match hand {
                    Hand::Left => (
                        a.multiply(&lhs_map.mul_vec(&av), &c),
                        a.multiply(&av, &rhs_map.mul_vec(&c)),
                    ),
                    Hand::Right => (
                        a.multiply(&c, &lhs_map.mul_vec(&av)),
                        a.multiply(&rhs_map.mul_vec(&c), &av),
                    ),
                };
                if algebra::apply(phi, &lhs) != algebra::apply(phi, &rhs) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `ψ = φ∘S`, a right integral when `φ` is a left integral with antipode `S`.
pub fn compose_right_integral(a: &Algebra, phi: &[Scalar], s: &Matrix) -> Result<Functional> {
    if !is_anti_isomorphism(a, s) {
        return Err(Error::Precondition("S is not a bijective anti-homomorphism".into()));
    }
    Ok(s.vec_mul(phi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CointegralSide {
    Left,
    Right,
    TwoSided,
}

/// Basis of the cointegrals: left `bh = ε(b)h`, right `hb = ε(b)h`.
pub fn find_cointegral(b: &Algebra, eps: &[Scalar], side: CointegralSide) -> Result<Vec<Vec<Scalar>>> {
    if eps.len() != b.dim() {
        return Err(Error::DimensionMismatch("counit length".into()));
    }
    if !counit_is_hom(b, eps) {
        return Err(Error::Precondition("ε is not a unital homomorphism".into()));
    }
    let d = b.dim();
    let id = Matrix::identity(d);
    let mut blocks: Vec<Matrix> = Vec::new();
    for i in 0..d {
        let e = b.basis_vector(i);
        let shift = id.scale(&eps[i]);
        if side != CointegralSide::Right {
            blocks.push(b.left_mult_matrix(&e).sub(&shift));
        }
        if side != CointegralSide::Left {
            blocks.push(b.right_mult_matrix(&e).sub(&shift));
        }
    }
    let mut stacked = blocks[0].clone();
    for m in &blocks[1..] {
        stacked = stacked.vstack(m)?;
    }
    Ok(stacked.null_space())
}

/// The two-sided cointegral with `ε(h) = 1`, when the space is a line and
/// `ε` does not vanish on it.
pub fn normalized_cointegral(b: &Algebra, eps: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let basis = find_cointegral(b, eps, CointegralSide::TwoSided)?;
    if basis.len() != 1 {
        return Ok(None);
    }
    let e = algebra::apply(eps, &basis[0]);
    Ok(e.inv().map(|inv| vector::scale(&basis[0], &inv)))
}

/// The modular element `δ` with `(φ'⊗ι)Δ(a) = φ(a)δ` for a second left
/// invariant functional `φ'`; also checks `φ'(S(a)) = φ(aδ)`.
pub fn modular_element(
    a: &Algebra,
    delta: &Matrix,
    phi: &[Scalar],
    s: &Matrix,
    phi_prime: &[Scalar],
) -> Result<Vec<Scalar>> {
    let d = check_delta(a, delta, phi)?;
    if !algebra::is_faithful(a, phi) {
        return Err(Error::Precondition("φ is not faithful".into()));
    }
    if !verify_integral(a, delta, phi, s, Hand::Left, None)? {
        return Err(Error::Precondition("φ is not a left integral with antipode S".into()));
    }
    if s.mul_vec(a.unit()) != a.unit() {
        return Err(Error::Precondition("S(1) ≠ 1".into()));
    }
    if !is_invariant(a, delta, phi_prime, Hand::Left)? {
        return Err(Error::Precondition("φ' is not left invariant".into()));
    }
    let i0 = (0..d).find(|&i| !phi[i].is_zero()).ok_or_else(|| Error::Precondition("φ = 0".into()))?;
    let c0 = vector::scale(&a.basis_vector(i0), &phi[i0].inv().expect("nonzero"));
    let slice = algebra::contract_left(delta, phi_prime);
    let delta_el = slice.mul_vec(&c0);
    for j in 0..d {
        let ej = a.basis_vector(j);
        if slice.column(j) != vector::scale(&delta_el, &phi[j]) {
            return Err(Error::Postcondition(format!("(φ'⊗ι)Δ(e_{j}) ≠ φ(e_{j})δ")));
        }
        if algebra::apply(phi_prime, &s.column(j)) != algebra::apply(phi, &a.multiply(&ej, &delta_el)) {
            return Err(Error::Postcondition(format!("φ'(S(e_{j})) ≠ φ(e_{j}δ)")));
        }
    }
    Ok(delta_el)
}
