//! Non-degenerate pairings between two algebras of equal dimension, the
//! structure they induce, and the four actions.

use serde::{Deserialize, Serialize};

use crate::algebra::{self, Algebra};
use crate::error::{Error, Result};
use crate::exactnum::{vector, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

/// The four actions, named by what acts on what. For [`act`] the operands
/// are given in written order, so `act(BActsRightOnA, a, b)` is `a◁b`.
///
/// [`act`]: DualPair::act
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// `b▷a`, with `⟨b▷a, b'⟩ = ⟨a, b'b⟩`.
    BActsLeftOnA,
    /// `a◁b`, with `⟨a◁b, b'⟩ = ⟨a, bb'⟩`.
    BActsRightOnA,
    /// `a▷b`, with `⟨a', a▷b⟩ = ⟨a'a, b⟩`.
    AActsLeftOnB,
    /// `b◁a`, with `⟨a', b◁a⟩ = ⟨aa', b⟩`.
    AActsRightOnB,
}

impl Action {
    pub const ALL: [Action; 4] =
        [Action::BActsLeftOnA, Action::BActsRightOnA, Action::AActsLeftOnB, Action::AActsRightOnB];

    /// Side of the acting element.
    pub fn actor(self) -> Side {
        match self {
            Action::BActsLeftOnA | Action::BActsRightOnA => Side::B,
            _ => Side::A,
        }
    }
}

/// `P[i][j] = ⟨e_i^A, e_j^B⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DualPairRepr", into = "DualPairRepr")]
pub struct DualPair {
    a: Algebra,
    b: Algebra,
    pairing: Matrix,
}

#[derive(Serialize, Deserialize)]
struct DualPairRepr {
    algebra_a: Algebra,
    algebra_b: Algebra,
    pairing: Matrix,
}

impl TryFrom<DualPairRepr> for DualPair {
    type Error = Error;
    fn try_from(r: DualPairRepr) -> Result<Self> {
        DualPair::new(r.algebra_a, r.algebra_b, r.pairing)
    }
}

impl From<DualPair> for DualPairRepr {
    fn from(p: DualPair) -> Self {
        DualPairRepr { algebra_a: p.a, algebra_b: p.b, pairing: p.pairing }
    }
}

impl DualPair {
    pub fn new(a: Algebra, b: Algebra, pairing: Matrix) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch(format!("dim A = {} but dim B = {}", a.dim(), b.dim())));
        }
        if pairing.rows() != a.dim() || pairing.cols() != b.dim() {
            return Err(Error::DimensionMismatch("pairing matrix shape".into()));
        }
        Ok(DualPair { a, b, pairing })
    }

    /// The dual space of `A` with the product adjoint to `Δ`, the unit `ε`
    /// and the canonical pairing of dual bases.
    pub fn from_coproduct(a: &Algebra, delta: &Matrix, counit: &[Scalar]) -> Result<Self> {
        let d = a.dim();
        if delta.rows() != d * d || delta.cols() != d || counit.len() != d {
            return Err(Error::DimensionMismatch("coproduct or counit shape".into()));
        }
        let labels = a.labels().iter().map(|l| format!("{l}^")).collect();
        let b = Algebra::from_product_fn(labels, |k, l| delta.row(k * d + l), counit.to_vec(), None)?;
        DualPair::new(a.clone(), b, Matrix::identity(d))
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn b(&self) -> &Algebra {
        &self.b
    }

    pub fn algebra(&self, side: Side) -> &Algebra {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    pub fn pairing(&self) -> &Matrix {
        &self.pairing
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// The same pairing seen from `B`.
    pub fn flipped(&self) -> DualPair {
        DualPair { a: self.b.clone(), b: self.a.clone(), pairing: self.pairing.transpose() }
    }

    pub fn with_algebras(&self, a: Algebra, b: Algebra) -> Result<DualPair> {
        DualPair::new(a, b, self.pairing.clone())
    }

    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        vector::dot(x, &self.pairing.mul_vec(y))
    }

    pub fn check_nondegenerate(&self) -> bool {
        self.pairing.is_invertible()
    }

    fn inverse(&self) -> Result<Matrix> {
        self.pairing.inverse().ok_or_else(|| Error::Precondition("pairing is degenerate".into()))
    }

    /// The coproduct on one side adjoint to the product on the other.
    pub fn induced_coproduct(&self, side: Side) -> Result<Matrix> {
        let q = self.inverse()?;
        Ok(match side {
            // Δ_Aᵀ·(P⊗P) = P·m_B
            Side::A => self.pairing.mul(&self.b.mult_matrix()).mul(&q.kron(&q)).transpose(),
            // (P⊗P)·Δ_B = m_Aᵀ·P
            Side::B => q.kron(&q).mul(&self.a.mult_matrix().transpose()).mul(&self.pairing),
        })
    }

    /// `ε_A(a) = ⟨a, 1_B⟩` and `ε_B(b) = ⟨1_A, b⟩`.
    pub fn induced_counit(&self, side: Side) -> Vec<Scalar> {
        match side {
            Side::A => self.pairing.mul_vec(self.b.unit()),
            Side::B => self.pairing.vec_mul(self.a.unit()),
        }
    }

    /// The adjoint on `B` of a map on `A`: `⟨S a, b⟩ = ⟨a, S' b⟩`.
    pub fn adjoint_to_b(&self, s_a: &Matrix) -> Result<Matrix> {
        Ok(self.inverse()?.mul(&s_a.transpose()).mul(&self.pairing))
    }

    /// The adjoint on `A` of a map on `B`.
    pub fn adjoint_to_a(&self, s_b: &Matrix) -> Result<Matrix> {
        Ok(self.pairing.mul(s_b).mul(&self.inverse()?).transpose())
    }

    /// Matrix of the action of a fixed `actor` on the other algebra.
    pub fn action_matrix(&self, which: Action, actor: &[Scalar]) -> Result<Matrix> {
        let p = &self.pairing;
        let pt = p.transpose();
        Ok(match which {
            Action::AActsLeftOnB => self.inverse()?.mul(&self.a.right_mult_matrix(actor).transpose()).mul(p),
            Action::AActsRightOnB => self.inverse()?.mul(&self.a.left_mult_matrix(actor).transpose()).mul(p),
            Action::BActsRightOnA => {
                let qt = self.inverse()?.transpose();
                qt.mul(&self.b.left_mult_matrix(actor).transpose()).mul(&pt)
            }
            Action::BActsLeftOnA => {
                let qt = self.inverse()?.transpose();
                qt.mul(&self.b.right_mult_matrix(actor).transpose()).mul(&pt)
            }
        })
    }

    /// `x▷y` or `x◁y` in written order.
    pub fn act(&self, which: Action, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let (actor, actee) = match which {
            Action::BActsLeftOnA | Action::AActsLeftOnB => (x, y),
            Action::BActsRightOnA | Action::AActsRightOnB => (y, x),
        };
        Ok(self.action_matrix(which, actor)?.mul_vec(actee))
    }

    /// The antipode forced by the involutions:
    /// `⟨S_A(a)*, b⟩ = conj⟨a, b*⟩` and `⟨a, S_B(b)*⟩ = conj⟨a*, b⟩`.
    pub fn star_antipode(&self, side: Side) -> Result<Matrix> {
        let ma = self.a.star_matrix().ok_or_else(|| Error::Precondition("A has no involution".into()))?;
        let mb = self.b.star_matrix().ok_or_else(|| Error::Precondition("B has no involution".into()))?;
        let q = self.inverse()?;
        Ok(match side {
            Side::A => {
                let z = q.transpose().mul(&self.pairing.mul(mb).conj().transpose());
                ma.mul(&z.conj())
            }
            Side::B => {
                let w = q.mul(&ma.transpose().mul(&self.pairing).conj());
                mb.mul(&w.conj())
            }
        })
    }

    pub fn check_actions(&self) -> Result<ActionReport> {
        let d = self.dim();
        let mut reports = Vec::new();
        for which in Action::ALL {
            let actor_alg = self.algebra(which.actor());
            let mats: Vec<Matrix> =
                (0..d).map(|i| self.action_matrix(which, &actor_alg.basis_vector(i))).collect::<Result<_>>()?;
            let unital = self.action_matrix(which, actor_alg.unit())? == Matrix::identity(d);
            // Columns are the flattened action matrices; injective in the actor.
            let flat = Matrix::from_columns(&mats.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>())?;
            let faithful = flat.rank() == d;
            let mut stacked = mats[0].clone();
            for m in &mats[1..] {
                stacked = stacked.vstack(m)?;
            }
            let nondegenerate = stacked.rank() == d;
            let module_law = (0..d).all(|i| {
                (0..d).all(|j| {
                    let prod = actor_alg.basis_product(i, j);
                    let lhs = self.action_matrix(which, prod).expect("pairing checked");
                    let rhs = match which {
                        Action::BActsLeftOnA | Action::AActsLeftOnB => mats[i].mul(&mats[j]),
                        Action::BActsRightOnA | Action::AActsRightOnB => mats[j].mul(&mats[i]),
                    };
                    lhs == rhs
                })
            });
            reports.push(ActionCheck { unital, faithful, nondegenerate, module_law });
        }
        Ok(ActionReport {
            b_left_on_a: reports[0].clone(),
            b_right_on_a: reports[1].clone(),
            a_left_on_b: reports[2].clone(),
            a_right_on_b: reports[3].clone(),
        })
    }

    /// Pair-level facts that hold without any involution.
    pub fn check_pair(&self) -> Result<PairReport> {
        let nondegenerate = self.check_nondegenerate();
        if !nondegenerate {
            return Ok(PairReport { nondegenerate, ..PairReport::default() });
        }
        let delta_a = self.induced_coproduct(Side::A)?;
        let delta_b = self.induced_coproduct(Side::B)?;
        let eps_a = self.induced_counit(Side::A);
        let eps_b = self.induced_counit(Side::B);
        let rep_a = algebra::validate_coproduct(&self.a, &delta_a, &eps_a)?;
        let rep_b = algebra::validate_coproduct(&self.b, &delta_b, &eps_b)?;
        let counit_b_hom = counit_is_hom(&self.b, &eps_b);
        let counit_a_hom = counit_is_hom(&self.a, &eps_a);
        let reconstructed = DualPair::from_coproduct(&self.a, &delta_a, &eps_a)?;
        let product_roundtrip = reconstructed.induced_coproduct(Side::A)? == delta_a
            && self.b_product_from_delta(&delta_a)? == self.b.mult_matrix();
        Ok(PairReport {
            nondegenerate,
            coassociative_a: rep_a.coassociative,
            coassociative_b: rep_b.coassociative,
            counit_law_a: rep_a.counit_law,
            counit_law_b: rep_b.counit_law,
            delta_unital_a: rep_a.unital,
            delta_unital_b: rep_b.unital,
            counit_hom_a: counit_a_hom,
            counit_hom_b: counit_b_hom,
            unital_iff_counit_hom: rep_a.unital == counit_b_hom && rep_b.unital == counit_a_hom,
            product_roundtrip,
            actions: Some(self.check_actions()?),
        })
    }

    /// Re-derives `m_B` from `Δ_A` through the pairing.
    fn b_product_from_delta(&self, delta_a: &Matrix) -> Result<Matrix> {
        Ok(self.inverse()?.mul(&delta_a.transpose()).mul(&self.pairing.kron(&self.pairing)))
    }

    pub fn check_star_pairing(&self) -> Result<StarPairingReport> {
        let ma = self.a.star_matrix().ok_or_else(|| Error::Precondition("A has no involution".into()))?.clone();
        let mb = self.b.star_matrix().ok_or_else(|| Error::Precondition("B has no involution".into()))?.clone();
        let d = self.dim();
        let s_a = self.star_antipode(Side::A)?;
        let s_b = self.star_antipode(Side::B)?;
        let delta_a = self.induced_coproduct(Side::A)?;
        let delta_b = self.induced_coproduct(Side::B)?;
        let eps_a = self.induced_counit(Side::A);
        let eps_b = self.induced_counit(Side::B);
        let star_map = |alg: &Algebra, delta: &Matrix| {
            let m = alg.star_matrix().expect("involution");
            let mm = m.kron(m);
            (0..d).all(|j| delta.mul_vec(&m.column(j)) == mm.mul_vec(&vector::conj(&delta.column(j))))
        };
        let flip = algebra::flip_matrix(d);
        let coproduct_star_flip = |alg: &Algebra, delta: &Matrix, s: &Matrix| {
            let m = alg.star_matrix().expect("involution");
            let mm = m.kron(m);
            (0..d).all(|j| {
                let lhs = delta.mul_vec(&alg.star(&s.column(j)).expect("involution"));
                let sd = s.kron(s).mul_vec(&delta.column(j));
                let rhs = flip.mul_vec(&mm.mul_vec(&vector::conj(&sd)));
                lhs == rhs
            })
        };
        let counit_star = |alg: &Algebra, eps: &[Scalar], s: &Matrix| {
            (0..d).all(|j| {
                let ej = alg.basis_vector(j);
                algebra::apply(eps, &alg.star(&ej).expect("involution")) == eps[j].conj()
                    && algebra::apply(eps, &s.column(j)) == eps[j]
            })
        };

        let sa = |x: &[Scalar]| s_a.mul_vec(x);
        let sb = |x: &[Scalar]| s_b.mul_vec(x);
        let sta = |x: &[Scalar]| ma.mul_vec(&vector::conj(x));
        let stb = |x: &[Scalar]| mb.mul_vec(&vector::conj(x));
        let act = |w: Action, x: &[Scalar], y: &[Scalar]| self.act(w, x, y).expect("pairing checked");
        let mut action_star = true;
        let mut action_star_antipode = true;
        let mut action_antipode = true;
        for i in 0..d {
            let a = self.a.basis_vector(i);
            for j in 0..d {
                let b = self.b.basis_vector(j);
                // S(b▷a)* = S(a)*◁b*  and  S(a▷b)* = S(b)*◁a*
                action_star &= sta(&sa(&act(Action::BActsLeftOnA, &b, &a)))
                    == act(Action::BActsRightOnA, &sta(&sa(&a)), &stb(&b));
                action_star &= stb(&sb(&act(Action::AActsLeftOnB, &a, &b)))
                    == act(Action::AActsRightOnB, &stb(&sb(&b)), &sta(&a));
                // (a◁b)* = a*◁S(b)*  and  (a▷b)* = S(a)*▷b*
                action_star_antipode &=
                    sta(&act(Action::BActsRightOnA, &a, &b)) == act(Action::BActsRightOnA, &sta(&a), &stb(&sb(&b)));
                action_star_antipode &=
                    stb(&act(Action::AActsLeftOnB, &a, &b)) == act(Action::AActsLeftOnB, &sta(&sa(&a)), &stb(&b));
                // S(S(b)▷a) = S(a)◁b  and  S(S(a)▷b) = S(b)◁a
                action_antipode &=
                    sa(&act(Action::BActsLeftOnA, &sb(&b), &a)) == act(Action::BActsRightOnA, &sa(&a), &b);
                action_antipode &=
                    sb(&act(Action::AActsLeftOnB, &sa(&a), &b)) == act(Action::AActsRightOnB, &sb(&b), &a);
            }
        }
        Ok(StarPairingReport {
            delta_star_a: star_map(&self.a, &delta_a),
            delta_star_b: star_map(&self.b, &delta_b),
            antipode_anti_iso_a: is_anti_isomorphism(&self.a, &s_a),
            antipode_anti_iso_b: is_anti_isomorphism(&self.b, &s_b),
            antipode_flips_a: flips_coproduct(&delta_a, &s_a),
            antipode_flips_b: flips_coproduct(&delta_b, &s_b),
            antipodes_adjoint: s_a.transpose().mul(&self.pairing) == self.pairing.mul(&s_b),
            coproduct_star_flip_a: coproduct_star_flip(&self.a, &delta_a, &s_a),
            coproduct_star_flip_b: coproduct_star_flip(&self.b, &delta_b, &s_b),
            counit_star_a: counit_star(&self.a, &eps_a, &s_a),
            counit_star_b: counit_star(&self.b, &eps_b, &s_b),
            action_star,
            action_star_antipode,
            action_antipode,
        })
    }
}

pub fn counit_is_hom(a: &Algebra, eps: &[Scalar]) -> bool {
    let d = a.dim();
    algebra::apply(eps, a.unit()) == Scalar::from_int(1)
        && (0..d).all(|i| (0..d).all(|j| algebra::apply(eps, a.basis_product(i, j)) == &eps[i] * &eps[j]))
}

/// `S(xy) = S(y)S(x)` on basis pairs, `S(1) = 1`, and `S` bijective.
pub fn is_anti_isomorphism(a: &Algebra, s: &Matrix) -> bool {
    let d = a.dim();
    s.is_invertible()
        && s.mul_vec(a.unit()) == a.unit()
        && (0..d).all(|i| (0..d).all(|j| s.mul_vec(a.basis_product(i, j)) == a.multiply(&s.column(j), &s.column(i))))
}

/// `Δ∘S = ζ∘(S⊗S)∘Δ`.
pub fn flips_coproduct(delta: &Matrix, s: &Matrix) -> bool {
    let d = s.rows();
    delta.mul(s) == algebra::flip_matrix(d).mul(&s.kron(s)).mul(delta)
}

/// First basis index where `Δ` fails to be a `*`-map, if any.
pub fn star_map_failure(a: &Algebra, delta: &Matrix) -> Option<Option<usize>> {
    let m = a.star_matrix()?;
    let mm = m.kron(m);
    Some((0..a.dim()).find(|&j| delta.mul_vec(&m.column(j)) != mm.mul_vec(&vector::conj(&delta.column(j)))))
}

pub fn tensor_pair(p: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    vector::dot(x, &p.kron(p).mul_vec(y))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ActionCheck {
    pub unital: bool,
    pub faithful: bool,
    pub nondegenerate: bool,
    pub module_law: bool,
}

impl ActionCheck {
    pub fn ok(&self) -> bool {
        self.unital && self.faithful && self.nondegenerate && self.module_law
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub b_left_on_a: ActionCheck,
    pub b_right_on_a: ActionCheck,
    pub a_left_on_b: ActionCheck,
    pub a_right_on_b: ActionCheck,
}

impl ActionReport {
    pub fn ok(&self) -> bool {
        self.b_left_on_a.ok() && self.b_right_on_a.ok() && self.a_left_on_b.ok() && self.a_right_on_b.ok()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub nondegenerate: bool,
    pub coassociative_a: bool,
    pub coassociative_b: bool,
    pub counit_law_a: bool,
    pub counit_law_b: bool,
    pub delta_unital_a: bool,
    pub delta_unital_b: bool,
    pub counit_hom_a: bool,
    pub counit_hom_b: bool,
    /// `Δ_A` unital exactly when `ε_B` is multiplicative, and vice versa.
    pub unital_iff_counit_hom: bool,
    pub product_roundtrip: bool,
    pub actions: Option<ActionReport>,
}

impl PairReport {
    pub fn ok(&self) -> bool {
        self.nondegenerate
            && self.coassociative_a
            && self.coassociative_b
            && self.counit_law_a
            && self.counit_law_b
            && self.delta_unital_a
            && self.delta_unital_b
            && self.counit_hom_a
            && self.counit_hom_b
            && self.unital_iff_counit_hom
            && self.product_roundtrip
            && self.actions.as_ref().map_or(true, ActionReport::ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarPairingReport {
    pub delta_star_a: bool,
    pub delta_star_b: bool,
    pub antipode_anti_iso_a: bool,
    pub antipode_anti_iso_b: bool,
    pub antipode_flips_a: bool,
    pub antipode_flips_b: bool,
    pub antipodes_adjoint: bool,
    pub coproduct_star_flip_a: bool,
    pub coproduct_star_flip_b: bool,
    pub counit_star_a: bool,
    pub counit_star_b: bool,
    /// `S(b▷a)* = S(a)*◁b*` and `S(a▷b)* = S(b)*◁a*`.
    pub action_star: bool,
    /// `(a◁b)* = a*◁S(b)*` and `(a▷b)* = S(a)*▷b*`.
    pub action_star_antipode: bool,
    /// `S(S(b)▷a) = S(a)◁b` and `S(S(a)▷b) = S(b)◁a`.
    pub action_antipode: bool,
}

impl StarPairingReport {
    pub fn all(&self) -> bool {
        self.delta_star_a
            && self.delta_star_b
            && self.antipode_anti_iso_a
            && self.antipode_anti_iso_b
            && self.antipode_flips_a
            && self.antipode_flips_b
            && self.antipodes_adjoint
            && self.coproduct_star_flip_a
            && self.coproduct_star_flip_b
            && self.counit_star_a
            && self.counit_star_b
            && self.action_star
            && self.action_star_antipode
            && self.action_antipode
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// F(Z2) paired with CZ2, optionally with a twisted involution on CZ2.
    fn z2_pair(twist: bool) -> DualPair {
        let f = Algebra::from_product_fn(
            names(&["δe", "δg"]),
            |i, j| if i == j { vector::unit(2, i) } else { vector::zeros(2) },
            vector::from_ints(&[1, 1]),
            Some(Matrix::identity(2)),
        )
        .unwrap();
        let star = if twist { Matrix::from_ints(&[&[1, 0], &[0, -1]]) } else { Matrix::identity(2) };
        let g = Algebra::from_product_fn(
            names(&["λe", "λg"]),
            |i, j| vector::unit(2, (i + j) % 2),
            vector::from_ints(&[1, 0]),
            Some(star),
        )
        .unwrap();
        DualPair::new(f, g, Matrix::identity(2)).unwrap()
    }

    #[test]
    fn induced_structure_of_group_pair() {
        let p = z2_pair(false);
        let da = p.induced_coproduct(Side::A).unwrap();
        // Δ(δ_e) = δe⊗δe + δg⊗δg
        assert_eq!(da.column(0), vector::from_ints(&[1, 0, 0, 1]));
        assert_eq!(da.column(1), vector::from_ints(&[0, 1, 1, 0]));
        let db = p.induced_coproduct(Side::B).unwrap();
        assert_eq!(db.column(1), vector::from_ints(&[0, 0, 0, 1]));
        assert_eq!(p.induced_counit(Side::A), vector::from_ints(&[1, 0]));
        assert_eq!(p.induced_counit(Side::B), vector::from_ints(&[1, 1]));
        let r = p.check_pair().unwrap();
        assert!(r.nondegenerate && r.unital_iff_counit_hom && r.product_roundtrip);
        assert!(r.actions.unwrap().ok());
    }

    #[test]
    fn star_pairing_of_group_pair() {
        let r = z2_pair(false).check_star_pairing().unwrap();
        assert!(r.all(), "{r:?}");
    }

    #[test]
    fn twisted_involution_breaks_star_map_and_antipode_together() {
        let r = z2_pair(true).check_star_pairing().unwrap();
        assert!(!r.delta_star_b);
        assert!(!r.antipode_anti_iso_a);
        assert_eq!(r.delta_star_a, r.antipode_anti_iso_b);
    }

    #[test]
    fn action_defining_identities() {
        let p = z2_pair(false);
        let a = vector::from_ints(&[2, -1]);
        let a2 = vector::from_ints(&[1, 3]);
        let b = vector::from_ints(&[-1, 4]);
        let b2 = vector::from_ints(&[5, 1]);
        let aa2 = p.a().multiply(&a, &a2);
        assert_eq!(p.pair(&a, &p.act(Action::AActsLeftOnB, &a2, &b).unwrap()), p.pair(&aa2, &b));
        assert_eq!(p.pair(&a2, &p.act(Action::AActsRightOnB, &b, &a).unwrap()), p.pair(&aa2, &b));
        let bb2 = p.b().multiply(&b, &b2);
        assert_eq!(p.pair(&p.act(Action::BActsRightOnA, &a, &b).unwrap(), &b2), p.pair(&a, &bb2));
        assert_eq!(p.pair(&p.act(Action::BActsLeftOnA, &b2, &a).unwrap(), &b), p.pair(&a, &bb2));
    }

    #[test]
    fn rejects_mismatched_dims() {
        let p = z2_pair(false);
        let one = Algebra::new(names(&["1"]), vec![vec![Scalar::one()]], vec![Scalar::one()], None).unwrap();
        assert!(DualPair::new(p.a().clone(), one, Matrix::identity(2)).is_err());
    }
}
