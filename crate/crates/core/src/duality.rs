//! Finite quantum hypergroups, their certificates, the Fourier transform
//! and the dual structure on the paired algebra.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, Algebra, Functional};
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Scalar};
use crate::integrals::{self, AntipodeStatus, Hand};
use crate::pairing::{self, Action, DualPair, Side};

/// A certified finite quantum hypergroup: a unital algebra with a
/// coassociative, counital, unital coproduct and a faithful left integral
/// whose antipode is a coproduct-flipping anti-isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fqh {
    pub algebra: Algebra,
    pub coproduct: Matrix,
    pub counit: Functional,
    pub integral: Functional,
    pub antipode: Matrix,
}

impl Fqh {
    /// Runs [`verify_fqh`] and packages the result when every field passes.
    pub fn certify(algebra: Algebra, coproduct: Matrix, counit: Functional, integral: Functional) -> Result<Fqh> {
        let cert = verify_fqh(&algebra, &coproduct, &counit, &integral)?;
        if !cert.passed() {
            return Err(Error::Precondition(format!("not a finite quantum hypergroup: {}", cert.failures().join(", "))));
        }
        let antipode = cert.antipode.clone().expect("unique antipode");
        Ok(Fqh { algebra, coproduct, counit, integral, antipode })
    }

    pub fn certificate(&self) -> Result<FqhCertificate> {
        verify_fqh(&self.algebra, &self.coproduct, &self.counit, &self.integral)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub algebra_ok: Option<Vec<usize>>,
    pub coassoc: Option<Vec<usize>>,
    pub counit_law: Option<Vec<usize>>,
    pub counit_hom: Option<Vec<usize>>,
    pub integral_equation: Option<Vec<usize>>,
    pub antipode_anti_iso: Option<Vec<usize>>,
    pub antipode_flips: Option<Vec<usize>>,
    pub star_ok: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FqhCertificate {
    pub schema: &'static str,
    pub algebra_ok: bool,
    pub coassoc: bool,
    pub counit_law: bool,
    pub counit_hom: bool,
    pub delta_unital: bool,
    pub integral_faithful: bool,
    pub integral_equation: bool,
    pub antipode_anti_iso: bool,
    pub antipode_flips: bool,
    /// `None` when the algebra carries no involution.
    pub star_ok: Option<bool>,
    /// Informational: left invariance of the functional.
    pub left_invariant: bool,
    pub antipode_status: AntipodeStatus,
    pub witnesses: Witnesses,
    pub antipode: Option<Matrix>,
}

impl FqhCertificate {
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let fields = [
            ("algebra_ok", self.algebra_ok),
            ("coassoc", self.coassoc),
            ("counit_law", self.counit_law),
            ("counit_hom", self.counit_hom),
            ("delta_unital", self.delta_unital),
            ("integral_faithful", self.integral_faithful),
            ("integral_equation", self.integral_equation),
            ("antipode_anti_iso", self.antipode_anti_iso),
            ("antipode_flips", self.antipode_flips),
            ("star_ok", self.star_ok != Some(false)),
        ];
        fields.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect()
    }
}

fn anti_iso_witness(a: &Algebra, s: &Matrix) -> Option<Vec<usize>> {
    if !s.is_invertible() || s.mul_vec(a.unit()) != a.unit() {
        return Some(vec![]);
    }
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            if s.mul_vec(a.basis_product(i, j)) != a.multiply(&s.column(j), &s.column(i)) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

pub fn verify_fqh(a: &Algebra, delta: &Matrix, eps: &[Scalar], phi: &[Scalar]) -> Result<FqhCertificate> {
    let d = a.dim();
    if phi.len() != d {
        return Err(Error::DimensionMismatch("integral length".into()));
    }
    let alg = algebra::validate_algebra(a);
    let co = algebra::validate_coproduct(a, delta, eps)?;
    let mut w = Witnesses::default();
    if !alg.ok() {
        w.algebra_ok = Some(
            alg.associativity_failures
                .first()
                .map(|t| t.to_vec())
                .or_else(|| alg.unit_failures.first().map(|&i| vec![i]))
                .or_else(|| alg.star_failures.first().map(|p| p.to_vec()))
                .unwrap_or_default(),
        );
    }
    w.coassoc = co.coassociativity_failure.map(|j| vec![j]);
    w.counit_law = co.counit_failure.map(|j| vec![j]);
    let counit_hom = pairing::counit_is_hom(a, eps);
    if !counit_hom {
        let pair = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .find(|&(i, j)| algebra::apply(eps, a.basis_product(i, j)) != &eps[i] * &eps[j]);
        w.counit_hom = Some(pair.map(|(i, j)| vec![i, j]).unwrap_or_default());
    }
    let integral_faithful = algebra::is_faithful(a, phi);
    let left_invariant = integrals::is_invariant(a, delta, phi, Hand::Left)?;
    let solved = integrals::solve_antipode(a, delta, phi, Hand::Left)?;
    let integral_equation = solved.status == AntipodeStatus::Unique;
    if !integral_equation {
        w.integral_equation = Some(solved.witness.map(|p| p.to_vec()).unwrap_or_default());
    }
    let (antipode_anti_iso, antipode_flips, antipode) = match (&solved.status, &solved.s) {
        (AntipodeStatus::Unique, Some(s)) => {
            let anti = anti_iso_witness(a, s);
            let flips = pairing::flips_coproduct(delta, s);
            if !flips {
                let flip = algebra::flip_matrix(d).mul(&s.kron(s)).mul(delta);
                let lhs = delta.mul(s);
                w.antipode_flips = (0..d).find(|&j| lhs.column(j) != flip.column(j)).map(|j| vec![j]);
            }
            w.antipode_anti_iso = anti.clone();
            (anti.is_none(), flips, Some(s.clone()))
        }
        _ => (false, false, None),
    };
    let star_ok = pairing::star_map_failure(a, delta).map(|f| {
        w.star_ok = f.map(|j| vec![j]);
        f.is_none()
    });
    Ok(FqhCertificate {
        schema: crate::SCHEMA,
        algebra_ok: alg.ok(),
        coassoc: co.coassociative,
        counit_law: co.counit_law,
        counit_hom,
        delta_unital: co.unital,
        integral_faithful,
        integral_equation,
        antipode_anti_iso,
        antipode_flips,
        star_ok,
        left_invariant,
        antipode_status: solved.status,
        witnesses: w,
        antipode,
    })
}

/// `F = P⁻¹·G_φ`: the coordinates of `φ(·c)` as an element of `B`.
pub fn fourier_matrix(pair: &DualPair, phi: &[Scalar]) -> Result<Matrix> {
    let q = pair.pairing().inverse().ok_or_else(|| Error::Precondition("pairing is degenerate".into()))?;
    Ok(q.mul(&algebra::gram(pair.a(), phi)))
}

/// `b = φ(·c)`, meaning `⟨a, b⟩ = φ(ac)` for all `a`.
pub fn fourier(pair: &DualPair, phi: &[Scalar], c: &[Scalar]) -> Result<Vec<Scalar>> {
    Ok(fourier_matrix(pair, phi)?.mul_vec(c))
}

/// Solves `φ(·c) = b` for `c`; needs `φ` faithful.
pub fn inverse_fourier(pair: &DualPair, phi: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
    let inv = fourier_matrix(pair, phi)?.inverse().ok_or_else(|| Error::Precondition("φ is not faithful".into()))?;
    Ok(inv.mul_vec(b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualIntegral {
    /// `ψ(φ(·c)) = ε(c)`.
    pub psi: Functional,
    /// The adjoint of `S`, the antipode belonging to `ψ`.
    pub antipode_b: Matrix,
}

fn left_integral_preconditions(pair: &DualPair, phi: &[Scalar], s: &Matrix) -> Result<Matrix> {
    let a = pair.a();
    let delta = pair.induced_coproduct(Side::A)?;
    if !algebra::is_faithful(a, phi) {
        return Err(Error::Precondition("φ is not faithful".into()));
    }
    if !integrals::verify_integral(a, &delta, phi, s, Hand::Left, None)? {
        return Err(Error::Precondition("φ is not a left integral with antipode S".into()));
    }
    if !pairing::is_anti_isomorphism(a, s) {
        return Err(Error::Precondition("S is not an anti-isomorphism".into()));
    }
    Ok(delta)
}

pub fn dual_right_integral(pair: &DualPair, phi: &[Scalar], s: &Matrix) -> Result<DualIntegral> {
    left_integral_preconditions(pair, phi, s)?;
    let eps = pair.induced_counit(Side::A);
    let f_inv = fourier_matrix(pair, phi)?.inverse().expect("faithful");
    let psi = f_inv.vec_mul(&eps);
    let antipode_b = pair.adjoint_to_b(s)?;
    let delta_b = pair.induced_coproduct(Side::B)?;
    if !algebra::is_faithful(pair.b(), &psi)
        || !integrals::verify_integral(pair.b(), &delta_b, &psi, &antipode_b, Hand::Right, None)?
    {
        return Err(Error::Postcondition("ψ is not a faithful right integral".into()));
    }
    Ok(DualIntegral { psi, antipode_b })
}

/// `fourier(c◁S⁻¹(d)) = d·fourier(c)` on basis elements.
pub fn check_fourier_module(pair: &DualPair, phi: &[Scalar], s: &Matrix) -> Result<bool> {
    let s_b = pair.adjoint_to_b(s)?;
    let s_b_inv = s_b.inverse().ok_or_else(|| Error::Precondition("S is not invertible".into()))?;
    let f = fourier_matrix(pair, phi)?;
    let d = pair.dim();
    for ci in 0..d {
        let c = pair.a().basis_vector(ci);
        for di in 0..d {
            let dv = pair.b().basis_vector(di);
            let lhs = f.mul_vec(&pair.act(Action::BActsRightOnA, &c, &s_b_inv.mul_vec(&dv))?);
            let rhs = pair.b().multiply(&dv, &f.mul_vec(&c));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `ψ(b'·φ(·c)) = ⟨S⁻¹(c), b'⟩` on basis elements.
pub fn check_inverse_transform(pair: &DualPair, phi: &[Scalar], s: &Matrix) -> Result<bool> {
    let dual = dual_right_integral(pair, phi, s)?;
    let s_inv = s.inverse().expect("anti-isomorphism");
    let f = fourier_matrix(pair, phi)?;
    let d = pair.dim();
    for ci in 0..d {
        let c = pair.a().basis_vector(ci);
        let b = f.mul_vec(&c);
        let sc = s_inv.mul_vec(&c);
        for bi in 0..d {
            let bp = pair.b().basis_vector(bi);
            if algebra::apply(&dual.psi, &pair.b().multiply(&bp, &b)) != pair.pair(&sc, &bp) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidualityReport {
    pub psi_right_integral: bool,
    /// `ψ∘S_B` is a left integral on `B` with antipode `S_B`.
    pub composed_left_integral: bool,
    /// Dualizing `ψ∘S_B` back and composing with `S` gives `φ`.
    pub returns_phi: bool,
    /// The mirrored construction `φ'(ψ(d·)) = ε_B(d)` gives `φ`.
    pub mirrored_returns_phi: bool,
}

pub fn check_biduality(pair: &DualPair, phi: &[Scalar], s: &Matrix) -> Result<BidualityReport> {
    let dual = dual_right_integral(pair, phi, s)?;
    let b = pair.b();
    let delta_b = pair.induced_coproduct(Side::B)?;
    let psi_right_integral = integrals::verify_integral(b, &delta_b, &dual.psi, &dual.antipode_b, Hand::Right, None)?;
    let psi_left = dual.antipode_b.vec_mul(&dual.psi);
    let composed_left_integral =
        integrals::verify_integral(b, &delta_b, &psi_left, &dual.antipode_b, Hand::Left, None)?;
    let back = dual_right_integral(&pair.flipped(), &psi_left, &dual.antipode_b)?;
    let returns_phi = back.antipode_b == *s && s.vec_mul(&back.psi) == phi;

    // a = ψ(d·) means ⟨a, b'⟩ = ψ(d b'); then φ'(a) = ε_B(d).
    let d = pair.dim();
    let eps_b = pair.induced_counit(Side::B);
    let psi_gram = algebra::gram(b, &dual.psi);
    let q = pair.pairing().inverse().expect("nondegenerate");
    // Column k holds the coordinates in A of ψ(f_k ·).
    let to_a = q.transpose().mul(&psi_gram.transpose());
    let inv = to_a.inverse().ok_or_else(|| Error::Postcondition("ψ is not faithful".into()))?;
    let mirrored: Functional = (0..d).map(|i| algebra::apply(&eps_b, &inv.column(i))).collect();
    let mirrored_returns_phi = mirrored == phi;
    Ok(BidualityReport { psi_right_integral, composed_left_integral, returns_phi, mirrored_returns_phi })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlancherelReport {
    pub basis_ok: bool,
    pub random_ok: bool,
    pub samples: usize,
    /// `Some(true)` when `φ` is positive and so is `ψ`.
    pub positivity_propagates: Option<bool>,
}

/// `ψ(b*b) = conj φ(a*a)` for `b = φ(·a)`.
pub fn check_plancherel(
    pair: &DualPair,
    phi: &[Scalar],
    psi: &[Scalar],
    samples: usize,
    seed: u64,
) -> Result<PlancherelReport> {
    let a = pair.a();
    let b = pair.b();
    if !a.has_star() || !b.has_star() {
        return Err(Error::Precondition("both algebras need an involution".into()));
    }
    let f = fourier_matrix(pair, phi)?;
    let holds = |x: &[Scalar]| {
        let y = f.mul_vec(x);
        let lhs = algebra::apply(psi, &b.multiply(&b.star(&y).expect("star"), &y));
        let rhs = algebra::apply(phi, &a.multiply(&a.star(x).expect("star"), x)).conj();
        lhs == rhs
    };
    let basis_ok = (0..a.dim()).all(|i| holds(&a.basis_vector(i)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_ok = (0..samples).all(|_| holds(&algebra::random_gaussian_vector(&mut rng, a.dim(), false)));
    let positivity_propagates = if algebra::is_positive(a, phi)? { Some(algebra::is_positive(b, psi)?) } else { None };
    Ok(PlancherelReport { basis_ok, random_ok, samples, positivity_propagates })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "reason")]
pub enum InvolutionOutcome {
    Constructed,
    NotApplicable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFqh {
    pub fqh: Fqh,
    /// The pair seen from the dual side, carrying the dual involution.
    pub pair: DualPair,
    pub involution: InvolutionOutcome,
}

/// The involution on `B` defined by `⟨a, b*⟩ = conj⟨S(a)*, b⟩`.
pub fn dual_involution(pair: &DualPair, s: &Matrix) -> Result<Matrix> {
    let ma = pair.a().star_matrix().ok_or_else(|| Error::Precondition("A has no involution".into()))?;
    let q = pair.pairing().inverse().ok_or_else(|| Error::Precondition("pairing is degenerate".into()))?;
    let big_q = ma.mul(&s.conj()).transpose().mul(pair.pairing());
    Ok(q.mul(&big_q.conj()))
}

/// The dual finite quantum hypergroup on `B`.
pub fn dual_fqh(pair: &DualPair, f: &Fqh) -> Result<DualFqh> {
    let cert = f.certificate()?;
    if !cert.passed() {
        return Err(Error::Precondition(format!("input is not an FQH: {}", cert.failures().join(", "))));
    }
    if pair.a() != &f.algebra {
        return Err(Error::Precondition("pair and FQH use different algebras".into()));
    }
    if !pair.check_nondegenerate() {
        return Err(Error::Precondition("pairing is degenerate".into()));
    }
    if pair.induced_coproduct(Side::A)? != f.coproduct || pair.induced_counit(Side::A) != f.counit {
        return Err(Error::Precondition("pairing is not compatible with the coproduct".into()));
    }
    let dual = dual_right_integral(pair, &f.integral, &f.antipode)?;
    let psi_left = dual.antipode_b.vec_mul(&dual.psi);
    let (b, involution) = if f.algebra.has_star() {
        let m = dual_involution(pair, &f.antipode)?;
        (pair.b().clone().with_star(Some(m))?, InvolutionOutcome::Constructed)
    } else {
        (pair.b().clone().with_star(None)?, InvolutionOutcome::NotApplicable("A has no involution".into()))
    };
    let new_pair = DualPair::new(b.clone(), f.algebra.clone(), pair.pairing().transpose())?;
    let delta_b = new_pair.induced_coproduct(Side::A)?;
    let eps_b = new_pair.induced_counit(Side::A);
    let fqh = Fqh::certify(b, delta_b, eps_b, psi_left)
        .map_err(|e| Error::Postcondition(format!("dual structure failed verification: {e}")))?;
    if fqh.antipode != dual.antipode_b {
        return Err(Error::Postcondition("solved dual antipode differs from the adjoint of S".into()));
    }
    Ok(DualFqh { fqh, pair: new_pair, involution })
}

/// Dimension of the left-invariant functionals; one on every FQH.
pub fn invariance_dimension(f: &Fqh) -> Result<usize> {
    Ok(integrals::invariant_functionals(&f.algebra, &f.coproduct, Hand::Left)?.len())
}
