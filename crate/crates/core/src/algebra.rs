//! Finite-dimensional algebras given by structure constants, linear
//! functionals on them, and coproduct law checks.
//!
//! An element is a coordinate vector in the chosen basis. Linear maps are
//! matrices whose column `j` is the image of `e_j`. A coproduct is a
//! `dim² × dim` matrix whose row `i·dim + k` is the coefficient of
//! `e_i ⊗ e_k`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{vector, Matrix, Scalar, SolutionSet};

/// Covector: `ω(x) = Σ ω_i x_i`.
pub type Functional = Vec<Scalar>;

/// Environment variable consulted by [`seed_from_env`].
pub const SEED_ENV: &str = "FQHG_SEED";
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AlgebraRepr", into = "AlgebraRepr")]
pub struct Algebra {
    labels: Vec<String>,
    structure: Vec<Vec<Scalar>>,
    unit: Vec<Scalar>,
    star: Option<Matrix>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    dim: usize,
    basis: Vec<String>,
    mult: Vec<Vec<Scalar>>,
    unit: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    star: Option<Matrix>,
}

impl TryFrom<AlgebraRepr> for Algebra {
    type Error = Error;
    fn try_from(r: AlgebraRepr) -> Result<Self> {
        if r.basis.len() != r.dim {
            return Err(Error::DimensionMismatch(format!("{} labels for dim {}", r.basis.len(), r.dim)));
        }
        Algebra::new(r.basis, r.mult, r.unit, r.star)
    }
}

impl From<Algebra> for AlgebraRepr {
    fn from(a: Algebra) -> Self {
        AlgebraRepr { dim: a.labels.len(), basis: a.labels, mult: a.structure, unit: a.unit, star: a.star }
    }
}

impl Algebra {
    /// `structure[i·dim + j]` holds the coordinates of `e_i e_j`.
    pub fn new(
        labels: Vec<String>,
        structure: Vec<Vec<Scalar>>,
        unit: Vec<Scalar>,
        star: Option<Matrix>,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::DimensionMismatch("algebra of dimension 0".into()));
        }
        if structure.len() != d * d || structure.iter().any(|v| v.len() != d) {
            return Err(Error::DimensionMismatch(format!("structure constants do not fit dim {d}")));
        }
        if unit.len() != d {
            return Err(Error::DimensionMismatch(format!("unit has length {}, expected {d}", unit.len())));
        }
        if let Some(m) = &star {
            if m.rows() != d || m.cols() != d {
                return Err(Error::DimensionMismatch("involution matrix has the wrong shape".into()));
            }
        }
        Ok(Algebra { labels, structure, unit, star })
    }

    pub fn from_product_fn(
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Vec<Scalar>,
        unit: Vec<Scalar>,
        star: Option<Matrix>,
    ) -> Result<Self> {
        let d = labels.len();
        let structure = (0..d * d).map(|ij| product(ij / d, ij % d)).collect();
        Algebra::new(labels, structure, unit, star)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn star_matrix(&self) -> Option<&Matrix> {
        self.star.as_ref()
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    pub fn with_star(mut self, star: Option<Matrix>) -> Result<Self> {
        if let Some(m) = &star {
            if m.rows() != self.dim() || m.cols() != self.dim() {
                return Err(Error::DimensionMismatch("involution matrix has the wrong shape".into()));
            }
        }
        self.star = star;
        Ok(self)
    }

    pub fn with_unit(mut self, unit: Vec<Scalar>) -> Result<Self> {
        if unit.len() != self.dim() {
            return Err(Error::DimensionMismatch("unit length".into()));
        }
        self.unit = unit;
        Ok(self)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.structure[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.dim(), i)
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        assert!(x.len() == d && y.len() == d, "element length");
        let mut out = vector::zeros(d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in self.basis_product(i, j).iter().enumerate() {
                    if !s.is_zero() {
                        out[k] += &(&c * s);
                    }
                }
            }
        }
        out
    }

    /// `x*`, or `None` when the algebra carries no involution.
    pub fn star(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        self.star.as_ref().map(|m| m.mul_vec(&vector::conj(x)))
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.multiply(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&cols).expect("square")
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.multiply(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(&cols).expect("square")
    }

    /// The `dim × dim²` multiplication map; column `i·dim + j` is `e_i e_j`.
    pub fn mult_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.structure).expect("rectangular")
    }

    /// `A ⊗ B` with basis `a_i ⊗ b_k` at index `i·dim B + k`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (d, e) = (self.dim(), other.dim());
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        let mut structure = Vec::with_capacity(d * d * e * e);
        for ik in 0..d * e {
            let (i, k) = (ik / e, ik % e);
            for jl in 0..d * e {
                let (j, l) = (jl / e, jl % e);
                structure.push(kron_vec(self.basis_product(i, j), other.basis_product(k, l)));
            }
        }
        let star = match (&self.star, &other.star) {
            (Some(m), Some(n)) => Some(m.kron(n)),
            _ => None,
        };
        Algebra { labels, structure, unit: kron_vec(&self.unit, &other.unit), star }
    }

    /// Solves for a two-sided unit; `None` if there is none.
    pub fn find_unit(&self) -> Option<Vec<Scalar>> {
        let d = self.dim();
        // Unknown e; equations e·e_j = e_j and e_j·e = e_j for all j.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..d {
            for k in 0..d {
                rows.push((0..d).map(|i| self.basis_product(i, j)[k].clone()).collect::<Vec<_>>());
                rhs.push(if j == k { Scalar::one() } else { Scalar::zero() });
                rows.push((0..d).map(|i| self.basis_product(j, i)[k].clone()).collect::<Vec<_>>());
                rhs.push(if j == k { Scalar::one() } else { Scalar::zero() });
            }
        }
        let m = Matrix::from_rows(rows).ok()?;
        m.solve_vec(&rhs).ok()?.particular().map(|x| x.column(0))
    }
}

pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(if x.is_zero() || y.is_zero() { Scalar::zero() } else { x * y });
        }
    }
    out
}

pub fn apply(omega: &[Scalar], x: &[Scalar]) -> Scalar {
    vector::dot(omega, x)
}

/// Outcome of [`validate_algebra`]; failures carry basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub associative: bool,
    pub unital: bool,
    pub star_ok: Option<bool>,
    pub abelian: bool,
    pub associativity_failures: Vec<[usize; 3]>,
    pub unit_failures: Vec<usize>,
    pub star_failures: Vec<[usize; 2]>,
    pub noncommuting_pair: Option<[usize; 2]>,
}

impl AlgebraReport {
    pub fn ok(&self) -> bool {
        self.associative && self.unital && self.star_ok != Some(false)
    }
}

pub fn validate_algebra(a: &Algebra) -> AlgebraReport {
    let d = a.dim();
    let mut associativity_failures = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let ij = a.basis_product(i, j).to_vec();
            for k in 0..d {
                let left = a.multiply(&ij, &a.basis_vector(k));
                let right = a.multiply(&a.basis_vector(i), a.basis_product(j, k));
                if left != right {
                    associativity_failures.push([i, j, k]);
                }
            }
        }
    }
    let unit_failures: Vec<usize> = (0..d)
        .filter(|&i| {
            let e = a.basis_vector(i);
            a.multiply(a.unit(), &e) != e || a.multiply(&e, a.unit()) != e
        })
        .collect();
    let mut noncommuting_pair = None;
    'outer: for i in 0..d {
        for j in i + 1..d {
            if a.basis_product(i, j) != a.basis_product(j, i) {
                noncommuting_pair = Some([i, j]);
                break 'outer;
            }
        }
    }
    let mut star_failures = Vec::new();
    let star_ok = a.star_matrix().map(|m| {
        for j in 0..d {
            let ej = a.basis_vector(j);
            if a.star(&a.star(&ej).expect("star")).expect("star") != ej {
                star_failures.push([j, j]);
            }
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = a.star(a.basis_product(i, j)).expect("star");
                let rhs = a.multiply(&m.column(j), &m.column(i));
                if lhs != rhs {
                    star_failures.push([i, j]);
                }
            }
        }
        star_failures.is_empty()
    });
    AlgebraReport {
        associative: associativity_failures.is_empty(),
        unital: unit_failures.is_empty(),
        star_ok,
        abelian: noncommuting_pair.is_none(),
        associativity_failures,
        unit_failures,
        star_failures,
        noncommuting_pair,
    }
}

/// `M[i][j] = ω(e_i e_j)`.
pub fn gram(a: &Algebra, omega: &[Scalar]) -> Matrix {
    let d = a.dim();
    Matrix::from_fn(d, d, |i, j| apply(omega, a.basis_product(i, j)))
}

/// Faithful: `ω(ac) = 0` for all `c` forces `a = 0`.
pub fn is_faithful(a: &Algebra, omega: &[Scalar]) -> bool {
    gram(a, omega).is_invertible()
}

/// Representers of a functional: `f = ω(·c_right) = ω(c_left·)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Represented {
    pub c_right: Vec<Scalar>,
    pub c_left: Vec<Scalar>,
}

pub fn represent_functional(a: &Algebra, omega: &[Scalar], f: &[Scalar]) -> Result<Represented> {
    let m = gram(a, omega);
    let inv = m.inverse().ok_or_else(|| Error::Precondition("ω is not faithful".into()))?;
    let c_right = inv.mul_vec(f);
    let c_left = inv.transpose().mul_vec(f);
    Ok(Represented { c_right, c_left })
}

/// The automorphism σ with `ω(ac) = ω(cσ(a))`.
pub fn modular_automorphism(a: &Algebra, omega: &[Scalar]) -> Result<Matrix> {
    let m = gram(a, omega);
    let inv = m.inverse().ok_or_else(|| Error::Precondition("ω is not faithful".into()))?;
    let sigma = inv.mul(&m.transpose());
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = sigma.mul_vec(a.basis_product(i, j));
            let rhs = a.multiply(&sigma.column(i), &sigma.column(j));
            if lhs != rhs {
                return Err(Error::Postcondition(format!("σ not multiplicative at ({i},{j})")));
            }
        }
    }
    if sigma.vec_mul(omega) != omega {
        return Err(Error::Postcondition("ω∘σ ≠ ω".into()));
    }
    Ok(sigma)
}

/// `ω(e_i* e_j)` as a matrix.
pub fn star_gram(a: &Algebra, omega: &[Scalar]) -> Result<Matrix> {
    let m = a.star_matrix().ok_or_else(|| Error::Precondition("algebra has no involution".into()))?;
    let d = a.dim();
    Ok(Matrix::from_fn(d, d, |i, j| apply(omega, &a.multiply(&m.column(i), &a.basis_vector(j)))))
}

/// `ω(x*x) ≥ 0` for all `x`.
pub fn is_positive(a: &Algebra, omega: &[Scalar]) -> Result<bool> {
    let g = star_gram(a, omega)?;
    if !g.is_hermitian() {
        return Ok(false);
    }
    g.is_psd_hermitian()
}

/// Matrix of `(ι⊗ω)Δ`, a `dim × dim` map.
pub fn contract_right(delta: &Matrix, omega: &[Scalar]) -> Matrix {
    let d = omega.len();
    Matrix::identity(d).kron(&Matrix::row_vector(omega)).mul(delta)
}

/// Matrix of `(ω⊗ι)Δ`.
pub fn contract_left(delta: &Matrix, omega: &[Scalar]) -> Matrix {
    let d = omega.len();
    Matrix::row_vector(omega).kron(&Matrix::identity(d)).mul(delta)
}

/// The flip `ζ(x⊗y) = y⊗x` on `A⊗A`.
pub fn flip_matrix(d: usize) -> Matrix {
    let mut z = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for k in 0..d {
            z.set(k * d + i, i * d + k, Scalar::one());
        }
    }
    z
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoproductReport {
    pub coassociative: bool,
    pub counit_law: bool,
    pub unital: bool,
    pub star_map: Option<bool>,
    pub homomorphism: bool,
    pub coabelian: bool,
    pub coassociativity_failure: Option<usize>,
    pub counit_failure: Option<usize>,
    pub star_failure: Option<usize>,
    pub homomorphism_failure: Option<[usize; 2]>,
}

fn check_shape(a: &Algebra, delta: &Matrix) -> Result<()> {
    let d = a.dim();
    if delta.rows() != d * d || delta.cols() != d {
        return Err(Error::DimensionMismatch(format!(
            "coproduct is {}x{}, expected {}x{d}",
            delta.rows(),
            delta.cols(),
            d * d
        )));
    }
    Ok(())
}

fn first_differing_column(x: &Matrix, y: &Matrix) -> Option<usize> {
    (0..x.cols()).find(|&j| x.column(j) != y.column(j))
}

pub fn validate_coproduct(a: &Algebra, delta: &Matrix, counit: &[Scalar]) -> Result<CoproductReport> {
    check_shape(a, delta)?;
    let d = a.dim();
    if counit.len() != d {
        return Err(Error::DimensionMismatch("counit length".into()));
    }
    let id = Matrix::identity(d);
    let coassoc_l = delta_tensor_id(delta, d).mul(delta);
    let coassoc_r = id_tensor_delta(delta, d).mul(delta);
    let coassociativity_failure = first_differing_column(&coassoc_l, &coassoc_r);

    let eps = Matrix::row_vector(counit);
    let c1 = eps.kron(&id).mul(delta);
    let c2 = id.kron(&eps).mul(delta);
    let counit_failure = first_differing_column(&c1, &id).or_else(|| first_differing_column(&c2, &id));

    let unital = delta.mul_vec(a.unit()) == kron_vec(a.unit(), a.unit());

    let star_failure_and_ok = a.star_matrix().map(|m| {
        let mm = m.kron(m);
        let fail = (0..d).find(|&j| delta.mul_vec(&m.column(j)) != mm.mul_vec(&vector::conj(&delta.column(j))));
        (fail.is_none(), fail)
    });

    let aa = a.tensor(a);
    let mut homomorphism_failure = None;
    'outer: for i in 0..d {
        let di = delta.column(i);
        for j in 0..d {
            let lhs = delta.mul_vec(a.basis_product(i, j));
            let rhs = aa.multiply(&di, &delta.column(j));
            if lhs != rhs {
                homomorphism_failure = Some([i, j]);
                break 'outer;
            }
        }
    }
    let coabelian = flip_matrix(d).mul(delta) == *delta;
    Ok(CoproductReport {
        coassociative: coassociativity_failure.is_none(),
        counit_law: counit_failure.is_none(),
        unital,
        star_map: star_failure_and_ok.as_ref().map(|s| s.0),
        homomorphism: homomorphism_failure.is_none(),
        coabelian,
        coassociativity_failure,
        counit_failure,
        star_failure: star_failure_and_ok.and_then(|s| s.1),
        homomorphism_failure,
    })
}

/// `Δ⊗ι` as a `dim³ × dim²` matrix.
pub fn delta_tensor_id(delta: &Matrix, d: usize) -> Matrix {
    delta.kron(&Matrix::identity(d))
}

/// `ι⊗Δ` as a `dim³ × dim²` matrix.
pub fn id_tensor_delta(delta: &Matrix, d: usize) -> Matrix {
    Matrix::identity(d).kron(delta)
}

/// Every functional satisfying both counit laws.
pub fn solve_counit(a: &Algebra, delta: &Matrix) -> Result<SolutionSet> {
    check_shape(a, delta)?;
    let d = a.dim();
    // (ε⊗ι)Δ(e_j) = e_j: Σ_s ε_s Δ[s·d + r][j] = δ_rj; similarly on the right.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..d {
        for r in 0..d {
            let target = if r == j { Scalar::one() } else { Scalar::zero() };
            rows.push((0..d).map(|s| delta.get(s * d + r, j).clone()).collect::<Vec<_>>());
            rhs.push(target.clone());
            rows.push((0..d).map(|s| delta.get(r * d + s, j).clone()).collect::<Vec<_>>());
            rhs.push(target);
        }
    }
    Matrix::from_rows(rows)?.solve_vec(&rhs)
}

/// Checks that `t` is an algebra and coalgebra isomorphism `A → B`.
pub fn check_isomorphism(a: &Algebra, delta_a: &Matrix, b: &Algebra, delta_b: &Matrix, t: &Matrix) -> bool {
    let d = a.dim();
    if b.dim() != d || t.rows() != d || t.cols() != d || !t.is_invertible() {
        return false;
    }
    let mult_ok = (0..d).all(|i| {
        (0..d).all(|j| t.mul_vec(a.basis_product(i, j)) == b.multiply(&t.column(i), &t.column(j)))
    });
    let unit_ok = t.mul_vec(a.unit()) == b.unit();
    let delta_ok = t.kron(t).mul(delta_a) == delta_b.mul(t);
    mult_ok && unit_ok && delta_ok
}

/// Reads [`SEED_ENV`], falling back to [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

/// Random covector with Gaussian-integer entries in `[-3, 3] + i[-3, 3]`.
pub fn random_gaussian_vector(rng: &mut ChaCha8Rng, d: usize, real: bool) -> Vec<Scalar> {
    (0..d)
        .map(|_| {
            let re = rng.gen_range(-3..=3);
            let im = if real { 0 } else { rng.gen_range(-3..=3) };
            Scalar::gaussian(re, im)
        })
        .collect()
}

/// Samples seeded random functionals until one is faithful. `None` is
/// inconclusive, not a proof that no faithful functional exists.
pub fn find_faithful_functional(a: &Algebra, budget: usize, seed: u64) -> Option<Functional> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..budget).map(|_| random_gaussian_vector(&mut rng, a.dim(), false)).find(|w| is_faithful(a, w))
}

/// Several distinct faithful functionals from one seeded stream.
pub fn faithful_functionals(a: &Algebra, count: usize, budget: usize, seed: u64) -> Vec<Functional> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Functional> = Vec::new();
    for _ in 0..budget {
        if out.len() == count {
            break;
        }
        let w = random_gaussian_vector(&mut rng, a.dim(), false);
        if is_faithful(a, &w) && !out.contains(&w) {
            out.push(w);
        }
    }
    out
}
