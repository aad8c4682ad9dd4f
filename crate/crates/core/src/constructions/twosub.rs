use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::Example;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactnum::{vector, Matrix, Scalar};
use crate::groups::{FiniteGroup, Subgroup};
use crate::pairing::{DualPair, Side};

/// The pairs `(h, k)` with `hk ∈ KH`, with `hk = (h▷k)(h◁k)`.
///
/// Pairs are listed lexicographically by `(h, k)` index. Functions on `Ω`
/// are total on `Ω` only and vanish outside it.
#[derive(Clone, Debug)]
pub struct Omega {
    pub h: FiniteGroup,
    pub k: FiniteGroup,
    pub pairs: Vec<(usize, usize)>,
    /// `(h◁k, h▷k)` for each pair.
    pub actions: Vec<(usize, usize)>,
    /// `hk = (h▷k)(h◁k)` inside the ambient group, where there is one.
    pub factorization: Option<bool>,
    index: BTreeMap<(usize, usize), usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaReport {
    pub actions_unital: bool,
    pub cocycle_left: bool,
    pub cocycle_right: bool,
    pub inverse_law: bool,
    pub closed_under_inverses: bool,
    pub factorization: Option<bool>,
    /// `Ω = H×K`.
    pub matched: bool,
}

impl OmegaReport {
    pub fn ok(&self) -> bool {
        self.actions_unital
            && self.cocycle_left
            && self.cocycle_right
            && self.inverse_law
            && self.closed_under_inverses
            && self.factorization != Some(false)
    }
}

impl Omega {
    fn build(h: FiniteGroup, k: FiniteGroup, entries: Vec<((usize, usize), (usize, usize))>, factorization: Option<bool>) -> Self {
        let mut entries = entries;
        entries.sort();
        let pairs: Vec<_> = entries.iter().map(|e| e.0).collect();
        let actions = entries.iter().map(|e| e.1).collect();
        let index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Omega { h, k, pairs, actions, factorization, index }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn index(&self, h: usize, k: usize) -> Option<usize> {
        self.index.get(&(h, k)).copied()
    }

    /// `h◁k`
    pub fn right(&self, i: usize) -> usize {
        self.actions[i].0
    }

    /// `h▷k`
    pub fn left(&self, i: usize) -> usize {
        self.actions[i].1
    }

    fn lookup_right(&self, h: usize, k: usize) -> Option<usize> {
        self.index(h, k).map(|i| self.right(i))
    }

    fn lookup_left(&self, h: usize, k: usize) -> Option<usize> {
        self.index(h, k).map(|i| self.left(i))
    }

    /// `((h◁k)⁻¹, (h▷k)⁻¹)`
    pub fn antipode_point(&self, i: usize) -> Option<usize> {
        self.index(self.h.inv(self.right(i)), self.k.inv(self.left(i)))
    }

    pub fn label(&self, i: usize) -> String {
        let (h, k) = self.pairs[i];
        format!("{},{}", self.h.label(h), self.k.label(k))
    }

    pub fn validate(&self) -> OmegaReport {
        let (hg, kg) = (&self.h, &self.k);
        let (he, ke) = (hg.identity(), kg.identity());
        let actions_unital = (0..hg.order()).all(|h| self.lookup_left(h, ke) == Some(ke) && self.lookup_right(h, ke) == Some(h))
            && (0..kg.order()).all(|k| self.lookup_right(he, k) == Some(he) && self.lookup_left(he, k) == Some(k));

        let mut cocycle_left = true;
        let mut cocycle_right = true;
        for (i, &(h, k)) in self.pairs.iter().enumerate() {
            for k2 in 0..kg.order() {
                let lhs = self.lookup_left(h, kg.op(k, k2));
                let rhs = self.lookup_left(self.right(i), k2).map(|x| kg.op(self.left(i), x));
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    cocycle_left &= l == r;
                }
            }
            for h2 in 0..hg.order() {
                let lhs = self.lookup_right(hg.op(h2, h), k);
                let rhs = self.lookup_right(h2, self.left(i)).map(|x| hg.op(x, self.right(i)));
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    cocycle_right &= l == r;
                }
            }
        }
        let inverse_law = (0..self.len()).all(|i| {
            let (h, k) = self.pairs[i];
            match self.antipode_point(i) {
                Some(j) => self.left(j) == kg.inv(k) && self.right(j) == hg.inv(h),
                None => false,
            }
        });
        let closed_under_inverses = (0..self.len()).all(|i| {
            let (h, k) = self.pairs[i];
            self.index(self.right(i), kg.inv(k)).is_some() && self.index(hg.inv(h), self.left(i)).is_some()
        });
        OmegaReport {
            actions_unital,
            cocycle_left,
            cocycle_right,
            inverse_law,
            closed_under_inverses,
            factorization: self.factorization,
            matched: self.len() == hg.order() * kg.order(),
        }
    }

    /// Whether `Ω` only contains the pairs `(h, e)` and `(e, k)`.
    pub fn is_free(&self) -> bool {
        let (he, ke) = (self.h.identity(), self.k.identity());
        self.pairs.iter().all(|&(h, k)| h == he || k == ke)
    }
}

/// `Ω` for subgroups `H`, `K` of `G` with `H∩K = {e}`.
pub fn omega_from_group(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<Omega> {
    let products = g.set_products(h, k);
    if products.intersection != vec![g.identity()] {
        return Err(Error::Precondition("H∩K must be {e}".into()));
    }
    let (hg, h_emb) = g.restrict(h);
    let (kg, k_emb) = g.restrict(k);
    let mut entries = Vec::new();
    for (hi, &hx) in h_emb.iter().enumerate() {
        for (ki, &kx) in k_emb.iter().enumerate() {
            let x = g.op(hx, kx);
            let mut found = None;
            for (kj, &ky) in k_emb.iter().enumerate() {
                for (hj, &hy) in h_emb.iter().enumerate() {
                    if g.op(ky, hy) == x {
                        found = Some((hj, kj));
                    }
                }
            }
            if let Some(act) = found {
                entries.push(((hi, ki), act));
            }
        }
    }
    let factorization = entries.iter().all(|&((hi, ki), (hj, kj))| {
        g.op(h_emb[hi], k_emb[ki]) == g.op(k_emb[kj], h_emb[hj])
    });
    Ok(Omega::build(hg, kg, entries, Some(factorization)))
}

fn relabel(g: &FiniteGroup, letter: &str) -> Result<FiniteGroup> {
    let e = g.identity();
    let labels = (0..g.order())
        .map(|x| match x {
            _ if x == e => "e".to_string(),
            _ if g.order() == 2 => letter.to_string(),
            _ => format!("{letter}{}", if x < e { x + 1 } else { x }),
        })
        .collect();
    let table = (0..g.order()).map(|a| (0..g.order()).map(|b| g.op(a, b)).collect()).collect();
    FiniteGroup::from_table(labels, table)
}

/// `Ω = {(h, e)} ∪ {(e, k)}` with trivial actions, as for the free product
/// of `H` and `K`. Elements are relabelled `e, h, …` and `e, k, …`.
pub fn omega_free(h: &FiniteGroup, k: &FiniteGroup) -> Result<Omega> {
    let hg = relabel(h, "h")?;
    let kg = relabel(k, "k")?;
    let (he, ke) = (hg.identity(), kg.identity());
    let mut entries = Vec::new();
    for x in 0..hg.order() {
        entries.push(((x, ke), (x, ke)));
    }
    for y in 0..kg.order() {
        if y != ke {
            entries.push(((he, y), (he, y)));
        }
    }
    Ok(Omega::build(hg, kg, entries, None))
}

fn permutation(n: usize, target: impl Fn(usize) -> Option<usize>) -> Matrix {
    // Column a holds the indicator of {x : target(x) = a}.
    let mut m = Matrix::zeros(n, n);
    for x in 0..n {
        if let Some(a) = target(x) {
            m.set(x, a, Scalar::one());
        }
    }
    m
}

/// `C(Ω)` and `C(Ω̂)` in the basis of point masses `δ_(h,k)`, paired by
/// `⟨f, g⟩ = Σ_Ω f·g`.
pub fn twosub_pair(omega: &Omega) -> Result<Example> {
    let report = omega.validate();
    if !report.ok() {
        return Err(Error::Precondition(format!("Ω fails its laws: {report:?}")));
    }
    let n = omega.len();
    let (hg, kg) = (&omega.h, &omega.k);
    let (he, ke) = (hg.identity(), kg.identity());
    let at = |target: Option<usize>| target.map(|t| vector::unit(n, t)).unwrap_or_else(|| vector::zeros(n));

    // (h1,k1)(h2,k2) = (h1,k1k2) if h1◁k1 = h2
    let a = Algebra::from_product_fn(
        (0..n).map(|i| format!("δ[{}]", omega.label(i))).collect(),
        |i, j| {
            let ((h1, k1), (h2, k2)) = (omega.pairs[i], omega.pairs[j]);
            at((omega.right(i) == h2).then(|| omega.index(h1, kg.op(k1, k2))).flatten())
        },
        (0..n).map(|i| if omega.pairs[i].1 == ke { Scalar::one() } else { Scalar::zero() }).collect(),
        Some(permutation(n, |i| omega.index(omega.right(i), kg.inv(omega.pairs[i].1)))),
    )?;
    // (h1,k1)(h2,k2) = (h1h2,k2) if k1 = h2▷k2
    let b = Algebra::from_product_fn(
        (0..n).map(|i| format!("δ̂[{}]", omega.label(i))).collect(),
        |i, j| {
            let ((h1, k1), (h2, k2)) = (omega.pairs[i], omega.pairs[j]);
            at((omega.left(j) == k1).then(|| omega.index(hg.op(h1, h2), k2)).flatten())
        },
        (0..n).map(|i| if omega.pairs[i].0 == he { Scalar::one() } else { Scalar::zero() }).collect(),
        Some(permutation(n, |i| omega.index(hg.inv(omega.pairs[i].0), omega.left(i)))),
    )?;

    let mut delta_a = Matrix::zeros(n * n, n);
    let mut delta_b = Matrix::zeros(n * n, n);
    for (x, &(u, v)) in omega.pairs.iter().enumerate() {
        for (y, &(h, k)) in omega.pairs.iter().enumerate() {
            // Δ(f)(u,v;h,k) = f(uh,k)·[v = h▷k]
            if v == omega.left(y) {
                if let Some(c) = omega.index(hg.op(u, h), k) {
                    delta_a.set(x * n + y, c, Scalar::one());
                }
            }
            // Δ(g)(u,v;h,k) = g(u,vk)·[h = u◁v]
            if h == omega.right(x) {
                if let Some(c) = omega.index(u, kg.op(v, k)) {
                    delta_b.set(x * n + y, c, Scalar::one());
                }
            }
        }
    }
    let s = permutation(n, |i| omega.antipode_point(i));
    let phi_a = (0..n).map(|i| if omega.pairs[i].1 == ke { Scalar::one() } else { Scalar::zero() }).collect();
    let phi_b = (0..n).map(|i| if omega.pairs[i].0 == he { Scalar::one() } else { Scalar::zero() }).collect();
    let name = format!("twosub |H|={} |K|={} |Ω|={n}", hg.order(), kg.order());
    let mut ex = Example::new(name, DualPair::new(a, b, Matrix::identity(n))?, phi_a);
    ex.integral_b = Some(phi_b);
    ex.coproduct_a = Some(delta_a);
    ex.coproduct_b = Some(delta_b);
    ex.antipode_a = Some(s.clone());
    ex.antipode_b = Some(s);
    Ok(ex)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeProductReport {
    /// Functions supported on `Ω` form a subalgebra of `F(H)⊗ℂK`.
    pub subalgebra: bool,
    pub unital: bool,
    pub star_preserving: bool,
    pub bimodule: bool,
    /// `Δ = (E⊗E)Δ₀` on `C(Ω)`.
    pub coproduct_restricts: bool,
    /// `(E⊗E)Δ₀ = (E⊗ι)Δ₀ = (ι⊗E)Δ₀` on `C(Ω)`.
    pub one_sided: bool,
}

impl FreeProductReport {
    pub fn all(&self) -> bool {
        self.subalgebra && self.unital && self.star_preserving && self.bimodule && self.coproduct_restricts && self.one_sided
    }
}

/// Compares `C(Ω)` with `A₀ = F(H)⊗ℂK` through restriction `E` to `Ω`.
pub fn free_product_expectation(omega: &Omega) -> Result<FreeProductReport> {
    if !omega.is_free() {
        return Err(Error::Precondition("Ω is not of free-product type".into()));
    }
    let ex = twosub_pair(omega)?;
    let a = ex.algebra(Side::A);
    let delta = ex.coproduct(Side::A)?;
    let (hg, kg) = (&omega.h, &omega.k);
    let (nh, nk, n) = (hg.order(), kg.order(), omega.len());
    let m = nh * nk;
    let pos = |h: usize, k: usize| h * nk + k;

    // A₀: δ_(h1,k1)δ_(h2,k2) = [h1 = h2]δ_(h1,k1k2), δ_(h,k)* = δ_(h,k⁻¹)
    let a0 = Algebra::from_product_fn(
        (0..m).map(|x| format!("{}", x)).collect(),
        |x, y| {
            let ((h1, k1), (h2, k2)) = ((x / nk, x % nk), (y / nk, y % nk));
            if h1 == h2 { vector::unit(m, pos(h1, kg.op(k1, k2))) } else { vector::zeros(m) }
        },
        (0..m).map(|x| if x % nk == kg.identity() { Scalar::one() } else { Scalar::zero() }).collect(),
        Some(permutation(m, |x| Some(pos(x / nk, kg.inv(x % nk))))),
    )?;
    // Δ₀(f)(u,v;h,k) = f(uh,k)[v = k]
    let mut delta0 = Matrix::zeros(m * m, m);
    for x in 0..m {
        for y in 0..m {
            let ((u, v), (h, k)) = ((x / nk, x % nk), (y / nk, y % nk));
            if v == k {
                delta0.set(x * m + y, pos(hg.op(u, h), k), Scalar::one());
            }
        }
    }
    let restrict = |f: &[Scalar]| -> Vec<Scalar> { omega.pairs.iter().map(|&(h, k)| f[pos(h, k)].clone()).collect() };
    let embed = |f: &[Scalar]| -> Vec<Scalar> {
        let mut out = vector::zeros(m);
        for (i, &(h, k)) in omega.pairs.iter().enumerate() {
            out[pos(h, k)] = f[i].clone();
        }
        out
    };
    let restrict2 = |z: &[Scalar], left: bool, right: bool| -> Vec<Scalar> {
        let mut out = z.to_vec();
        for x in 0..m {
            for y in 0..m {
                let inside_x = omega.index(x / nk, x % nk).is_some();
                let inside_y = omega.index(y / nk, y % nk).is_some();
                if (left && !inside_x) || (right && !inside_y) {
                    out[x * m + y] = Scalar::zero();
                }
            }
        }
        out
    };
    let to_omega2 = |z: &[Scalar]| -> Vec<Scalar> {
        let mut out = vector::zeros(n * n);
        for (i, &(h1, k1)) in omega.pairs.iter().enumerate() {
            for (j, &(h2, k2)) in omega.pairs.iter().enumerate() {
                out[i * n + j] = z[pos(h1, k1) * m + pos(h2, k2)].clone();
            }
        }
        out
    };

    let basis_a: Vec<Vec<Scalar>> = (0..n).map(|i| vector::unit(n, i)).collect();
    let basis_a0: Vec<Vec<Scalar>> = (0..m).map(|x| vector::unit(m, x)).collect();
    let subalgebra = basis_a.iter().all(|f| basis_a.iter().all(|g| a0.multiply(&embed(f), &embed(g)) == embed(&a.multiply(f, g))));
    let unital = restrict(a0.unit()) == a.unit();
    let complex: Vec<Scalar> = (0..m).map(|x| Scalar::gaussian(x as i64 + 1, 2 - x as i64)).collect();
    let star_preserving = basis_a0.iter().chain(std::iter::once(&complex)).all(|x| {
        let lhs = restrict(&a0.star(x).expect("star"));
        Some(lhs) == a.star(&restrict(x))
    });
    let bimodule = basis_a.iter().all(|f| {
        basis_a0.iter().all(|x| {
            restrict(&a0.multiply(&embed(f), x)) == a.multiply(f, &restrict(x))
                && restrict(&a0.multiply(x, &embed(f))) == a.multiply(&restrict(x), f)
        })
    });
    let mut coproduct_restricts = true;
    let mut one_sided = true;
    for (i, f) in basis_a.iter().enumerate() {
        let d0 = delta0.mul_vec(&embed(f));
        let both = restrict2(&d0, true, true);
        coproduct_restricts &= to_omega2(&both) == delta.column(i);
        one_sided &= restrict2(&d0, true, false) == both && restrict2(&d0, false, true) == both;
    }
    Ok(FreeProductReport { subalgebra, unital, star_preserving, bimodule, coproduct_restricts, one_sided })
}
