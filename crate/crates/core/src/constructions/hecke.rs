use num_traits::{One, Zero};
use serde::Serialize;

use super::Example;
use crate::algebra::{kron_vec, Algebra};
use crate::error::{Error, Result};
use crate::exactnum::{vector, Matrix, Scalar};
use crate::groups::{FiniteGroup, Subgroup};
use crate::pairing::DualPair;

/// `F(G)` with the idempotents `δ_g` as basis, `Δ(f)(p, q) = f(pq)`.
pub fn function_algebra(g: &FiniteGroup) -> (Algebra, Matrix) {
    let n = g.order();
    let labels = g.labels().iter().map(|l| format!("δ[{l}]")).collect();
    let a = Algebra::from_product_fn(
        labels,
        |i, j| if i == j { vector::unit(n, i) } else { vector::zeros(n) },
        vec![Scalar::one(); n],
        Some(Matrix::identity(n)),
    )
    .expect("nonempty group");
    let mut delta = Matrix::zeros(n * n, n);
    for p in 0..n {
        for q in 0..n {
            delta.set(p * n + q, g.op(p, q), Scalar::one());
        }
    }
    (a, delta)
}

/// `ℂG` with `Δ(λ_g) = λ_g⊗λ_g` and `λ_g* = λ_{g⁻¹}`.
pub fn group_algebra(g: &FiniteGroup) -> (Algebra, Matrix) {
    let n = g.order();
    let labels = g.labels().iter().map(|l| format!("λ[{l}]")).collect();
    let star = Matrix::from_fn(n, n, |i, j| if i == g.inv(j) { Scalar::one() } else { Scalar::zero() });
    let a = Algebra::from_product_fn(labels, |i, j| vector::unit(n, g.op(i, j)), vector::unit(n, g.identity()), Some(star))
        .expect("nonempty group");
    let mut delta = Matrix::zeros(n * n, n);
    for x in 0..n {
        delta.set(x * n + x, x, Scalar::one());
    }
    (a, delta)
}

/// `F(G)` paired with `ℂG` by `⟨f, λ_g⟩ = f(g)`.
pub fn group_pair(g: &FiniteGroup) -> Example {
    let n = g.order();
    let (fa, delta_a) = function_algebra(g);
    let (ga, delta_b) = group_algebra(g);
    let inv = Matrix::from_fn(n, n, |i, j| if i == g.inv(j) { Scalar::one() } else { Scalar::zero() });
    let mut ex = Example::new(format!("group pair of order {n}"), DualPair::new(fa, ga, Matrix::identity(n)).expect("square"), vec![Scalar::one(); n]);
    ex.integral_b = Some(vector::unit(n, g.identity()));
    ex.coproduct_a = Some(delta_a);
    ex.coproduct_b = Some(delta_b);
    ex.antipode_a = Some(inv.clone());
    ex.antipode_b = Some(inv);
    ex
}

#[derive(Clone, Debug)]
pub struct HeckePair {
    pub example: Example,
    pub group: FiniteGroup,
    pub subgroup: Subgroup,
    pub double_cosets: Vec<Vec<usize>>,
    /// The counting formula for `Δ` gave the same value for every choice
    /// of representatives.
    pub representative_independent: bool,
    /// `b_D = uλ_pu` as elements of `ℂG`.
    pub b_elements: Vec<Vec<Scalar>>,
}

fn convolve(g: &FiniteGroup, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = g.order();
    let mut out = vector::zeros(n);
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in y.iter().enumerate() {
            if !yb.is_zero() {
                out[g.op(a, b)] += &(xa * yb);
            }
        }
    }
    out
}

impl HeckePair {
    fn coset_of(&self, x: usize) -> usize {
        self.double_cosets.iter().position(|d| d.contains(&x)).expect("partition")
    }

    /// Coordinates in `{b_D}` of an element of `ℂG` lying in `uℂGu`.
    pub fn b_coordinates(&self, z: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut out = Vec::with_capacity(self.double_cosets.len());
        for d in &self.double_cosets {
            let c = &z[d[0]];
            if d.iter().any(|&x| z[x] != *c) {
                return Err(Error::Postcondition("element is not constant on double cosets".into()));
            }
            out.push(c * &Scalar::from_int(d.len() as i64));
        }
        Ok(out)
    }

    /// `Δ(f)(p, q) = f(pq)` for every basis `f` and all `p, q ∈ G`.
    pub fn coproduct_is_restricted_group_coproduct(&self) -> Result<bool> {
        let delta = self.example.coproduct(crate::pairing::Side::A)?;
        let m = self.double_cosets.len();
        let n = self.group.order();
        for (di, _) in self.double_cosets.iter().enumerate() {
            for p in 0..n {
                for q in 0..n {
                    let value = delta.get(self.coset_of(p) * m + self.coset_of(q), di);
                    let expected = if self.coset_of(self.group.op(p, q)) == di { Scalar::one() } else { Scalar::zero() };
                    if *value != expected {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `(u⊗u)Δ₀(b_D)(u⊗u)` computed in `ℂG⊗ℂG`, in the basis `b_D⊗b_D'`.
    pub fn compressed_group_coproduct(&self) -> Result<Matrix> {
        let g = &self.group;
        let n = g.order();
        let (ga, _) = group_algebra(g);
        let gg = ga.tensor(&ga);
        let u = self.b_elements[self.coset_of(g.identity())].clone();
        let uu = kron_vec(&u, &u);
        let m = self.double_cosets.len();
        let mut out = Matrix::zeros(m * m, m);
        for (di, b) in self.b_elements.iter().enumerate() {
            let mut d0 = vector::zeros(n * n);
            for (x, c) in b.iter().enumerate() {
                d0[x * n + x] = c.clone();
            }
            let z = gg.multiply(&gg.multiply(&uu, &d0), &uu);
            // Read off coefficients of b_D1⊗b_D2: z(p, q) = coef·1/(|D1||D2|).
            for (i1, d1) in self.double_cosets.iter().enumerate() {
                for (i2, d2) in self.double_cosets.iter().enumerate() {
                    let c = &z[d1[0] * n + d2[0]];
                    let scale = Scalar::from_int((d1.len() * d2.len()) as i64);
                    out.set(i1 * m + i2, di, c * &scale);
                }
            }
            let rebuilt: Vec<Scalar> = (0..n * n)
                .map(|pq| {
                    let (p, q) = (pq / n, pq % n);
                    let (i1, i2) = (self.coset_of(p), self.coset_of(q));
                    out.get(i1 * m + i2, di) / &Scalar::from_int((self.double_cosets[i1].len() * self.double_cosets[i2].len()) as i64)
                })
                .collect();
            if rebuilt != z {
                return Err(Error::Postcondition("compressed coproduct leaves u(ℂG⊗ℂG)u".into()));
            }
        }
        Ok(out)
    }

    /// Checks on `E(f)(p) = (1/n²)Σ_{h,k} f(hpk)` and on `u`.
    pub fn expectation_report(&self) -> ExpectationReport {
        let g = &self.group;
        let n = g.order();
        let h = self.subgroup.members();
        let n2 = Scalar::from_int((h.len() * h.len()) as i64);
        let e_map = |f: &[Scalar]| -> Vec<Scalar> {
            (0..n)
                .map(|p| {
                    let s: Scalar = h.iter().flat_map(|&a| h.iter().map(move |&b| (a, b))).map(|(a, b)| f[g.op(g.op(a, p), b)].clone()).sum();
                    &s / &n2
                })
                .collect()
        };
        let pointwise = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> { x.iter().zip(y).map(|(a, b)| a * b).collect() };
        let indicator = |d: &[usize]| -> Vec<Scalar> {
            (0..n).map(|x| if d.contains(&x) { Scalar::one() } else { Scalar::zero() }).collect()
        };
        let unital = e_map(&vec![Scalar::one(); n]) == vec![Scalar::one(); n];
        let deltas: Vec<Vec<Scalar>> = (0..n).map(|x| vector::unit(n, x)).collect();
        let complex: Vec<Scalar> = (0..n).map(|x| Scalar::gaussian(x as i64, 1 - x as i64)).collect();
        let star_preserving = e_map(&vector::conj(&complex)) == vector::conj(&e_map(&complex));
        let idempotent = deltas.iter().all(|f| e_map(&e_map(f)) == e_map(f));
        let image_in_a = deltas.iter().all(|f| {
            let ef = e_map(f);
            self.double_cosets.iter().all(|d| d.iter().all(|&x| ef[x] == ef[d[0]]))
        });
        let bimodule = self.double_cosets.iter().all(|d| {
            let chi = indicator(d);
            deltas.iter().all(|f| {
                e_map(&pointwise(&chi, f)) == pointwise(&chi, &e_map(f))
                    && e_map(&pointwise(f, &chi)) == pointwise(&e_map(f), &chi)
            })
        });
        let u = self.b_elements[self.coset_of(g.identity())].clone();
        let (ga, _) = group_algebra(g);
        let gg = ga.tensor(&ga);
        let mut du = vector::zeros(n * n);
        for (x, c) in u.iter().enumerate() {
            du[x * n + x] = c.clone();
        }
        let one = vector::unit(n, g.identity());
        let uu = kron_vec(&u, &u);
        let u_group_like =
            gg.multiply(&du, &kron_vec(&one, &u)) == uu && gg.multiply(&du, &kron_vec(&u, &one)) == uu;
        ExpectationReport { unital, star_preserving, idempotent, image_in_a, bimodule, u_group_like }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectationReport {
    pub unital: bool,
    pub star_preserving: bool,
    pub idempotent: bool,
    pub image_in_a: bool,
    pub bimodule: bool,
    pub u_group_like: bool,
}

impl ExpectationReport {
    pub fn all(&self) -> bool {
        self.unital && self.star_preserving && self.idempotent && self.image_in_a && self.bimodule && self.u_group_like
    }
}

/// The pair `(A, B)` of a group `G` and subgroup `H`: `A` is spanned by the
/// indicator functions `χ_D` of the double cosets `D = HpH`, `B` by the
/// elements `b_D = uλ_pu` with `u = (1/n)Σ_{h∈H} λ_h`.
pub fn hecke_pair(g: &FiniteGroup, h: &Subgroup) -> Result<HeckePair> {
    let n = g.order();
    let hn = h.order();
    let cosets = g.double_cosets(h, h);
    let m = cosets.len();
    let coset_of = |x: usize| cosets.iter().position(|d| d.contains(&x)).expect("partition");
    let inv_coset: Vec<usize> = cosets.iter().map(|d| coset_of(g.inv(d[0]))).collect();
    let h_index = coset_of(g.identity());
    let hn_s = Scalar::from_int(hn as i64);

    let count = |p: usize, q: usize, d: usize| -> Scalar {
        let c = h.members().iter().filter(|&&k| coset_of(g.op(g.op(p, k), q)) == d).count();
        &Scalar::from_int(c as i64) / &hn_s
    };
    let mut representative_independent = true;
    let mut delta_a = Matrix::zeros(m * m, m);
    for d in 0..m {
        for (i1, d1) in cosets.iter().enumerate() {
            for (i2, d2) in cosets.iter().enumerate() {
                let v = count(d1[0], d2[0], d);
                for &p in d1 {
                    for &q in d2 {
                        if count(p, q, d) != v {
                            representative_independent = false;
                        }
                    }
                }
                delta_a.set(i1 * m + i2, d, v);
            }
        }
    }

    let rep = |d: &[usize]| g.label(d[0]).to_string();
    let a = Algebra::from_product_fn(
        cosets.iter().map(|d| format!("χ[{}]", rep(d))).collect(),
        |i, j| if i == j { vector::unit(m, i) } else { vector::zeros(m) },
        vec![Scalar::one(); m],
        Some(Matrix::identity(m)),
    )?;

    let mut u = vector::zeros(n);
    for &x in h.members() {
        u[x] = hn_s.inv().expect("nonempty");
    }
    let b_elements: Vec<Vec<Scalar>> =
        cosets.iter().map(|d| convolve(g, &convolve(g, &u, &vector::unit(n, d[0])), &u)).collect();

    let mut hp = HeckePair {
        example: Example::new("", DualPair::new(a.clone(), a.clone(), Matrix::identity(m))?, vec![]),
        group: g.clone(),
        subgroup: h.clone(),
        double_cosets: cosets.clone(),
        representative_independent,
        b_elements: b_elements.clone(),
    };
    let mut structure = Vec::with_capacity(m * m);
    for bi in &b_elements {
        for bj in &b_elements {
            structure.push(hp.b_coordinates(&convolve(g, bi, bj))?);
        }
    }
    let perm = |target: &[usize]| Matrix::from_fn(m, m, |i, j| if i == target[j] { Scalar::one() } else { Scalar::zero() });
    let b = Algebra::new(
        cosets.iter().map(|d| format!("b[{}]", rep(d))).collect(),
        structure,
        vector::unit(m, h_index),
        Some(perm(&inv_coset)),
    )?;
    // ⟨χ_D, b_D'⟩ = Σ_g χ_D(g)·b_D'(g)
    let pairing = Matrix::from_fn(m, m, |i, j| cosets[i].iter().map(|&x| b_elements[j][x].clone()).sum());

    let mut delta_b = Matrix::zeros(m * m, m);
    for d in 0..m {
        delta_b.set(d * m + d, d, Scalar::one());
    }
    let name = format!("hecke |G|={n} |H|={hn}");
    let phi_a: Vec<Scalar> = cosets.iter().map(|d| Scalar::from_int(d.len() as i64)).collect();
    let mut phi_b = vector::zeros(m);
    phi_b[h_index] = hn_s.inv().expect("nonempty");
    let mut ex = Example::new(name, DualPair::new(a, b, pairing)?, phi_a);
    ex.integral_b = Some(phi_b);
    ex.coproduct_a = Some(delta_a);
    ex.coproduct_b = Some(delta_b);
    ex.antipode_a = Some(perm(&inv_coset));
    ex.antipode_b = Some(perm(&inv_coset));
    hp.example = ex;
    Ok(hp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::Side;

    #[test]
    fn group_pair_is_hopf() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let ex = group_pair(&g);
        assert_eq!(ex.coproduct(Side::A).unwrap(), *ex.coproduct_a.as_ref().unwrap());
        assert_eq!(ex.coproduct(Side::B).unwrap(), *ex.coproduct_b.as_ref().unwrap());
        for side in [Side::A, Side::B] {
            let cert = ex.certificate(side).unwrap().unwrap();
            assert!(cert.passed(), "{:?}", cert.failures());
        }
    }

    #[test]
    fn s3_hecke_values() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let h = g.subgroup_from_labels(&["(1 2)".into()]).unwrap();
        let hp = hecke_pair(&g, &h).unwrap();
        assert!(hp.representative_independent);
        assert_eq!(hp.example.pair.pairing(), &Matrix::identity(2));
        let half = Scalar::ratio(1, 2);
        let d = hp.example.coproduct_a.clone().unwrap();
        assert_eq!(d.column(0), vec![Scalar::one(), Scalar::zero(), Scalar::zero(), half.clone()]);
        assert_eq!(d.column(1), vec![Scalar::zero(), Scalar::one(), Scalar::one(), half]);
        assert_eq!(hp.example.coproduct(Side::A).unwrap(), d);
        assert_eq!(hp.example.coproduct(Side::B).unwrap(), hp.example.coproduct_b.clone().unwrap());
        assert_eq!(hp.compressed_group_coproduct().unwrap(), hp.example.coproduct_b.clone().unwrap());
        assert!(hp.expectation_report().all());
    }
}
