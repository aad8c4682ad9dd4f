//! Helpers for coordinate vectors stored as `Vec<Scalar>`.

use num_traits::{One, Zero};

use super::Scalar;

pub fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "vector length");
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

pub fn conj(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(Scalar::conj).collect()
}

pub fn is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn from_ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&n| Scalar::from_int(n)).collect()
}

pub fn from_ratios(v: &[(i64, i64)]) -> Vec<Scalar> {
    v.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect()
}
