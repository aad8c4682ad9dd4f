use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

#[derive(Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        Matrix::from_entries(r.rows, r.cols, r.entries).map_err(serde::de::Error::custom)
    }
}

/// Solution set of `M·X = Y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolutionSet {
    None,
    Unique(Matrix),
    /// A particular solution plus a basis of the null space of `M`; every
    /// column of `X` may be shifted independently by that null space.
    Affine { particular: Matrix, null_basis: Vec<Vec<Scalar>> },
}

impl SolutionSet {
    pub fn particular(&self) -> Option<&Matrix> {
        match self {
            SolutionSet::None => None,
            SolutionSet::Unique(x) => Some(x),
            SolutionSet::Affine { particular, .. } => Some(particular),
        }
    }
}

/// Reduced row echelon form with the pivot columns that were used.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from small rationals given as `(num, den)`.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Self {
        let v = rows
            .iter()
            .map(|row| row.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect())
            .collect();
        Matrix::from_rows(v).expect("rectangular literal")
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|row| row.iter().map(|&n| Scalar::from_int(n)).collect()).collect();
        Matrix::from_rows(v).expect("rectangular literal")
    }

    pub fn from_columns(cols: &[Vec<Scalar>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::DimensionMismatch("ragged columns".into()));
        }
        Ok(Matrix::from_fn(r, c, |i, j| cols[j][i].clone()))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn column_vector(v: &[Scalar]) -> Self {
        Matrix { rows: v.len(), cols: 1, entries: v.to_vec() }
    }

    pub fn row_vector(v: &[Scalar]) -> Self {
        Matrix { rows: 1, cols: v.len(), entries: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.entries[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> Self {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(Scalar::conj).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on shape mismatch.
    pub fn mul(&self, other: &Matrix) -> Self {
        self.try_mul(other).expect("matrix shapes")
    }

    pub fn add(&self, other: &Matrix) -> Self {
        self.try_add(other).expect("matrix shapes")
    }

    pub fn sub(&self, other: &Matrix) -> Self {
        self.try_sub(other).expect("matrix shapes")
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut out = vec![Scalar::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(x * a);
                }
            }
        }
        out
    }

    /// Kronecker product; row `i·N.rows + k` holds block `(i, k)`.
    pub fn kron(&self, other: &Matrix) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Reduced row echelon form, pivoting only in the first `pivot_cols` columns.
    pub fn echelon_limited(&self, pivot_cols: usize) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols.min(m.cols) {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if !pj.is_zero() {
                        let v = m.get(i, j) - &(&f * pj);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn echelon(&self) -> Echelon {
        self.echelon_limited(self.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{x : M·x = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let e = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in e.pivots.iter().enumerate() {
                    v[p] = -e.reduced.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Solves `M·X = Y` exactly.
    pub fn solve(&self, y: &Matrix) -> Result<SolutionSet> {
        if y.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} rows, expected {}",
                y.rows, self.rows
            )));
        }
        let aug = self.hstack(y)?;
        let e = aug.echelon_limited(self.cols);
        let rank = e.pivots.len();
        for i in rank..self.rows {
            if (0..y.cols).any(|j| !e.reduced.get(i, self.cols + j).is_zero()) {
                return Ok(SolutionSet::None);
            }
        }
        let mut x = Matrix::zeros(self.cols, y.cols);
        for (r, &p) in e.pivots.iter().enumerate() {
            for j in 0..y.cols {
                x.set(p, j, e.reduced.get(r, self.cols + j).clone());
            }
        }
        if rank == self.cols {
            Ok(SolutionSet::Unique(x))
        } else {
            Ok(SolutionSet::Affine { particular: x, null_basis: self.null_space() })
        }
    }

    pub fn solve_vec(&self, y: &[Scalar]) -> Result<SolutionSet> {
        self.solve(&Matrix::column_vector(y))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        match self.solve(&Matrix::identity(self.rows)) {
            Ok(SolutionSet::Unique(x)) => Some(x),
            _ => None,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == self.get(j, i).conj()))
    }

    /// Exact positive semidefiniteness test for a Hermitian matrix.
    pub fn is_psd_hermitian(&self) -> Result<bool> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        Ok(psd_recursive(self.clone()))
    }
}

fn psd_recursive(g: Matrix) -> bool {
    let n = g.rows;
    if g.is_zero() {
        return true;
    }
    let mut pivot = None;
    for i in 0..n {
        match g.get(i, i).re().cmp(&num_rational::BigRational::zero()) {
            Ordering::Less => return false,
            Ordering::Equal => {
                if (0..n).any(|j| !g.get(i, j).is_zero()) {
                    return false;
                }
            }
            Ordering::Greater => {
                if pivot.is_none() {
                    pivot = Some(i);
                }
            }
        }
    }
    let Some(k) = pivot else {
        return true;
    };
    let inv = g.get(k, k).inv().expect("positive pivot");
    let keep: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    let schur = Matrix::from_fn(n - 1, n - 1, |a, b| {
        let (i, j) = (keep[a], keep[b]);
        g.get(i, j) - &(&(g.get(i, k) * g.get(k, j)) * &inv)
    });
    psd_recursive(schur)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairing_table() -> Matrix {
        Matrix::from_ratios(&[
            &[(0, 1), (1, 2), (-1, 2)],
            &[(1, 2), (1, 4), (1, 4)],
            &[(-1, 2), (1, 4), (1, 4)],
        ])
    }

    #[test]
    fn rank_of_pairing_table() {
        assert_eq!(pairing_table().rank(), 3);
    }

    #[test]
    fn null_space_of_rank_one() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(Zero::is_zero));
        assert_eq!(ns[0], vec![Scalar::from_int(-2), Scalar::from_int(1)]);
    }

    #[test]
    fn solve_cases() {
        let m = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        let inconsistent = Matrix::from_ints(&[&[1], &[2]]);
        assert_eq!(m.solve(&inconsistent).unwrap(), SolutionSet::None);
        let consistent = Matrix::from_ints(&[&[3], &[3]]);
        match m.solve(&consistent).unwrap() {
            SolutionSet::Affine { particular, null_basis } => {
                assert_eq!(m.mul(&particular), consistent);
                assert_eq!(null_basis.len(), 1);
            }
            other => panic!("expected affine, got {other:?}"),
        }
        let inv = pairing_table().inverse().unwrap();
        assert_eq!(inv.mul(&pairing_table()), Matrix::identity(3));
    }

    #[test]
    fn psd_examples() {
        let g = Matrix::from_ratios(&[&[(3, 2), (1, 1)], &[(1, 1), (1, 1)]]);
        assert!(g.is_psd_hermitian().unwrap());
        let neg = Matrix::from_ints(&[&[-1, 1], &[1, 1]]);
        assert!(!neg.is_psd_hermitian().unwrap());
        assert!(Matrix::zeros(3, 3).is_psd_hermitian().unwrap());
        let zero_diag = Matrix::from_ints(&[&[0, 1], &[1, 1]]);
        assert!(!zero_diag.is_psd_hermitian().unwrap());
        let non_herm = Matrix::from_ints(&[&[1, 2], &[0, 1]]);
        assert_eq!(non_herm.is_psd_hermitian(), Err(Error::NotHermitian));
        let complex = Matrix::from_rows(vec![
            vec![Scalar::from_int(2), Scalar::gaussian(0, 1)],
            vec![Scalar::gaussian(0, -1), Scalar::from_int(1)],
        ])
        .unwrap();
        assert!(complex.is_psd_hermitian().unwrap());
    }

    #[test]
    fn kron_index_convention() {
        let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let n = Matrix::from_ints(&[&[0, 5], &[6, 7]]);
        let k = m.kron(&n);
        assert_eq!(*k.get(1 * 2 + 0, 0 * 2 + 1), Scalar::from_int(3 * 5));
        assert_eq!(*k.get(0 * 2 + 1, 1 * 2 + 0), Scalar::from_int(2 * 6));
    }

    #[test]
    fn json_roundtrip() {
        let m = pairing_table();
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.starts_with(r#"{"rows":3,"cols":3,"entries":["#));
        let back: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        let bad = r#"{"rows":2,"cols":2,"entries":[]}"#;
        assert!(serde_json::from_str::<Matrix>(bad).is_err());
    }
}
