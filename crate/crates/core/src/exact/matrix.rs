use std::collections::HashMap;
use std::fmt;

use super::{ExactError, Ring};

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Ring> SquareMatrix<S> {
    pub fn new(dim: usize, entries: Vec<S>) -> Result<Self, ExactError> {
        if entries.len() != dim * dim {
            return Err(ExactError::ShapeMismatch { expected: dim * dim, found: entries.len() });
        }
        Ok(SquareMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, ExactError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(ExactError::ShapeMismatch { expected: dim, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { dim, entries })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> S>(dim: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| S::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Ring, F: FnMut(&S) -> T>(&self, f: F) -> SquareMatrix<T> {
        SquareMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    /// Rows `rows` and columns `cols` (0-based, equal lengths), in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), cols.len(), "submatrix must be square");
        Self::from_fn(rows.len(), |a, b| self.get(rows[a], cols[b]).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j).clone() + other.get(i, j).clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j).clone() - other.get(i, j).clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |i, j| {
            let mut acc = S::zero();
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * other.get(k, j).clone();
            }
            acc
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// First `(i, j)` with `M[i][j] != -M[j][i]` (diagonal included).
    pub fn check_antisymmetric(&self) -> Result<(), ExactError> {
        for i in 0..self.dim {
            for j in 0..=i {
                if *self.get(i, j) != -self.get(j, i).clone() {
                    return Err(ExactError::NotAntisymmetric { row: j, col: i });
                }
            }
        }
        Ok(())
    }

    /// Exact determinant. The empty matrix has determinant one.
    pub fn determinant(&self) -> S {
        if S::IS_FIELD {
            self.det_elimination()
        } else {
            self.det_expansion()
        }
    }

    fn det_elimination(&self) -> S {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = S::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return S::zero();
            };
            if p != col {
                for k in 0..n {
                    a.swap(p * n + k, col * n + k);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            let inv = pivot.try_inverse().expect("nonzero field element");
            det = det * pivot;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone() * inv.clone();
                for k in col..n {
                    let v = a[r * n + k].clone() - factor.clone() * a[col * n + k].clone();
                    a[r * n + k] = v;
                }
            }
        }
        det
    }

    /// Division-free: dynamic programme over the set of used columns.
    fn det_expansion(&self) -> S {
        let n = self.dim;
        assert!(n < 24, "division-free determinant limited to dimension < 24");
        let mut layer: HashMap<u32, S> = HashMap::new();
        layer.insert(0, S::one());
        for row in 0..n {
            let mut next: HashMap<u32, S> = HashMap::new();
            for (mask, val) in layer {
                for col in 0..n {
                    if mask & (1 << col) != 0 {
                        continue;
                    }
                    let entry = self.get(row, col);
                    if entry.is_zero() {
                        continue;
                    }
                    let inversions = (mask >> col).count_ones();
                    let mut term = val.clone() * entry.clone();
                    if inversions % 2 == 1 {
                        term = -term;
                    }
                    let slot = next.entry(mask | (1 << col)).or_insert_with(S::zero);
                    *slot = slot.clone() + term;
                }
            }
            layer = next;
        }
        layer.remove(&((1u32 << n) - 1)).unwrap_or_else(S::zero)
    }

    /// Pfaffian of an antisymmetric matrix of even dimension.
    ///
    /// Sign convention: `Pf [[0, a], [-a, 0]] = a`, and in general the
    /// matching sum with sign `(-1)^crossings`.
    pub fn pfaffian(&self) -> Result<S, ExactError> {
        if self.dim % 2 == 1 {
            return Err(ExactError::OddDimension(self.dim));
        }
        self.check_antisymmetric()?;
        Ok(if S::IS_FIELD { self.pf_elimination() } else { self.pf_expansion() })
    }

    fn pf_elimination(&self) -> S {
        let mut m = self.clone();
        let mut pf = S::one();
        while m.dim > 0 {
            let n = m.dim;
            let Some(j) = (1..n).find(|&j| !m.get(0, j).is_zero()) else {
                return S::zero();
            };
            if j != 1 {
                m.swap_index(1, j);
                pf = -pf;
            }
            let a = m.get(0, 1).clone();
            let inv = a.try_inverse().expect("nonzero field element");
            pf = pf * a;
            // Pf M = a * Pf(D + (c b^T - b c^T) / a), b = row 0, c = row 1
            let next = Self::from_fn(n - 2, |i, k| {
                let (i, k) = (i + 2, k + 2);
                let b_i = m.get(0, i).clone();
                let b_k = m.get(0, k).clone();
                let c_i = m.get(1, i).clone();
                let c_k = m.get(1, k).clone();
                m.get(i, k).clone() + (c_i * b_k - b_i * c_k) * inv.clone()
            });
            m = next;
        }
        pf
    }

    fn swap_index(&mut self, a: usize, b: usize) {
        let n = self.dim;
        for k in 0..n {
            self.entries.swap(a * n + k, b * n + k);
        }
        for k in 0..n {
            self.entries.swap(k * n + a, k * n + b);
        }
    }

    /// Expansion along the first remaining row, memoised on the index set.
    fn pf_expansion(&self) -> S {
        assert!(self.dim < 32, "Pfaffian expansion limited to dimension < 32");
        let full: u32 = if self.dim == 0 { 0 } else { (1u32 << self.dim) - 1 };
        let mut memo = HashMap::new();
        self.pf_rec(full, &mut memo)
    }

    fn pf_rec(&self, mask: u32, memo: &mut HashMap<u32, S>) -> S {
        if mask == 0 {
            return S::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut acc = S::zero();
        let mut between = 0u32;
        let mut scan = rest;
        while scan != 0 {
            let j = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let entry = self.get(i, j);
            if !entry.is_zero() {
                let sub = self.pf_rec(rest & !(1 << j), memo);
                let term = entry.clone() * sub;
                acc = if between.is_multiple_of(2) { acc + term } else { acc - term };
            }
            between += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Inverse over a field; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if p != col {
                for k in 0..n {
                    a.entries.swap(p * n + k, col * n + k);
                    inv.entries.swap(p * n + k, col * n + k);
                }
            }
            let pinv = a.get(col, col).try_inverse()?;
            for k in 0..n {
                let v = a.get(col, k).clone() * pinv.clone();
                a.set(col, k, v);
                let w = inv.get(col, k).clone() * pinv.clone();
                inv.set(col, k, w);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for k in 0..n {
                    let v = a.get(r, k).clone() - factor.clone() * a.get(col, k).clone();
                    a.set(r, k, v);
                    let w = inv.get(r, k).clone() - factor.clone() * inv.get(col, k).clone();
                    inv.set(r, k, w);
                }
            }
        }
        Some(inv)
    }
}

impl<S: fmt::Debug> fmt::Debug for SquareMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[S]> = self.entries.chunks(self.dim.max(1)).take(self.dim).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, FormalPolynomial, Rational, TruncatedSeries};

    fn q(rows: &[&[i64]]) -> SquareMatrix<Rational> {
        SquareMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect()).unwrap()
    }

    #[test]
    fn empty_determinant_is_one() {
        assert_eq!(SquareMatrix::<Rational>::zeros(0).determinant(), rat(1, 1));
        assert_eq!(SquareMatrix::<FormalPolynomial>::zeros(0).determinant(), FormalPolynomial::one());
    }

    #[test]
    fn grounded_laplacian_determinant() {
        let m = q(&[&[3, -1, -1], &[-1, 3, -1], &[-1, -1, 2]]);
        assert_eq!(m.determinant(), rat(8, 1));
        let as_series = m.map(|x| TruncatedSeries::constant(x.clone()));
        assert_eq!(as_series.determinant().constant_term(), rat(8, 1));
    }

    #[test]
    fn inverse_identity() {
        let m = q(&[&[2, 1, 0, 3], &[1, -1, 4, 0], &[0, 5, 1, 1], &[7, 0, 2, -2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.determinant() * inv.determinant(), rat(1, 1));
        assert_eq!(m.mul(&inv), SquareMatrix::identity(4));
    }

    #[test]
    fn two_by_two_pfaffian() {
        let a = FormalPolynomial::sym(1, 2);
        let m = SquareMatrix::from_rows(vec![
            vec![FormalPolynomial::zero(), a.clone()],
            vec![-a.clone(), FormalPolynomial::zero()],
        ])
        .unwrap();
        assert_eq!(m.pfaffian().unwrap(), a);
    }

    #[test]
    fn pfaffian_errors() {
        assert_eq!(SquareMatrix::<Rational>::zeros(3).pfaffian(), Err(ExactError::OddDimension(3)));
        let m = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.pfaffian(), Err(ExactError::NotAntisymmetric { row: 0, col: 1 }));
    }

    #[test]
    fn elimination_matches_expansion() {
        let m = q(&[&[0, 0, 2, -1], &[0, 0, 3, 5], &[-2, -3, 0, 4], &[1, -5, -4, 0]]);
        let by_poly = m.map(|x| FormalPolynomial::constant(x.clone())).pfaffian().unwrap();
        let pf = m.pfaffian().unwrap();
        assert_eq!(FormalPolynomial::constant(pf.clone()), by_poly);
        // a*f - b*e + c*d with a = 0, b = 2, c = -1, d = 3, e = 5, f = 4
        assert_eq!(pf, rat(-13, 1));
        assert_eq!(pf.clone() * pf, m.determinant());
    }
}
