use std::collections::BTreeSet;

use itertools::Itertools;

use super::FormulaError;
use crate::dyck::{crossing_number, cycle_lemma_pairing};
use crate::exact::{Ring, SquareMatrix, TruncatedSeries};

fn complement(r: &[u32], n: u32) -> Vec<u32> {
    (1..=n).filter(|i| !r.contains(i)).collect()
}

fn check_half(r: &[u32], n: u32) -> Result<(), FormulaError> {
    let set: BTreeSet<u32> = r.iter().copied().collect();
    if n % 2 == 1 || set.len() != r.len() || 2 * r.len() != n as usize || r.iter().any(|&i| i == 0 || i > n) {
        return Err(FormulaError::BadSet(format!("need n/2 distinct indices from 1..={n}")));
    }
    Ok(())
}

/// Determinant of `A` with rows `R` and columns the complement, both in
/// cycle-lemma pair order; every entry is negated when `n` lies in `R`.
pub fn d_r<S: Ring>(a: &SquareMatrix<S>, r: &[u32]) -> Result<S, FormulaError> {
    let n = a.dim() as u32;
    check_half(r, n)?;
    let pairs = cycle_lemma_pairing(r, &complement(r, n), n)?;
    let negate = r.contains(&n);
    let rows: Vec<usize> = pairs.iter().map(|&(r, _)| r as usize - 1).collect();
    let cols: Vec<usize> = pairs.iter().map(|&(_, s)| s as usize - 1).collect();
    let sub = a.submatrix(&rows, &cols);
    Ok(if negate { sub.neg().determinant() } else { sub.determinant() })
}

/// `Σ_M (-1)^{cr(M)} Π_{(r,s) in M} (-1)^{[r > s]} A(r,s)` over bijections
/// `M` from `R` onto its complement.
pub fn directed_matching_sum<S: Ring>(a: &SquareMatrix<S>, r: &[u32]) -> Result<S, FormulaError> {
    let n = a.dim() as u32;
    check_half(r, n)?;
    let s = complement(r, n);
    let mut acc = S::zero();
    for perm in s.iter().copied().permutations(s.len()) {
        let m: Vec<(u32, u32)> = r.iter().copied().zip(perm).collect();
        let mut term = S::one();
        let mut negative = crossing_number(&m) % 2 == 1;
        for &(x, y) in &m {
            negative ^= x > y;
            term = term * a.get(x as usize - 1, y as usize - 1).clone();
        }
        acc = if negative { acc - term } else { acc + term };
    }
    Ok(acc)
}

/// `(Σ_R d_R(A), Pf(A - A^T))` over all half-size `R`.
pub fn pfaffian_sum_identity<S: Ring>(a: &SquareMatrix<S>) -> Result<(S, S), FormulaError> {
    let n = a.dim() as u32;
    if n % 2 == 1 {
        return Err(FormulaError::BadSet(format!("odd size {n}")));
    }
    let mut lhs = S::zero();
    for r in (1..=n).combinations(n as usize / 2) {
        lhs = lhs + d_r(a, &r)?;
    }
    let rhs = a.sub(&a.transpose()).pfaffian()?;
    Ok((lhs, rhs))
}

/// Both sides of the twisted sum: `Σ_{R ⊇ B, R ∩ C = ∅} e^{2t(|S∩U| - |S∩V|)}
/// d_R(A)` and `e^{t(|U|-|V|)} Pf(Ã - Ãᵀ)` where `Ã` twists `A` by
/// `e^{t(1_{j∈U} - 1_{i∈U} - 1_{j∈V} + 1_{i∈V})}` and is zeroed on columns in
/// `B` and rows in `C`.
pub fn lemma_bcuv(
    a: &SquareMatrix<TruncatedSeries>,
    b: &BTreeSet<u32>,
    c: &BTreeSet<u32>,
    u: &BTreeSet<u32>,
    v: &BTreeSet<u32>,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries), FormulaError> {
    let n = a.dim() as u32;
    if n % 2 == 1 || !b.is_disjoint(c) || !u.is_disjoint(v) {
        return Err(FormulaError::BadSet("need even size, B and C disjoint, U and V disjoint".into()));
    }
    if b.iter().chain(c).chain(u).chain(v).any(|&i| i == 0 || i > n) {
        return Err(FormulaError::BadSet(format!("indices must lie in 1..={n}")));
    }
    let mut lhs = TruncatedSeries::zero_to(order);
    for r in (1..=n).combinations(n as usize / 2) {
        if !b.iter().all(|x| r.contains(x)) || c.iter().any(|x| r.contains(x)) {
            continue;
        }
        let s: BTreeSet<u32> = complement(&r, n).into_iter().collect();
        let e = s.intersection(u).count() as i64 - s.intersection(v).count() as i64;
        lhs = lhs + TruncatedSeries::exp_int(2 * e, order) * d_r(a, &r)?;
    }

    let ind = |set: &BTreeSet<u32>, x: u32| set.contains(&x) as i64;
    let twisted = SquareMatrix::from_fn(n as usize, |i, j| {
        let (li, lj) = (i as u32 + 1, j as u32 + 1);
        if b.contains(&lj) || c.contains(&li) {
            return TruncatedSeries::zero_to(order);
        }
        let e = ind(u, lj) - ind(u, li) - ind(v, lj) + ind(v, li);
        a.get(i, j).clone() * TruncatedSeries::exp_int(e, order)
    });
    let shift = u.len() as i64 - v.len() as i64;
    let rhs = twisted.sub(&twisted.transpose()).pfaffian()? * TruncatedSeries::exp_int(shift, order);
    Ok((lhs.truncate(order), rhs.truncate(order)))
}
