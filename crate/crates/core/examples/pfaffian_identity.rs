//! A sum of half-size determinants equals one Pfaffian, and its twisted
//! version over power series.

use std::collections::BTreeSet;

use groves::exact::{rat, SquareMatrix, TruncatedSeries};
use groves::formulas::{d_r, lemma_bcuv, pfaffian_sum_identity};

fn main() {
    let a = SquareMatrix::from_fn(6, |i, j| rat(((3 * i + 5 * j) % 7) as i64 - 3, 1 + (i + j) as i64 % 2));
    for r in [[1, 2, 3], [1, 3, 5], [2, 4, 6]] {
        println!("d_R for R = {r:?}: {}", d_r(&a, &r).unwrap());
    }
    let (lhs, rhs) = pfaffian_sum_identity(&a).unwrap();
    println!("sum over R = {lhs}, Pf(A - A^T) = {rhs}");

    let order = 3;
    let s = SquareMatrix::from_fn(4, |i, j| {
        TruncatedSeries::new(order, vec![rat(i as i64 - j as i64, 1), rat(1 + i as i64, 2)])
    });
    let set = |xs: &[u32]| xs.iter().copied().collect::<BTreeSet<u32>>();
    let (l, r) = lemma_bcuv(&s, &set(&[1]), &set(&[4]), &set(&[2]), &set(&[3]), order).unwrap();
    println!("twisted: {l}\n     vs: {r}");
}
