use std::collections::BTreeSet;

use super::FormulaError;
use crate::exact::{Rational, Ring, SquareMatrix};
use crate::graph::ResponseData;

fn check_labels<'a>(n: usize, sets: impl IntoIterator<Item = &'a BTreeSet<u32>>) -> Result<(), FormulaError> {
    for s in sets {
        if let Some(&l) = s.iter().find(|&&l| l == 0 || l as usize > n) {
            return Err(FormulaError::LabelOutOfRange(l));
        }
    }
    Ok(())
}

/// `A - Aᵀ` where `A(i,j) = L(i,j)` unless `i` is a sink (in `C`) or `j` is
/// a source (in `B`), in which case it is zero.
pub fn tripartite_matrix(
    l: &SquareMatrix<Rational>,
    b: &BTreeSet<u32>,
    c: &BTreeSet<u32>,
) -> Result<SquareMatrix<Rational>, FormulaError> {
    if !b.is_disjoint(c) {
        return Err(FormulaError::BadBlocks("sources and sinks overlap".into()));
    }
    check_labels(l.dim(), [b, c])?;
    let a = SquareMatrix::from_fn(l.dim(), |i, j| {
        if c.contains(&(i as u32 + 1)) || b.contains(&(j as u32 + 1)) {
            Rational::zero()
        } else {
            l.get(i, j).clone()
        }
    });
    Ok(a.sub(&a.transpose()))
}

/// Pfaffian of [`tripartite_matrix`] for the response matrix at `z = 1`.
pub fn tripartite_pfaffian(l: &ResponseData, b: &BTreeSet<u32>, c: &BTreeSet<u32>) -> Result<Rational, FormulaError> {
    Ok(tripartite_matrix(&l.l, b, c)?.pfaffian()?)
}

/// One row/column of the α/β matrix: a node, or the primed copy of a node
/// in `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Node(u32),
    Prime(u32),
}

impl Slot {
    pub fn label(self) -> u32 {
        match self {
            Slot::Node(l) | Slot::Prime(l) => l,
        }
    }
}

/// Rows indexed by `P` in increasing order, then `t′, t` for each `t` in
/// `T`. Entry `(x, y)` is `α_x β_y L(x,y) - α_y β_x L(y,x)`, with primed
/// copies carrying `α = 0`, `β = 1`. `alpha` and `beta` are indexed by
/// node label minus one.
pub fn alpha_beta_pf_matrix(
    l: &SquareMatrix<Rational>,
    alpha: &[Rational],
    beta: &[Rational],
    p: &BTreeSet<u32>,
    t: &BTreeSet<u32>,
) -> Result<(SquareMatrix<Rational>, Vec<Slot>), FormulaError> {
    let n = l.dim();
    if alpha.len() != n || beta.len() != n {
        return Err(FormulaError::BadParams(format!("need {n} values of alpha and beta")));
    }
    check_labels(n, [p, t])?;
    if !p.is_disjoint(t) || p.len() % 2 == 1 {
        return Err(FormulaError::BadParams("P and T must be disjoint with |P| even".into()));
    }
    let one = Rational::one();
    if let Some(&x) = t.iter().find(|&&x| alpha[x as usize - 1] != one || beta[x as usize - 1] != one) {
        return Err(FormulaError::BadParams(format!("alpha and beta must be 1 on internalized node {x}")));
    }
    let mut slots: Vec<Slot> = p.iter().map(|&x| Slot::Node(x)).collect();
    for &x in t {
        slots.push(Slot::Prime(x));
        slots.push(Slot::Node(x));
    }
    let weights = |s: Slot| match s {
        Slot::Node(x) => (alpha[x as usize - 1].clone(), beta[x as usize - 1].clone()),
        Slot::Prime(_) => (Rational::zero(), Rational::one()),
    };
    let m = SquareMatrix::from_fn(slots.len(), |x, y| {
        if x == y {
            return Rational::zero();
        }
        let (ax, bx) = weights(slots[x]);
        let (ay, by) = weights(slots[y]);
        let (i, j) = (slots[x].label() as usize - 1, slots[y].label() as usize - 1);
        ax * by * l.get(i, j).clone() - ay * bx * l.get(j, i).clone()
    });
    Ok((m, slots))
}

/// `det L` on rows `R` and columns `S`, both in the order given.
pub fn cim_determinant(l: &SquareMatrix<Rational>, r: &[u32], s: &[u32]) -> Result<Rational, FormulaError> {
    if r.len() != s.len() {
        return Err(FormulaError::BadParams("row and column sets differ in size".into()));
    }
    if let Some(&x) = r.iter().chain(s).find(|&&x| x == 0 || x as usize > l.dim()) {
        return Err(FormulaError::LabelOutOfRange(x));
    }
    let idx = |v: &[u32]| v.iter().map(|&x| x as usize - 1).collect::<Vec<_>>();
    Ok(l.submatrix(&idx(r), &idx(s)).determinant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn set(xs: &[u32]) -> BTreeSet<u32> {
        xs.iter().copied().collect()
    }

    fn sample(n: usize) -> SquareMatrix<Rational> {
        SquareMatrix::from_fn(n, |i, j| if i == j { rat(-3, 1) } else { rat(((i + j) % 4 + 1) as i64, 2) })
    }

    #[test]
    fn empty_blocks_vanish() {
        let l = sample(4);
        let m = tripartite_matrix(&l, &set(&[]), &set(&[])).unwrap();
        assert_eq!(m, SquareMatrix::zeros(4));
        assert!(m.pfaffian().unwrap().is_zero());
    }

    #[test]
    fn block_structure() {
        let l = sample(6);
        let m = tripartite_matrix(&l, &set(&[1, 2]), &set(&[5, 6])).unwrap();
        assert!(m.get(0, 1).is_zero() && m.get(4, 5).is_zero());
        assert_eq!(*m.get(0, 4), *l.get(0, 4));
        assert_eq!(*m.get(4, 0), -l.get(0, 4).clone());
        assert!(tripartite_matrix(&l, &set(&[1]), &set(&[1])).is_err());
    }

    #[test]
    fn alpha_beta_specializations() {
        let l = sample(6);
        let ones = vec![rat(1, 1); 6];
        let all = set(&[1, 2, 3, 4, 5, 6]);
        let (m, slots) = alpha_beta_pf_matrix(&l, &ones, &ones, &all, &set(&[])).unwrap();
        assert_eq!(slots.len(), 6);
        assert_eq!(m, SquareMatrix::zeros(6));

        let (b, c) = (set(&[1, 2]), set(&[5, 6]));
        let alpha: Vec<Rational> = (1..=6).map(|i| rat(!c.contains(&i) as i64, 1)).collect();
        let beta: Vec<Rational> = (1..=6).map(|i| rat(!b.contains(&i) as i64, 1)).collect();
        let (m, _) = alpha_beta_pf_matrix(&l, &alpha, &beta, &all, &set(&[])).unwrap();
        assert_eq!(m, tripartite_matrix(&l, &b, &c).unwrap());
    }

    #[test]
    fn alpha_beta_slots_and_errors() {
        let l = sample(5);
        let ones = vec![rat(1, 1); 5];
        let (m, slots) = alpha_beta_pf_matrix(&l, &ones, &ones, &set(&[1, 3]), &set(&[4])).unwrap();
        assert_eq!(slots, vec![Slot::Node(1), Slot::Node(3), Slot::Prime(4), Slot::Node(4)]);
        assert_eq!(*m.get(2, 3), -l.get(3, 3).clone());
        assert!(m.check_antisymmetric().is_ok());
        assert!(alpha_beta_pf_matrix(&l, &ones, &ones, &set(&[1]), &set(&[])).is_err());
        let mut bad = ones.clone();
        bad[3] = rat(2, 1);
        assert!(alpha_beta_pf_matrix(&l, &bad, &ones, &set(&[1, 3]), &set(&[4])).is_err());
    }

    #[test]
    fn cim_singletons() {
        let l = sample(4);
        assert_eq!(cim_determinant(&l, &[1], &[3]).unwrap(), *l.get(0, 2));
        assert!(cim_determinant(&l, &[1, 2], &[3]).is_err());
    }
}
