use std::collections::BTreeSet;

use itertools::Itertools;

use super::{FormulaError, Jets, Mode, ZStar};
use crate::dyck::{count_ci_tilings, cycle_lemma_pairing, AugPath, Symbol};
use crate::exact::{series_limit_constant, Rational, Ring, SquareMatrix, TruncatedSeries};
use crate::graph::{green_series, response_series, AnnularGraph, GreenData, ResponseData};

/// Which expansion of the electrical quantities feeds the determinant sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// `A + A' t`.
    Linear,
    /// The full series of the line-bundle Green's function or response matrix.
    Full,
}

fn positions_of(path: &AugPath, pred: impl Fn(Symbol, usize) -> bool) -> BTreeSet<u32> {
    path.symbols().iter().enumerate().filter(|&(p, &(s, _))| pred(s, p)).map(|(p, _)| p as u32 + 1).collect()
}

/// 1-based positions of up steps before `F` and of down steps after it.
pub(super) fn ups_before_downs_after(path: &AugPath) -> (BTreeSet<u32>, BTreeSet<u32>) {
    let f = path.flat_position();
    (positions_of(path, |s, p| s == Symbol::Up && p < f), positions_of(path, |s, p| s == Symbol::Down && p > f))
}

fn check_star(lambda_star: &AugPath, s_star: &BTreeSet<u32>) -> Result<(), FormulaError> {
    let n = lambda_star.len() as u32;
    if lambda_star.symbols().iter().any(|(s, _)| matches!(s, Symbol::Single | Symbol::Internal)) {
        return Err(FormulaError::BadSet("path still contains S or I".into()));
    }
    if !s_star.contains(&n) || s_star.len() as u32 != n / 2 || s_star.iter().any(|&i| i == 0 || i > n) {
        return Err(FormulaError::BadSet(format!("S* must hold {n} and have {} positions", n / 2)));
    }
    Ok(())
}

/// Tiling-weighted generating series over `mu >= lambda*`, at `ζ = e^{2t}`.
/// The exponent of `ζ` for `mu` is the number of its up steps in `S*`,
/// minus the positions of `S*` other than the last that follow `F`, plus the
/// down steps of `lambda*` after `F`.
pub fn b_series(lambda_star: &AugPath, s_star: &BTreeSet<u32>, order: usize) -> Result<TruncatedSeries, FormulaError> {
    check_star(lambda_star, s_star)?;
    let weighted = weighted_paths(lambda_star)?;
    Ok(b_from_paths(lambda_star, &weighted, s_star, order))
}

fn weighted_paths(lambda_star: &AugPath) -> Result<Vec<(AugPath, u64)>, FormulaError> {
    let lower = lambda_star.core();
    lambda_star
        .paths_above()
        .into_iter()
        .map(|mu| {
            let c = count_ci_tilings(&lower, &mu.core())?;
            Ok((mu, c))
        })
        .collect()
}

fn b_from_paths(
    lambda_star: &AugPath,
    weighted: &[(AugPath, u64)],
    s_star: &BTreeSet<u32>,
    order: usize,
) -> TruncatedSeries {
    let n = lambda_star.len() as u32;
    let f = lambda_star.flat_position() as u32 + 1;
    let lambda_downs_after = ups_before_downs_after(lambda_star).1.len() as i64;
    let s_after = s_star.iter().filter(|&&i| i > f && i != n).count() as i64;
    let mut acc = TruncatedSeries::zero_to(order);
    for (mu, c) in weighted {
        let ups = s_star.iter().filter(|&&i| mu.symbol(i as usize - 1) == Symbol::Up).count() as i64;
        let e = ups - s_after + lambda_downs_after;
        acc = acc + TruncatedSeries::exp_int(2 * e, order).scale(&Rational::from_integer((*c).into()));
    }
    acc
}

/// `Σ_{R*} weight(S*) · det A[λ*(R*) ∪ E, λ*(S*) ∪ E]` with rows and
/// columns in cycle-lemma order, `E` appended last. `R*` ranges over
/// half-size subsets of `1..n*` avoiding `n*`.
pub(super) fn rstar_sum<F>(
    lambda_star: &AugPath,
    a: &SquareMatrix<TruncatedSeries>,
    extra: &[u32],
    order: usize,
    mut weight: F,
) -> Result<TruncatedSeries, FormulaError>
where
    F: FnMut(&BTreeSet<u32>) -> TruncatedSeries,
{
    let n = lambda_star.len() as u32;
    if let Some(&l) = lambda_star.symbols().iter().map(|(_, l)| l).chain(extra).find(|&&l| l as usize > a.dim()) {
        return Err(FormulaError::LabelOutOfRange(l));
    }
    let label = |p: u32| lambda_star.label(p as usize - 1) as usize - 1;
    let mut acc = TruncatedSeries::zero_to(order);
    for r in (1..n).combinations(n as usize / 2) {
        let s: Vec<u32> = (1..=n).filter(|i| !r.contains(i)).collect();
        let pairs = cycle_lemma_pairing(&r, &s, n)?;
        let mut rows: Vec<usize> = pairs.iter().map(|&(r, _)| label(r)).collect();
        let mut cols: Vec<usize> = pairs.iter().map(|&(_, s)| label(s)).collect();
        rows.extend(extra.iter().map(|&l| l as usize - 1));
        cols.extend(extra.iter().map(|&l| l as usize - 1));
        let det = a.submatrix(&rows, &cols).determinant();
        let s_set: BTreeSet<u32> = s.into_iter().collect();
        acc = acc + weight(&s_set) * det;
    }
    Ok(acc.truncate(order))
}

/// `Σ_{R*} B(λ*, S*) det A[..] / (1 - e^{2t})^k` for an arbitrary series
/// matrix `A` on the labels, with `λ*` the path with `S` and `I` removed.
pub fn zstar_lambda(
    lambda: &AugPath,
    a: &SquareMatrix<TruncatedSeries>,
    extra: &[u32],
    order: usize,
) -> Result<ZStar, FormulaError> {
    let (numerator, k) = zstar_lambda_numerator(lambda, a, extra, order)?;
    ZStar::from_numerator(numerator, k)
}

fn zstar_lambda_numerator(
    lambda: &AugPath,
    a: &SquareMatrix<TruncatedSeries>,
    extra: &[u32],
    order: usize,
) -> Result<(TruncatedSeries, usize), FormulaError> {
    let star = lambda.excise_single_internal();
    let weighted = weighted_paths(&star)?;
    let k = star.len() / 2 - 1;
    let numerator = rstar_sum(&star, a, extra, order, |s| b_from_paths(&star, &weighted, s, order))?;
    Ok((numerator, k))
}

/// The limit `t -> 0` of the determinant sum. `a_hat` is the label-indexed
/// series matrix (sink row and column pinned to 1 in mode G). Mode G uses
/// singletons as the appended labels; mode L uses internalized nodes and a
/// sign `(-1)^{|T|}`.
pub fn det_formula(
    lambda: &AugPath,
    a_hat: &SquareMatrix<TruncatedSeries>,
    mode: Mode,
) -> Result<Rational, FormulaError> {
    let extra = match mode {
        Mode::G => lambda.labels_of(Symbol::Single),
        Mode::L => lambda.labels_of(Symbol::Internal),
    };
    let k = lambda.excise_single_internal().len() / 2 - 1;
    let (numerator, k2) = zstar_lambda_numerator(lambda, a_hat, &extra, k)?;
    debug_assert_eq!(k, k2);
    let value = series_limit_constant(&numerator, k)?;
    Ok(if mode == Mode::L && extra.len() % 2 == 1 { -value } else { value })
}

/// `A + A' t` as a series matrix known to `order`.
pub fn linearized(jets: &Jets<Rational>, order: usize) -> SquareMatrix<TruncatedSeries> {
    SquareMatrix::from_fn(jets.size(), |i, j| {
        TruncatedSeries::new(order, vec![jets.a.get(i, j).clone(), jets.ap.get(i, j).clone()])
    })
}

/// Node block of the Green's function series with the sink row and column
/// replaced by 1.
pub fn pinned_green_series(series: &SquareMatrix<TruncatedSeries>, n: usize) -> SquareMatrix<TruncatedSeries> {
    SquareMatrix::from_fn(
        n,
        |i, j| {
            if i == n - 1 || j == n - 1 {
                TruncatedSeries::one()
            } else {
                series.get(i, j).clone()
            }
        },
    )
}

/// [`det_formula`] with the series built from a graph.
pub fn det_formula_for_graph(
    lambda: &AugPath,
    g: &AnnularGraph,
    mode: Mode,
    expansion: Expansion,
) -> Result<Rational, FormulaError> {
    let n = g.node_count();
    let order = lambda.excise_single_internal().len() / 2 - 1;
    let a_hat = match (mode, expansion) {
        (Mode::G, Expansion::Linear) => linearized(&Jets::from_green(&graph_green(g)?, n), order),
        (Mode::L, Expansion::Linear) => linearized(&Jets::from_response(&graph_response(g)?), order),
        (Mode::G, Expansion::Full) => pinned_green_series(&green_series(g, order)?, n),
        (Mode::L, Expansion::Full) => response_series(g, order)?,
    };
    det_formula(lambda, &a_hat, mode)
}

fn graph_green(g: &AnnularGraph) -> Result<GreenData, FormulaError> {
    Ok(crate::graph::green_data(g)?)
}

fn graph_response(g: &AnnularGraph) -> Result<ResponseData, FormulaError> {
    Ok(crate::graph::response_data(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn set(xs: &[u32]) -> BTreeSet<u32> {
        xs.iter().copied().collect()
    }

    #[test]
    fn b_series_small_cases() {
        let fo = AugPath::parse("FO").unwrap();
        assert_eq!(b_series(&fo, &set(&[2]), 3).unwrap(), TruncatedSeries::constant(rat(1, 1)));
        let dfuo = AugPath::parse("DFUO").unwrap();
        assert_eq!(b_series(&dfuo, &set(&[1, 4]), 3).unwrap(), TruncatedSeries::constant(rat(1, 1)));
        assert!(b_series(&dfuo, &set(&[1, 2]), 3).is_err());
        assert!(b_series(&AugPath::parse("SFO").unwrap(), &set(&[3]), 3).is_err());
    }

    #[test]
    fn b_series_by_enumeration() {
        // lambda* = UDFUDO: mu in {UDFUDO, DDFUUO}, one tiling each
        // (single-box shape for the second). S* = {2,4,6}.
        // UDFUDO: ups in S* = {4} -> 1; S* after F minus n: {4} -> 1; lambda downs after F: {5} -> 1
        // DDFUUO: ups in S* = {4} -> 1; same corrections -> exponent 1
        let lambda = AugPath::parse("UDFUDO").unwrap();
        let mus = lambda.paths_above();
        assert_eq!(mus.len(), 2);
        let got = b_series(&lambda, &set(&[2, 4, 6]), 4).unwrap();
        assert_eq!(got, TruncatedSeries::exp_int(2, 4).scale(&rat(2, 1)));
        // S* = {1,2,6}: UDFUDO -> ups {1}: 1 - 0 + 1 = 2; DDFUUO -> ups {} : 0 - 0 + 1 = 1
        let got = b_series(&lambda, &set(&[1, 2, 6]), 4).unwrap();
        assert_eq!(got, TruncatedSeries::exp_int(4, 4) + TruncatedSeries::exp_int(2, 4));
    }

    #[test]
    fn exponent_forms_agree() {
        // ups in S* before F minus downs in S* after F equals the form used
        // in b_from_paths, for every mu and S*.
        let lambda = AugPath::parse("UDUDFUDO").unwrap();
        let n = lambda.len() as u32;
        for mu in lambda.paths_above() {
            let f = mu.flat_position() as u32 + 1;
            for r in (1..n).combinations(n as usize / 2) {
                let s: BTreeSet<u32> = (1..=n).filter(|i| !r.contains(i)).collect();
                let sym = |i: &&u32| mu.symbol(**i as usize - 1);
                let ups = s.iter().filter(|i| sym(i) == Symbol::Up).count() as i64;
                let after = s.iter().filter(|&&i| i > f && i != n).count() as i64;
                let before_up = s.iter().filter(|&&i| i < f && sym(&&i) == Symbol::Up).count() as i64;
                let after_down = s.iter().filter(|&&i| i > f && sym(&&i) == Symbol::Down).count() as i64;
                assert_eq!(ups - after, before_up - after_down);
            }
        }
    }
}
