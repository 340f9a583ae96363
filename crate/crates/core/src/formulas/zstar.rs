use std::collections::BTreeSet;
use std::fmt;

use super::determinant::{rstar_sum, ups_before_downs_after};
use super::{to_bar, FormulaError, Mark};
use crate::dyck::{AugPath, Symbol};
use crate::exact::{ExactError, Rational, Ring, SquareMatrix, TruncatedSeries};

/// A Laurent series `t^{-pole} * scaled(t)`.
///
/// The determinant sums carry a factor `1/(1 - e^{2t})^k`, which has a pole
/// of order `k` at zero; `scaled` absorbs `(t/(1 - e^{2t}))^k` so that it is
/// an ordinary power series.
#[derive(Clone, Debug, PartialEq)]
pub struct ZStar {
    pole: usize,
    scaled: TruncatedSeries,
}

/// `t / (1 - e^{2t})` to the given order.
fn t_over_pole(order: usize) -> TruncatedSeries {
    let den = TruncatedSeries::one() - TruncatedSeries::exp_int(2, order + 1);
    TruncatedSeries::variable(order + 1).checked_div(&den).expect("valuation one over valuation one")
}

impl ZStar {
    /// `numerator / (1 - e^{2t})^k`.
    pub fn from_numerator(numerator: TruncatedSeries, k: usize) -> Result<Self, FormulaError> {
        let order = numerator.order();
        let order = if order == TruncatedSeries::EXACT { numerator.coeffs().len() + k } else { order };
        let scaled = numerator.truncate(order) * t_over_pole(order).pow(k as u32);
        Ok(ZStar { pole: k, scaled })
    }

    pub fn pole(&self) -> usize {
        self.pole
    }

    /// `t^pole` times the series.
    pub fn scaled(&self) -> &TruncatedSeries {
        &self.scaled
    }

    /// Coefficient of `t^j`, `j >= -pole`.
    pub fn coeff(&self, j: i64) -> Rational {
        let idx = j + self.pole as i64;
        if idx < 0 {
            Rational::zero()
        } else {
            self.scaled.coeff(idx as usize)
        }
    }

    /// Value at `t = 0`. Fails if the polar part does not vanish.
    pub fn constant_term(&self) -> Result<Rational, FormulaError> {
        if let Some(index) = self.scaled.coeffs().iter().take(self.pole).position(|c| !c.is_zero()) {
            return Err(ExactError::NonvanishingLowOrder { index }.into());
        }
        Ok(self.scaled.coeff(self.pole))
    }
}

impl fmt::Display for ZStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pole == 0 {
            write!(f, "{}", self.scaled)
        } else {
            write!(f, "t^-{} * ({})", self.pole, self.scaled)
        }
    }
}

/// Route used by [`zstar_mu`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    /// The explicit sum over half-size row sets.
    Direct,
    /// A single Pfaffian of the exponentially twisted matrix.
    Pfaffian,
}

/// The per-path summand of the determinant sum, for an arbitrary series
/// matrix `a` on the labels of `mu`. `S` symbols are the appended labels.
pub fn zstar_mu(
    mu: &AugPath,
    a: &SquareMatrix<TruncatedSeries>,
    via: Via,
    order: usize,
) -> Result<ZStar, FormulaError> {
    match via {
        Via::Direct => zstar_mu_direct(mu, a, order),
        Via::Pfaffian => zstar_mu_pfaffian(mu, a, order),
    }
}

fn zstar_mu_direct(mu: &AugPath, a: &SquareMatrix<TruncatedSeries>, order: usize) -> Result<ZStar, FormulaError> {
    let star = mu.excise_single_internal();
    let k = star.len() / 2 - 1;
    let (ups, downs) = ups_before_downs_after(&star);
    let extra = mu.labels_of(Symbol::Single);
    let numerator = rstar_sum(&star, a, &extra, order, |s: &BTreeSet<u32>| {
        let e = s.intersection(&ups).count() as i64 - s.intersection(&downs).count() as i64;
        TruncatedSeries::exp_int(2 * e, order)
    })?;
    ZStar::from_numerator(numerator, k)
}

fn zstar_mu_pfaffian(mu: &AugPath, a: &SquareMatrix<TruncatedSeries>, order: usize) -> Result<ZStar, FormulaError> {
    let sigma = to_bar(mu);
    let marks = sigma.marks();
    if let Some(&(_, l)) = marks.iter().find(|&&(_, l)| l as usize > a.dim()) {
        return Err(FormulaError::LabelOutOfRange(l));
    }
    let plus: BTreeSet<u32> = sigma.labels_of(Mark::Plus).into_iter().collect();
    let minus: BTreeSet<u32> = sigma.labels_of(Mark::Minus).into_iter().collect();
    let ind = |set: &BTreeSet<u32>, l: u32| set.contains(&l) as i64;
    let twisted = |i: u32, j: u32| {
        let e = ind(&plus, j) - ind(&plus, i) - ind(&minus, j) + ind(&minus, i);
        a.get(i as usize - 1, j as usize - 1).clone() * TruncatedSeries::exp_int(e, order)
    };
    let w = t_over_pole(order);
    let m = SquareMatrix::from_fn(marks.len(), |x, y| {
        let (mi, li) = marks[x];
        let (mj, lj) = marks[y];
        match (mi == Mark::Dot, mj == Mark::Dot) {
            _ if x == y => TruncatedSeries::zero_to(order),
            (true, true) => TruncatedSeries::zero_to(order),
            (false, true) => twisted(li, lj),
            (true, false) => -twisted(lj, li),
            (false, false) => (twisted(li, lj) - twisted(lj, li)) * w.clone(),
        }
    });
    let k = (marks.len() - 2 * sigma.labels_of(Mark::Dot).len()) / 2;
    let shift = plus.len() as i64 - minus.len() as i64;
    let scaled = m.pfaffian()? * TruncatedSeries::exp_int(shift, order);
    Ok(ZStar { pole: k, scaled: scaled.truncate(order) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::formulas::{build_m_sigma, Jets};

    fn poly_matrix(n: usize, seed: u64, order: usize) -> SquareMatrix<TruncatedSeries> {
        // small deterministic pseudo-random entries
        let mut x = seed;
        let mut next = || {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((x >> 33) % 9) as i64 - 4
        };
        SquareMatrix::from_fn(n, |_, _| {
            let c: Vec<Rational> = (0..3).map(|_| rat(next(), 1 + (next().rem_euclid(3)))).collect();
            TruncatedSeries::new(order, c)
        })
    }

    #[test]
    fn two_node_case() {
        let mu = AugPath::parse("FO").unwrap();
        let a = poly_matrix(2, 7, 3);
        for via in [Via::Direct, Via::Pfaffian] {
            let z = zstar_mu(&mu, &a, via, 3).unwrap();
            assert_eq!(z.pole(), 0);
            assert_eq!(*z.scaled(), a.get(0, 1).clone());
        }
    }

    #[test]
    fn routes_agree_on_seven_nodes() {
        let mu = AugPath::parse("UDFUIDO").unwrap();
        for seed in 0..5 {
            let a = poly_matrix(7, seed, 4);
            let d = zstar_mu(&mu, &a, Via::Direct, 4).unwrap();
            let p = zstar_mu(&mu, &a, Via::Pfaffian, 4).unwrap();
            assert_eq!(d.pole(), p.pole());
            assert_eq!(d.scaled().truncate(3), p.scaled().truncate(3));
        }
    }

    #[test]
    fn twist_factor_is_needed() {
        // one plus mark, no minus: dropping exp[t(|U|-|V|)] changes the series
        let mu = AugPath::parse("UDFO").unwrap();
        let a = poly_matrix(4, 3, 3);
        let d = zstar_mu(&mu, &a, Via::Direct, 3).unwrap();
        let p = zstar_mu(&mu, &a, Via::Pfaffian, 3).unwrap();
        assert_eq!(d, p);
        let untwisted = p.scaled().clone() * TruncatedSeries::exp_int(-1, 3);
        assert_ne!(*d.scaled(), untwisted);
    }

    #[test]
    fn symmetric_jets_have_no_pole() {
        let mu = AugPath::parse("USDFUDO").unwrap();
        let n = 7;
        let raw = poly_matrix(n, 11, 2);
        let a0 = SquareMatrix::from_fn(n, |i, j| raw.get(i.min(j), i.max(j)).coeff(0));
        let a1 = SquareMatrix::from_fn(n, |i, j| {
            let v = raw.get(i.min(j), i.max(j)).coeff(1);
            if i < j {
                v
            } else if i > j {
                -v
            } else {
                Rational::zero()
            }
        });
        let a =
            SquareMatrix::from_fn(n, |i, j| TruncatedSeries::new(3, vec![a0.get(i, j).clone(), a1.get(i, j).clone()]));
        let expect = build_m_sigma(&to_bar(&mu), &Jets::new(a0, a1).unwrap()).unwrap().pfaffian().unwrap();
        for via in [Via::Direct, Via::Pfaffian] {
            assert_eq!(zstar_mu(&mu, &a, via, 3).unwrap().constant_term().unwrap(), expect);
        }
    }
}
