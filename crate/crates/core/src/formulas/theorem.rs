use super::{build_m_sigma, to_bar, to_dddot, FormulaError, Jets, Mode};
use crate::dyck::{count_ci_tilings, AugPath};
use crate::exact::{FormalPolynomial, Rational, Ring, SquareMatrix, Var};
use crate::graph::{GreenData, ResponseData};

/// One summand: `coefficient * Pf M(mu)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term<S> {
    pub mu: AugPath,
    pub coefficient: u64,
    pub pfaffian: S,
}

/// A tiling-weighted sum of Pfaffians together with its summands.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioResult<S> {
    pub value: S,
    pub terms: Vec<Term<S>>,
}

impl Jets<Rational> {
    /// Green's function jets on the nodes `1..=n`, with every entry in the
    /// sink's row or column replaced by 1 (derivative 0).
    pub fn from_green(data: &GreenData, n: usize) -> Self {
        let sink = n - 1;
        let a =
            SquareMatrix::from_fn(
                n,
                |i, j| {
                    if i == sink || j == sink {
                        Rational::one()
                    } else {
                        data.g.get(i, j).clone()
                    }
                },
            );
        let ap =
            SquareMatrix::from_fn(
                n,
                |i, j| {
                    if i == sink || j == sink {
                        Rational::zero()
                    } else {
                        data.gp.get(i, j).clone()
                    }
                },
            );
        Jets { a, ap }
    }

    pub fn from_response(data: &ResponseData) -> Self {
        Jets { a: data.l.clone(), ap: data.lp.clone() }
    }
}

impl Jets<FormalPolynomial> {
    /// Formal variables `A(i,j)`, `A'(i,j)` on `n` labels. In mode G the
    /// sink row and column of `A` are the constant 1.
    pub fn symbolic(n: usize, mode: Mode) -> Self {
        let sink = n as u32;
        let pinned = |i: u32, j: u32| mode == Mode::G && (i == sink || j == sink);
        let a = SquareMatrix::from_fn(n, |i, j| {
            let (i, j) = (i as u32 + 1, j as u32 + 1);
            if pinned(i, j) {
                FormalPolynomial::one()
            } else {
                FormalPolynomial::sym(i, j)
            }
        });
        let ap = SquareMatrix::from_fn(n, |i, j| {
            let (i, j) = (i as u32 + 1, j as u32 + 1);
            if pinned(i, j) {
                FormalPolynomial::zero()
            } else {
                FormalPolynomial::anti(i, j)
            }
        });
        Jets { a, ap }
    }
}

/// `sum over mu >= lambda` of (cover-inclusive tilings of the skew shape)
/// times `Pf M(mu)`, with `M` built from the barred string in mode G and the
/// double-dotted string in mode L.
pub fn theorem1_eval<S: Ring>(lambda: &AugPath, jets: &Jets<S>, mode: Mode) -> Result<RatioResult<S>, FormulaError> {
    let lower = lambda.core();
    let mut value = S::zero();
    let mut terms = Vec::new();
    for mu in lambda.paths_above() {
        let coefficient = count_ci_tilings(&lower, &mu.core())?;
        let sigma = match mode {
            Mode::G => to_bar(&mu),
            Mode::L => to_dddot(&mu),
        };
        let pfaffian = build_m_sigma(&sigma, jets)?.pfaffian()?;
        value = value + pfaffian.clone() * S::from_i64(coefficient as i64);
        terms.push(Term { mu, coefficient, pfaffian });
    }
    Ok(RatioResult { value, terms })
}

/// The theorem's right side as a polynomial in formal variables.
pub fn theorem1_symbolic(lambda: &AugPath, mode: Mode) -> Result<FormalPolynomial, FormulaError> {
    let jets = Jets::symbolic(lambda.sink_label() as usize, mode);
    Ok(theorem1_eval(lambda, &jets, mode)?.value)
}

/// Outcome of the integrality and coboundary checks for one path.
#[derive(Clone, Debug, PartialEq)]
pub struct CorollaryReport {
    pub poly_g: FormalPolynomial,
    pub poly_l: FormalPolynomial,
    pub integral_g: bool,
    pub integral_l: bool,
    /// `G'(i,j) -> G'(i,j) + f(i) - f(j)` leaves the mode-G polynomial unchanged.
    pub coboundary_invariant: bool,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.integral_g && self.integral_l && self.coboundary_invariant
    }
}

pub fn corollary_checks(lambda: &AugPath) -> Result<CorollaryReport, FormulaError> {
    let poly_g = theorem1_symbolic(lambda, Mode::G)?;
    let poly_l = theorem1_symbolic(lambda, Mode::L)?;
    let shifted = poly_g.substitute(|v| match v {
        Var::Anti(i, j) => Some(FormalPolynomial::var(v) + FormalPolynomial::shift(i) - FormalPolynomial::shift(j)),
        _ => None,
    });
    Ok(CorollaryReport {
        integral_g: poly_g.is_integral(),
        integral_l: poly_l.is_integral(),
        coboundary_invariant: shifted == poly_g,
        poly_g,
        poly_l,
    })
}
