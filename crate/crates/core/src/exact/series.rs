use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::{ExactError, Rational, Ring};

/// Power series in `t` known up to and including `t^order`.
///
/// Constants built through [`Ring::zero`], [`Ring::one`] and
/// [`TruncatedSeries::constant`] are exact (`order == usize::MAX`); every
/// binary operation keeps the smaller of the two orders.
#[derive(Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
    order: usize,
}

impl TruncatedSeries {
    pub const EXACT: usize = usize::MAX;

    pub fn new(order: usize, coeffs: Vec<Rational>) -> Self {
        let mut s = TruncatedSeries { coeffs, order };
        s.normalize();
        s
    }

    pub fn constant(value: Rational) -> Self {
        Self::new(Self::EXACT, vec![value])
    }

    pub fn zero_to(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    /// `value + 0*t + ... + O(t^(order+1))`
    pub fn constant_to(value: Rational, order: usize) -> Self {
        Self::new(order, vec![value])
    }

    /// The variable `t` itself, known to the given order.
    pub fn variable(order: usize) -> Self {
        Self::new(order, vec![Rational::zero(), Rational::one()])
    }

    /// `exp(c t)` truncated at `order`.
    pub fn exp_linear(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        for k in 0..=order {
            if k > 0 {
                term = term * c / Rational::from_integer(BigInt::from(k));
            }
            coeffs.push(term.clone());
        }
        Self::new(order, coeffs)
    }

    /// `exp(k t)` for an integer `k`.
    pub fn exp_int(k: i64, order: usize) -> Self {
        Self::exp_linear(&Rational::from_integer(BigInt::from(k)), order)
    }

    fn normalize(&mut self) {
        if self.order != Self::EXACT && self.coeffs.len() > self.order + 1 {
            self.coeffs.truncate(self.order + 1);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == Self::EXACT
    }

    /// Coefficient of `t^k`. Zero beyond the stored terms.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// Lowest exponent with a nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order), self.coeffs.clone())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| c * q).collect())
    }

    /// Multiply by `t^shift`, extending the known order accordingly.
    pub fn shift_up(&self, shift: usize) -> Self {
        let order = self.order.saturating_add(shift);
        let mut coeffs = vec![Rational::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(order, coeffs)
    }

    /// Substitute `t -> -t`.
    pub fn reflect(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect();
        Self::new(self.order, coeffs)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    /// Exact division. The dividend must vanish to at least the divisor's
    /// valuation `v`; the quotient is known to `min(orders) - v`.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self, ExactError> {
        let v = divisor.valuation().ok_or(ExactError::DivisionByZero)?;
        if let Some(u) = self.valuation() {
            if u < v {
                return Err(ExactError::DivisionValuation);
            }
        }
        let order = self.order.min(divisor.order);
        if order != Self::EXACT && order < v {
            return Err(ExactError::InsufficientOrder { order, needed: v });
        }
        let out_order = if order == Self::EXACT {
            // exact / exact: only exact when the quotient is a polynomial,
            // which we do not try to detect.
            self.coeffs.len().max(divisor.coeffs.len()) + 8
        } else {
            order - v
        };
        let num: Vec<Rational> = self.coeffs.iter().skip(v).cloned().collect();
        let den: Vec<Rational> = divisor.coeffs.iter().skip(v).cloned().collect();
        let lead = den[0].clone();
        let mut q = Vec::with_capacity(out_order + 1);
        for k in 0..=out_order {
            let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
            for j in 1..=k.min(den.len().saturating_sub(1)) {
                acc -= &den[j] * &q[k - j];
            }
            q.push(acc / &lead);
        }
        Ok(Self::new(out_order, q))
    }

    /// `exp(self)`; the constant term must be zero.
    pub fn exp(&self) -> Result<Self, ExactError> {
        if !self.constant_term().is_zero() {
            return Err(ExactError::NonvanishingLowOrder { index: 0 });
        }
        let order = self.order;
        if order == Self::EXACT {
            // exp of the exact zero series
            return Ok(Self::one());
        }
        // e' = s' e, solved coefficient by coefficient
        let mut e = vec![Rational::one()];
        for k in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += Rational::from_integer(BigInt::from(j)) * self.coeff(j) * &e[k - j];
            }
            e.push(acc / Rational::from_integer(BigInt::from(k)));
        }
        Ok(Self::new(order, e))
    }

    /// `log(self)`; the constant term must be one.
    pub fn log(&self) -> Result<Self, ExactError> {
        if self.constant_term() != Rational::one() {
            return Err(ExactError::NonvanishingLowOrder { index: 0 });
        }
        let order = self.order;
        if order == Self::EXACT && self.coeffs.len() == 1 {
            return Ok(Self::zero());
        }
        let order = if order == Self::EXACT { self.coeffs.len() + 8 } else { order };
        // l' = s'/s
        let mut l = vec![Rational::zero()];
        for k in 1..=order {
            let mut acc = Rational::from_integer(BigInt::from(k)) * self.coeff(k);
            for (j, lj) in l.iter().enumerate().take(k).skip(1) {
                acc -= Rational::from_integer(BigInt::from(j)) * lj * self.coeff(k - j);
            }
            l.push(acc / Rational::from_integer(BigInt::from(k)));
        }
        Ok(Self::new(order, l))
    }
}

/// Value at `t = 0` of `numerator / (1 - e^{2t})^k`.
///
/// The numerator must vanish through `t^(k-1)`; the result is the
/// coefficient of `t^k` divided by `(-2)^k`.
pub fn series_limit_constant(numerator: &TruncatedSeries, k: usize) -> Result<Rational, ExactError> {
    if let Some(index) = numerator.coeffs.iter().take(k).position(|c| !c.is_zero()) {
        return Err(ExactError::NonvanishingLowOrder { index });
    }
    if numerator.order < k {
        return Err(ExactError::InsufficientOrder { order: numerator.order, needed: k });
    }
    let denom = Rational::from_integer(BigInt::from(-2)).pow(k as i32);
    Ok(numerator.coeff(k) / denom)
}

impl PartialEq for TruncatedSeries {
    /// Equal when all coefficients agree up to the smaller known order.
    fn eq(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        let len = self.coeffs.len().max(other.coeffs.len());
        let upto = if order == Self::EXACT { len } else { len.min(order + 1) };
        (0..upto).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Add for TruncatedSeries {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let order = self.order.min(rhs.order);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Self::new(order, coeffs)
    }
}

impl Sub for TruncatedSeries {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for TruncatedSeries {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.order, self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for TruncatedSeries {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let order = self.order.min(rhs.order);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::new(order, Vec::new());
        }
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let len = if order == Self::EXACT { full } else { full.min(order + 1) };
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::new(order, coeffs)
    }
}

impl Ring for TruncatedSeries {
    fn zero() -> Self {
        Self::new(Self::EXACT, Vec::new())
    }

    fn one() -> Self {
        Self::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_rational(q: Rational) -> Self {
        Self::constant(q)
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.constant_term().is_zero() {
            return None;
        }
        if self.is_exact() && self.coeffs.len() == 1 {
            return Some(Self::constant(self.coeffs[0].recip()));
        }
        Self::constant_to(Rational::one(), self.order).checked_div(self).ok()
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != Rational::one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        if !self.is_exact() {
            write!(f, " + O(t^{})", self.order + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn s(order: usize, c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(order, c.iter().map(|&v| rat(v, 1)).collect())
    }

    #[test]
    fn limit_of_minus_two_t() {
        assert_eq!(series_limit_constant(&s(3, &[0, -2]), 1).unwrap(), rat(1, 1));
    }

    #[test]
    fn limit_of_zero_series() {
        assert_eq!(series_limit_constant(&s(3, &[]), 2).unwrap(), rat(0, 1));
    }

    #[test]
    fn limit_recovers_prefactor() {
        // (1 - e^{2t})^2 (3/5 + t)
        let one_minus = TruncatedSeries::one() - TruncatedSeries::exp_int(2, 4);
        let tail = TruncatedSeries::new(4, vec![rat(3, 5), rat(1, 1)]);
        let num = one_minus.pow(2) * tail;
        assert_eq!(series_limit_constant(&num, 2).unwrap(), rat(3, 5));
    }

    #[test]
    fn limit_rejects_low_order_terms() {
        let err = series_limit_constant(&s(3, &[0, 1, 1]), 2).unwrap_err();
        assert_eq!(err, ExactError::NonvanishingLowOrder { index: 1 });
    }

    #[test]
    fn multiplication_truncates() {
        let a = s(2, &[1, 1]);
        let sq = a.clone() * a;
        assert_eq!(sq.coeffs(), &[rat(1, 1), rat(2, 1), rat(1, 1)]);
        let cube = sq * s(2, &[1, 1]);
        assert_eq!(cube.coeffs(), &[rat(1, 1), rat(3, 1), rat(3, 1)]);
        assert_eq!(cube.order(), 2);
    }

    #[test]
    fn division_shifts_valuation() {
        let num = s(5, &[0, 0, 2, 4]);
        let den = s(5, &[0, 1, 1]);
        let q = num.checked_div(&den).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q * den, num.truncate(4));
        assert_eq!(s(5, &[0, 1]).checked_div(&s(5, &[0, 0, 1])), Err(ExactError::DivisionValuation));
    }

    #[test]
    fn exp_log_round_trip() {
        let x = TruncatedSeries::new(6, vec![rat(0, 1), rat(1, 2), rat(-3, 1), rat(2, 7)]);
        assert_eq!(x.exp().unwrap().log().unwrap(), x);
        assert_eq!(TruncatedSeries::variable(5).scale(&rat(3, 1)).exp().unwrap(), TruncatedSeries::exp_int(3, 5));
    }

    #[test]
    fn display_is_stable() {
        assert_eq!(s(2, &[1, -1, 3]).to_string(), "1 - t + 3*t^2 + O(t^3)");
        assert_eq!(TruncatedSeries::zero().to_string(), "0");
    }
}
