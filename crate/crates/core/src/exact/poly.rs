use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{Rational, Ring};

/// Polynomial variables in the electrical quantities of a single family
/// (`G` or `L`): the symmetric value, its antisymmetric derivative, and the
/// per-node shift `f(i)` used by the coboundary substitution.
///
/// Build variables through [`FormalPolynomial::sym`] and
/// [`FormalPolynomial::anti`], which canonicalise the index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `A(i,j)` with `i <= j`.
    Sym(u32, u32),
    /// `A'(i,j)` with `i < j`.
    Anti(u32, u32),
    /// `f(i)`.
    Shift(u32),
}

/// Sorted list of `(variable, exponent)` with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: BTreeMap<Var, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            *out.entry(v).or_insert(0) += e;
        }
        Monomial(out.into_iter().collect())
    }
}

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FormalPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl FormalPolynomial {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        FormalPolynomial { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), Rational::one());
        FormalPolynomial { terms }
    }

    /// `A(i,j)`, identified with `A(j,i)`.
    pub fn sym(i: u32, j: u32) -> Self {
        Self::var(Var::Sym(i.min(j), i.max(j)))
    }

    /// `A'(i,j) = -A'(j,i)`; zero on the diagonal.
    pub fn anti(i: u32, j: u32) -> Self {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Self::zero(),
            std::cmp::Ordering::Less => Self::var(Var::Anti(i, j)),
            std::cmp::Ordering::Greater => -Self::var(Var::Anti(j, i)),
        }
    }

    pub fn shift(i: u32) -> Self {
        Self::var(Var::Shift(i))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        FormalPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect() }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Ring homomorphism fixing constants: each variable with a replacement
    /// is substituted, the rest are kept.
    pub fn substitute<F>(&self, mut image: F) -> Self
    where
        F: FnMut(Var) -> Option<FormalPolynomial>,
    {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for &(v, e) in m.factors() {
                let base = image(v).unwrap_or_else(|| Self::var(v));
                for _ in 0..e {
                    term = term * base.clone();
                }
            }
            out = out + term;
        }
        out
    }

    /// Evaluate at rational values.
    pub fn evaluate<F>(&self, mut value: F) -> Rational
    where
        F: FnMut(Var) -> Rational,
    {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.factors() {
                let x = value(v);
                for _ in 0..e {
                    term *= &x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Render with the variable family name, e.g. `G[1,2]`, `G'[1,3]`, `f[2]`.
    pub fn display_with<'a>(&'a self, family: &'a str) -> impl fmt::Display + 'a {
        Render { poly: self, family }
    }
}

struct Render<'a> {
    poly: &'a FormalPolynomial,
    family: &'a str,
}

impl fmt::Display for Render<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.poly.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let factors = m.factors();
            if factors.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != Rational::one() {
                write!(f, "{mag}*")?;
            }
            for (k, &(v, e)) in factors.iter().enumerate() {
                if k > 0 {
                    write!(f, "*")?;
                }
                match v {
                    Var::Sym(i, j) => write!(f, "{}[{i},{j}]", self.family)?,
                    Var::Anti(i, j) => write!(f, "{}'[{i},{j}]", self.family)?,
                    Var::Shift(i) => write!(f, "f[{i}]")?,
                }
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FormalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("A"))
    }
}

impl Add for FormalPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for FormalPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FormalPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        FormalPolynomial { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Mul for FormalPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Ring for FormalPolynomial {
    fn zero() -> Self {
        FormalPolynomial { terms: BTreeMap::new() }
    }

    fn one() -> Self {
        Self::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_rational(q: Rational) -> Self {
        Self::constant(q)
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && m.factors().is_empty() => Some(Self::constant(c.recip())),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    type P = FormalPolynomial;

    #[test]
    fn variable_identities() {
        assert_eq!(P::sym(3, 1), P::sym(1, 3));
        assert_eq!(P::anti(3, 1), -P::anti(1, 3));
        assert!(P::anti(2, 2).is_zero());
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = P::anti(1, 2) + P::anti(2, 1);
        assert!(p.is_empty());
    }

    #[test]
    fn display_sorted_and_signed() {
        let p = -P::anti(1, 2) - P::anti(2, 3) - P::anti(3, 1);
        assert_eq!(p.display_with("G").to_string(), "-G'[1,2] + G'[1,3] - G'[2,3]");
        let q = P::sym(3, 4) * P::anti(1, 2).scale(&rat(-2, 1)) + P::one();
        assert_eq!(q.display_with("L").to_string(), "1 - 2*L[3,4]*L'[1,2]");
    }

    #[test]
    fn integrality() {
        assert!((P::sym(1, 2).scale(&rat(3, 1))).is_integral());
        assert!(!(P::sym(1, 2).scale(&rat(1, 2))).is_integral());
    }

    #[test]
    fn substitution_telescopes() {
        let p = -P::anti(1, 2) - P::anti(2, 3) - P::anti(3, 1);
        let shifted = p.substitute(|v| match v {
            Var::Anti(i, j) => Some(P::var(Var::Anti(i, j)) + P::shift(i) - P::shift(j)),
            _ => None,
        });
        assert_eq!(shifted, p);
    }
}
