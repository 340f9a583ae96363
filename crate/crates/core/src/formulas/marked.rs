use std::fmt;

use super::FormulaError;
use crate::dyck::{AugPath, Symbol};
use crate::exact::{Ring, SquareMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mark {
    /// `⊕`
    Plus,
    /// `⊖`
    Minus,
    /// `◯`
    Circle,
    /// `⊙`
    Dot,
}

impl Mark {
    pub fn symbol(self) -> char {
        match self {
            Mark::Plus => '⊕',
            Mark::Minus => '⊖',
            Mark::Circle => '◯',
            Mark::Dot => '⊙',
        }
    }
}

/// A word of marks with node labels; labels may repeat.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedString(pub Vec<(Mark, u32)>);

impl MarkedString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn marks(&self) -> &[(Mark, u32)] {
        &self.0
    }

    /// Labels carrying the given mark, in order.
    pub fn labels_of(&self, mark: Mark) -> Vec<u32> {
        self.0.iter().filter(|(m, _)| *m == mark).map(|&(_, l)| l).collect()
    }
}

impl fmt::Display for MarkedString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (m, l)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{l}", m.symbol())?;
        }
        Ok(())
    }
}

fn marked(mu: &AugPath, doubled: Symbol, pair: [Mark; 2]) -> MarkedString {
    let f = mu.flat_label();
    let mut out = Vec::with_capacity(mu.len() + 4);
    for &(s, l) in mu.symbols() {
        match s {
            Symbol::Up => out.push((if l < f { Mark::Plus } else { Mark::Circle }, l)),
            Symbol::Down => out.push((if l < f { Mark::Circle } else { Mark::Minus }, l)),
            Symbol::Flat => out.push((Mark::Circle, l)),
            Symbol::Sink => out.push((Mark::Dot, l)),
            s if s == doubled => {
                out.push((pair[0], l));
                out.push((pair[1], l));
            }
            _ => {}
        }
    }
    MarkedString(out)
}

/// Drop `I`, double each `S` as `◯⊙`, then mark the steps.
pub fn to_bar(mu: &AugPath) -> MarkedString {
    marked(mu, Symbol::Single, [Mark::Circle, Mark::Dot])
}

/// Drop `S`, double each `I` as `⊙◯`, then mark the steps.
pub fn to_dddot(mu: &AugPath) -> MarkedString {
    marked(mu, Symbol::Internal, [Mark::Dot, Mark::Circle])
}

/// Symmetric values `A(i,j)` and antisymmetric derivatives `A'(i,j)` over
/// labels `1..=n`, stored 0-based.
#[derive(Clone, Debug, PartialEq)]
pub struct Jets<S> {
    pub a: SquareMatrix<S>,
    pub ap: SquareMatrix<S>,
}

impl<S: Ring> Jets<S> {
    pub fn new(a: SquareMatrix<S>, ap: SquareMatrix<S>) -> Result<Self, FormulaError> {
        if a.dim() != ap.dim() {
            return Err(FormulaError::BadParams("value and derivative tables differ in size".into()));
        }
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                if *a.get(i, j) != *a.get(j, i) || !(ap.get(i, j).clone() + ap.get(j, i).clone()).is_zero() {
                    return Err(FormulaError::AsymmetricInput(i as u32 + 1, j as u32 + 1));
                }
            }
        }
        Ok(Jets { a, ap })
    }

    pub fn size(&self) -> usize {
        self.a.dim()
    }

    pub fn a(&self, i: u32, j: u32) -> &S {
        self.a.get(i as usize - 1, j as usize - 1)
    }

    pub fn ap(&self, i: u32, j: u32) -> &S {
        self.ap.get(i as usize - 1, j as usize - 1)
    }
}

/// The antisymmetric matrix `M_σ(A, A')`.
pub fn build_m_sigma<S: Ring>(sigma: &MarkedString, jets: &Jets<S>) -> Result<SquareMatrix<S>, FormulaError> {
    let marks = sigma.marks();
    if let Some(&(_, l)) = marks.iter().find(|&&(_, l)| l == 0 || l as usize > jets.size()) {
        return Err(FormulaError::LabelOutOfRange(l));
    }
    let ind = |m: Mark, target: Mark| if m == target { 1 } else { 0 };
    let m = SquareMatrix::from_fn(marks.len(), |x, y| {
        if x == y {
            return S::zero();
        }
        let (mi, li) = marks[x];
        let (mj, lj) = marks[y];
        let a = jets.a(li, lj).clone();
        match (mi == Mark::Dot, mj == Mark::Dot) {
            (true, true) => S::zero(),
            (false, true) => a,
            (true, false) => -a,
            (false, false) => {
                let k = ind(mi, Mark::Plus) - ind(mj, Mark::Plus) - ind(mi, Mark::Minus) + ind(mj, Mark::Minus);
                let drift = if k == 0 { S::zero() } else { a * S::from_i64(k) };
                drift - jets.ap(li, lj).clone()
            }
        }
    });
    m.check_antisymmetric().map_err(|_| FormulaError::AsymmetricInput(0, 0))?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::FormalPolynomial as P;

    fn show(s: &MarkedString) -> String {
        s.to_string().replace(' ', "")
    }

    #[test]
    fn fourteen_node_marks() {
        let mu = AugPath::parse("USUDDIDFIUSUDO").unwrap();
        assert_eq!(show(&to_dddot(&mu)), "⊕1⊕3◯4◯5⊙6◯6◯7◯8⊙9◯9◯10◯12⊖13⊙14");
        assert_eq!(show(&to_bar(&mu)), "⊕1◯2⊙2⊕3◯4◯5◯7◯8◯10◯11⊙11◯12⊖13⊙14");
    }

    #[test]
    fn seven_node_marks() {
        let mu = AugPath::parse("USIDIFO").unwrap();
        assert_eq!(show(&to_dddot(&mu)), "⊕1⊙3◯3◯4⊙5◯5◯6⊙7");
        assert_eq!(show(&to_bar(&mu)), "⊕1◯2⊙2◯4◯6⊙7");
        let fo = AugPath::parse("FO").unwrap();
        assert_eq!(show(&to_bar(&fo)), "◯1⊙2");
        assert_eq!(show(&to_dddot(&fo)), "◯1⊙2");
    }

    fn symbolic(n: u32) -> Jets<P> {
        let a = SquareMatrix::from_fn(n as usize, |i, j| P::sym(i as u32 + 1, j as u32 + 1));
        let ap = SquareMatrix::from_fn(n as usize, |i, j| P::anti(i as u32 + 1, j as u32 + 1));
        Jets::new(a, ap).unwrap()
    }

    #[test]
    fn entries_with_minus_column() {
        let sigma = MarkedString(vec![(Mark::Plus, 1), (Mark::Minus, 13)]);
        let m = build_m_sigma(&sigma, &symbolic(13)).unwrap();
        assert_eq!(*m.get(0, 1), P::sym(1, 13).scale(&crate::exact::rat(2, 1)) - P::anti(1, 13));
    }

    #[test]
    fn two_by_two() {
        let sigma = MarkedString(vec![(Mark::Circle, 1), (Mark::Dot, 2)]);
        let m = build_m_sigma(&sigma, &symbolic(2)).unwrap();
        assert_eq!(*m.get(0, 1), P::sym(1, 2));
        assert_eq!(*m.get(1, 0), -P::sym(1, 2));
        assert!(m.get(0, 0).is_zero());
    }

    #[test]
    fn rejects_asymmetric_tables() {
        let a = SquareMatrix::from_rows(vec![vec![P::one(), P::sym(1, 2)], vec![P::one(), P::one()]]).unwrap();
        assert!(matches!(Jets::new(a, SquareMatrix::zeros(2)), Err(FormulaError::AsymmetricInput(..))));
    }

    #[test]
    fn label_range_checked() {
        let sigma = MarkedString(vec![(Mark::Circle, 1), (Mark::Dot, 3)]);
        assert_eq!(build_m_sigma(&sigma, &symbolic(2)), Err(FormulaError::LabelOutOfRange(3)));
    }
}
