use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::DyckError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn delta(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }
}

/// A Dyck path whose steps carry node labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
    labels: Vec<u32>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>, labels: Vec<u32>) -> Result<Self, DyckError> {
        if steps.len() != labels.len() {
            return Err(DyckError::OrderMismatch(steps.len(), labels.len()));
        }
        let mut h = 0i32;
        for s in &steps {
            h += s.delta();
            if h < 0 {
                return Err(DyckError::NotDyck);
            }
        }
        if h != 0 {
            return Err(DyckError::NotDyck);
        }
        Ok(DyckPath { steps, labels })
    }

    /// Unlabelled path from steps; labels default to `1..=2k`.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self, DyckError> {
        let labels = (1..=steps.len() as u32).collect();
        Self::new(steps, labels)
    }

    /// Parse a `U`/`D` word, e.g. `UUDD`.
    pub fn parse(word: &str) -> Result<Self, DyckError> {
        let steps = word
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                other => Err(DyckError::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_steps(steps)
    }

    pub fn empty() -> Self {
        DyckPath { steps: Vec::new(), labels: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Half-length.
    pub fn order(&self) -> usize {
        self.steps.len() / 2
    }

    /// `h_0 ..= h_2k`.
    pub fn heights(&self) -> Vec<i32> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        h.push(0);
        for s in &self.steps {
            h.push(h.last().unwrap() + s.delta());
        }
        h
    }

    /// Pointwise `self >= other`, same length.
    pub fn lies_above(&self, other: &DyckPath) -> bool {
        self.steps.len() == other.steps.len() && self.heights().iter().zip(other.heights()).all(|(a, b)| *a >= b)
    }

    /// All Dyck paths of the given order, in lexicographic order of heights.
    pub fn all(order: usize) -> Vec<DyckPath> {
        let floor = vec![0; 2 * order + 1];
        paths_above_heights(&floor)
            .into_iter()
            .map(|steps| DyckPath::from_steps(steps).expect("enumerated paths are Dyck"))
            .collect()
    }

    /// For each up step, the index of its matching down step.
    pub fn matching(&self) -> Vec<(usize, usize)> {
        let mut stack = Vec::new();
        let mut out = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => stack.push(i),
                Step::Down => out.push((stack.pop().expect("valid Dyck path"), i)),
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::Up { 'U' } else { 'D' })?;
        }
        Ok(())
    }
}

/// Step sequences of Dyck paths lying weakly above the height profile
/// `floor` (length `2k + 1`), sorted lexicographically by height sequence.
pub(crate) fn paths_above_heights(floor: &[i32]) -> Vec<Vec<Step>> {
    fn dfs(floor: &[i32], h: i32, steps: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        let len = floor.len() - 1;
        let i = steps.len();
        if i == len {
            if h == 0 {
                out.push(steps.clone());
            }
            return;
        }
        let remaining = (len - i - 1) as i32;
        for step in [Step::Down, Step::Up] {
            let next = h + step.delta();
            if next < floor[i + 1] || next < 0 || next > remaining {
                continue;
            }
            steps.push(step);
            dfs(floor, next, steps, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    dfs(floor, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of increasing labelings of the plane tree whose contour is
/// `path`: `k! / prod(subtree sizes)`.
pub fn tree_labelings_count(path: &DyckPath) -> BigUint {
    let k = path.order();
    let mut num = BigUint::one();
    for i in 2..=k {
        num *= BigUint::from(i);
    }
    let mut den = BigUint::one();
    for (up, down) in path.matching() {
        den *= BigUint::from((down - up).div_ceil(2));
    }
    num / den
}
