use std::collections::BTreeSet;
use std::fmt;

use super::path::paths_above_heights;
use super::{DyckError, DyckPath, Step};

/// Role of a node in an augmented cyclic Dyck path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Up,
    Down,
    /// The partner of the sink.
    Flat,
    Single,
    Internal,
    /// The sink node `n`, written `O`.
    Sink,
}

impl Symbol {
    pub fn from_char(c: char) -> Result<Self, DyckError> {
        Ok(match c {
            'U' => Symbol::Up,
            'D' => Symbol::Down,
            'F' => Symbol::Flat,
            'S' => Symbol::Single,
            'I' => Symbol::Internal,
            'O' | '⊙' => Symbol::Sink,
            other => return Err(DyckError::InvalidSymbol(other)),
        })
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Up => 'U',
            Symbol::Down => 'D',
            Symbol::Flat => 'F',
            Symbol::Single => 'S',
            Symbol::Internal => 'I',
            Symbol::Sink => 'O',
        }
    }

    fn is_step(self) -> bool {
        matches!(self, Symbol::Up | Symbol::Down)
    }
}

/// Labelled augmented cyclic Dyck path: one symbol per node, exactly one
/// `F`, the sink `O` last, and the `U`/`D` letters forming a Dyck path once
/// the `F` is rotated to the end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AugPath {
    symbols: Vec<(Symbol, u32)>,
}

impl AugPath {
    pub fn new(symbols: Vec<(Symbol, u32)>) -> Result<Self, DyckError> {
        let flats = symbols.iter().filter(|(s, _)| *s == Symbol::Flat).count();
        if flats != 1 {
            return Err(DyckError::FlatCount(flats));
        }
        let sinks = symbols.iter().filter(|(s, _)| *s == Symbol::Sink).count();
        if sinks != 1 || symbols.last().map(|(s, _)| *s) != Some(Symbol::Sink) {
            return Err(DyckError::SinkPlacement);
        }
        if symbols.first().is_some_and(|&(_, l)| l == 0) || symbols.windows(2).any(|w| w[0].1 >= w[1].1) {
            return Err(DyckError::LabelsNotIncreasing);
        }
        let path = AugPath { symbols };
        DyckPath::from_steps(path.rotated_steps())?;
        Ok(path)
    }

    /// Parse letters `U D F S I O`; labels are `1..=n`.
    pub fn parse(word: &str) -> Result<Self, DyckError> {
        let symbols = word
            .chars()
            .filter(|c| !c.is_whitespace())
            .enumerate()
            .map(|(i, c)| Symbol::from_char(c).map(|s| (s, i as u32 + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[(Symbol, u32)] {
        &self.symbols
    }

    pub fn symbol(&self, pos: usize) -> Symbol {
        self.symbols[pos].0
    }

    pub fn label(&self, pos: usize) -> u32 {
        self.symbols[pos].1
    }

    /// Label of the sink.
    pub fn sink_label(&self) -> u32 {
        self.symbols.last().expect("validated path").1
    }

    /// 0-based position of `F`.
    pub fn flat_position(&self) -> usize {
        self.symbols.iter().position(|(s, _)| *s == Symbol::Flat).expect("validated path")
    }

    pub fn flat_label(&self) -> u32 {
        self.symbols[self.flat_position()].1
    }

    /// Positions of the `U`/`D` letters in cyclic order starting just after `F`.
    pub fn rotated_positions(&self) -> Vec<usize> {
        let f = self.flat_position();
        let last = self.symbols.len() - 1;
        (f + 1..last).chain(0..f).filter(|&i| self.symbols[i].0.is_step()).collect()
    }

    fn rotated_steps(&self) -> Vec<Step> {
        self.rotated_positions()
            .into_iter()
            .map(|i| if self.symbols[i].0 == Symbol::Up { Step::Up } else { Step::Down })
            .collect()
    }

    /// The labelled Dyck path obtained by rotating `F` to the end.
    pub fn core(&self) -> DyckPath {
        let pos = self.rotated_positions();
        let labels = pos.iter().map(|&i| self.symbols[i].1).collect();
        DyckPath::new(self.rotated_steps(), labels).expect("validated path")
    }

    /// Same path with the `U`/`D` letters replaced, in rotated order.
    fn with_core_steps(&self, steps: &[Step]) -> AugPath {
        let mut symbols = self.symbols.clone();
        for (&i, s) in self.rotated_positions().iter().zip(steps) {
            symbols[i].0 = if *s == Step::Up { Symbol::Up } else { Symbol::Down };
        }
        AugPath { symbols }
    }

    /// All `mu` with `self <= mu`: same labels and non-step letters, core
    /// weakly above. Sorted lexicographically by core height sequence.
    pub fn paths_above(&self) -> Vec<AugPath> {
        let floor = self.core().heights();
        paths_above_heights(&floor).iter().map(|steps| self.with_core_steps(steps)).collect()
    }

    /// `self <= other` in the order on augmented paths.
    pub fn precedes(&self, other: &AugPath) -> bool {
        self.symbols.len() == other.symbols.len()
            && self
                .symbols
                .iter()
                .zip(&other.symbols)
                .all(|(a, b)| a.1 == b.1 && (a.0 == b.0 || (a.0.is_step() && b.0.is_step())))
            && other.core().lies_above(&self.core())
    }

    /// Exchange the roles of `S` and `I`.
    pub fn swap_single_internal(&self) -> AugPath {
        let symbols = self
            .symbols
            .iter()
            .map(|&(s, l)| {
                let s = match s {
                    Symbol::Single => Symbol::Internal,
                    Symbol::Internal => Symbol::Single,
                    other => other,
                };
                (s, l)
            })
            .collect();
        AugPath { symbols }
    }

    /// Drop every `S` and `I`, keeping labels.
    pub fn excise_single_internal(&self) -> AugPath {
        let symbols =
            self.symbols.iter().copied().filter(|(s, _)| !matches!(s, Symbol::Single | Symbol::Internal)).collect();
        AugPath { symbols }
    }

    /// Labels carrying the given symbol, ascending.
    pub fn labels_of(&self, symbol: Symbol) -> Vec<u32> {
        self.symbols.iter().filter(|(s, _)| *s == symbol).map(|&(_, l)| l).collect()
    }

    /// Letters with subscript labels, e.g. `U1S2I3D4I5F6O7`.
    pub fn to_labeled_string(&self) -> String {
        self.symbols.iter().map(|(s, l)| format!("{}{l}", s.to_char())).collect()
    }
}

impl fmt::Display for AugPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, _) in &self.symbols {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

/// Pairs, singletons and internalized nodes of `{1..n}`, with `n` paired.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialPairing {
    n: u32,
    pairs: Vec<(u32, u32)>,
    singletons: BTreeSet<u32>,
    internalized: BTreeSet<u32>,
}

impl PartialPairing {
    pub fn new(
        n: u32,
        pairs: Vec<(u32, u32)>,
        singletons: impl IntoIterator<Item = u32>,
        internalized: impl IntoIterator<Item = u32>,
    ) -> Result<Self, DyckError> {
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let singletons: BTreeSet<u32> = singletons.into_iter().collect();
        let internalized: BTreeSet<u32> = internalized.into_iter().collect();
        let mut seen = BTreeSet::new();
        let members = pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(singletons.iter().copied())
            .chain(internalized.iter().copied());
        for v in members {
            if v == 0 || v > n {
                return Err(DyckError::BadPairing(format!("node {v} outside 1..={n}")));
            }
            if !seen.insert(v) {
                return Err(DyckError::BadPairing(format!("node {v} listed twice")));
            }
        }
        if seen.len() != n as usize {
            return Err(DyckError::BadPairing("every node must be paired, single or internalized".into()));
        }
        if !pairs.iter().any(|&(a, b)| a == n || b == n) {
            return Err(DyckError::NodeNUnpaired(n));
        }
        Ok(PartialPairing { n, pairs, singletons, internalized })
    }

    /// Parse `1,3|2|4,6`: parts separated by `|`, members by `,`. Nodes not
    /// listed are internalized.
    pub fn parse(text: &str, n: u32) -> Result<Self, DyckError> {
        let mut pairs = Vec::new();
        let mut singles = Vec::new();
        let mut listed = BTreeSet::new();
        for part in text.split('|').map(str::trim).filter(|p| !p.is_empty()) {
            let members = part
                .split(',')
                .map(|m| m.trim().parse::<u32>().map_err(|_| DyckError::BadPairing(format!("bad node {m:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            listed.extend(members.iter().copied());
            match members.as_slice() {
                [a] => singles.push(*a),
                [a, b] => pairs.push((*a, *b)),
                _ => return Err(DyckError::BadPairing(format!("part {part:?} has more than two nodes"))),
            }
        }
        let internal: Vec<u32> = (1..=n).filter(|v| !listed.contains(v)).collect();
        Self::new(n, pairs, singles, internal)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn singletons(&self) -> &BTreeSet<u32> {
        &self.singletons
    }

    pub fn internalized(&self) -> &BTreeSet<u32> {
        &self.internalized
    }

    /// Every valid partial pairing on `n` nodes with `n` paired and an
    /// annular encoding, in encoding-string order.
    pub fn all_encodable(n: u32) -> Vec<PartialPairing> {
        let mut out: Vec<AugPath> = Vec::new();
        if n < 2 {
            return Vec::new();
        }
        let letters = [Symbol::Up, Symbol::Down, Symbol::Single, Symbol::Internal];
        for flat in 1..n {
            let others: Vec<u32> = (1..n).filter(|&v| v != flat).collect();
            let total = 4usize.pow(others.len() as u32);
            for code in 0..total {
                let mut c = code;
                let mut symbols: Vec<(Symbol, u32)> = Vec::with_capacity(n as usize);
                let mut roles = vec![Symbol::Flat; n as usize];
                for &v in &others {
                    roles[v as usize - 1] = letters[c % 4];
                    c /= 4;
                }
                roles[n as usize - 1] = Symbol::Sink;
                for (i, s) in roles.into_iter().enumerate() {
                    symbols.push((s, i as u32 + 1));
                }
                if let Ok(p) = AugPath::new(symbols) {
                    out.push(p);
                }
            }
        }
        out.sort_by_key(|p| p.to_string());
        out.iter().map(decode_path).collect()
    }
}

impl fmt::Display for PartialPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<Vec<u32>> = self.pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        parts.extend(self.singletons.iter().map(|&s| vec![s]));
        parts.sort_by_key(|p| p[0]);
        let text: Vec<String> =
            parts.iter().map(|p| p.iter().map(u32::to_string).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", text.join("|"))
    }
}

/// Encode a partial pairing as its augmented cyclic Dyck path.
pub fn encode_pairing(tau: &PartialPairing) -> Result<AugPath, DyckError> {
    let n = tau.n;
    let partner = tau
        .pairs
        .iter()
        .find_map(|&(a, b)| {
            if b == n {
                Some(a)
            } else if a == n {
                Some(b)
            } else {
                None
            }
        })
        .ok_or(DyckError::NodeNUnpaired(n))?;
    let mut roles = vec![Symbol::Internal; n as usize];
    roles[n as usize - 1] = Symbol::Sink;
    roles[partner as usize - 1] = Symbol::Flat;
    for &s in &tau.singletons {
        roles[s as usize - 1] = Symbol::Single;
    }
    // cyclic distance after the partner, over 1..n-1
    let offset = |v: u32| (v + (n - 1) - partner) % (n - 1);
    for &(a, b) in &tau.pairs {
        if a == n || b == n {
            continue;
        }
        let (first, second) = if offset(a) < offset(b) { (a, b) } else { (b, a) };
        roles[first as usize - 1] = Symbol::Up;
        roles[second as usize - 1] = Symbol::Down;
    }
    let symbols = roles.into_iter().enumerate().map(|(i, s)| (s, i as u32 + 1)).collect();
    let path = AugPath::new(symbols).map_err(|e| match e {
        DyckError::NotDyck => DyckError::CrossingPairs,
        other => other,
    })?;
    if decode_path(&path) != *tau {
        return Err(DyckError::CrossingPairs);
    }
    Ok(path)
}

/// Recover the partial pairing; node numbers are the path's labels.
pub fn decode_path(lambda: &AugPath) -> PartialPairing {
    let mut pairs = Vec::new();
    let mut stack = Vec::new();
    for pos in lambda.rotated_positions() {
        let (s, l) = lambda.symbols[pos];
        if s == Symbol::Up {
            stack.push(l);
        } else {
            pairs.push((stack.pop().expect("validated path"), l));
        }
    }
    pairs.push((lambda.flat_label(), lambda.sink_label()));
    let mut pairs: Vec<(u32, u32)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    pairs.sort_unstable();
    PartialPairing {
        n: lambda.sink_label(),
        pairs,
        singletons: lambda.labels_of(Symbol::Single).into_iter().collect(),
        internalized: lambda.labels_of(Symbol::Internal).into_iter().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourteen_node_example() {
        let tau = PartialPairing::parse("1,5|2|3,4|7,10|8,14|11|12,13", 14).unwrap();
        let lambda = encode_pairing(&tau).unwrap();
        assert_eq!(lambda.to_string(), "USUDDIDFIUSUDO");
        assert_eq!(decode_path(&lambda), tau);
        let core = lambda.core();
        assert_eq!(core.to_string(), "UUDUUDDD");
        assert_eq!(core.labels(), &[10, 12, 13, 1, 3, 4, 5, 7]);
    }

    #[test]
    fn four_node_example() {
        let tau = PartialPairing::parse("1,3|2,4", 4).unwrap();
        let lambda = encode_pairing(&tau).unwrap();
        assert_eq!(lambda.to_string(), "DFUO");
        assert_eq!(decode_path(&lambda), tau);
    }

    #[test]
    fn two_node_example() {
        let tau = PartialPairing::parse("1,2", 2).unwrap();
        let lambda = encode_pairing(&tau).unwrap();
        assert_eq!(lambda.to_string(), "FO");
        assert_eq!(lambda.core(), DyckPath::empty());
        assert_eq!(decode_path(&lambda), tau);
    }

    #[test]
    fn core_rotation() {
        let lambda = AugPath::parse("UDFUIDO").unwrap();
        let core = lambda.core();
        assert_eq!(core.to_string(), "UDUD");
        assert_eq!(core.labels(), &[4, 6, 1, 2]);
    }

    #[test]
    fn crossing_and_unpaired() {
        let crossing = PartialPairing::parse("1,3|2,5|4,6", 6).unwrap();
        assert_eq!(encode_pairing(&crossing), Err(DyckError::CrossingPairs));
        assert_eq!(PartialPairing::parse("1,2|3", 4), Err(DyckError::NodeNUnpaired(4)));
        // encodable as a Dyck word but with the wrong matching
        let wrong = PartialPairing::parse("1,3|2,4|5,6", 6).unwrap();
        assert_eq!(encode_pairing(&wrong), Err(DyckError::CrossingPairs));
    }

    #[test]
    fn paper_mu_sets() {
        let two: Vec<String> = AugPath::parse("UDFUIDO").unwrap().paths_above().iter().map(|p| p.to_string()).collect();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&"UDFUIDO".to_string()) && two.contains(&"DDFUIUO".to_string()));

        let five: BTreeSet<String> =
            AugPath::parse("USDFUDUIDO").unwrap().paths_above().iter().map(|p| p.to_string()).collect();
        let expected: BTreeSet<String> = ["USDFUDUIDO", "USDFUUDIDO", "DSDFUDUIUO", "DSDFUUDIUO", "DSDFUUUIDO"]
            .into_iter()
            .map(String::from)
            .collect();
        assert_eq!(five, expected);
    }

    #[test]
    fn maximal_core_has_nothing_above() {
        let lambda = AugPath::parse("FUUDDO").unwrap();
        assert_eq!(lambda.paths_above(), vec![lambda]);
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 2..=8 {
            for tau in PartialPairing::all_encodable(n) {
                let lambda = encode_pairing(&tau).unwrap();
                assert_eq!(decode_path(&lambda), tau);
            }
        }
    }

    #[test]
    fn order_is_upward_closed() {
        for k in 0..=5usize {
            for lower in DyckPath::all(k) {
                let word: String =
                    std::iter::once('F').chain(lower.to_string().chars()).chain(std::iter::once('O')).collect();
                let lambda = AugPath::parse(&word).unwrap();
                let above = lambda.paths_above();
                let all: Vec<AugPath> =
                    DyckPath::all(k).iter().map(|p| AugPath::parse(&format!("F{p}O")).unwrap()).collect();
                for mu in &all {
                    assert_eq!(above.contains(mu), lambda.precedes(mu));
                    if above.contains(mu) {
                        for nu in mu.paths_above() {
                            assert!(above.contains(&nu));
                        }
                    }
                }
            }
        }
    }
}
