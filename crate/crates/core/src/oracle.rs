//! Ground truth by brute force: every spanning forest of a small graph,
//! grouped by how it connects the nodes.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::dyck::PartialPairing;
use crate::exact::{Rational, Ring};
use crate::graph::AnnularGraph;

/// Edge-count cap for exhaustive enumeration.
pub const MAX_EDGES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} edges; enumeration is capped at {MAX_EDGES}")]
    TooLarge(usize),
    #[error("pairing is on {pairing} nodes but the graph has {graph}")]
    NodeCountMismatch { pairing: usize, graph: usize },
    #[error("denominator partition has zero weight")]
    ZeroDenominator,
}

/// A set partition of the nodes, blocks sorted, each block sorted.
pub type NodePartition = Vec<Vec<u32>>;

/// Total grove weight for each node partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroveTally {
    nodes: u32,
    weights: BTreeMap<NodePartition, Rational>,
}

impl GroveTally {
    pub fn node_count(&self) -> u32 {
        self.nodes
    }

    /// `Z[sigma]`; zero when no grove realises the partition.
    pub fn weight(&self, partition: &[Vec<u32>]) -> Rational {
        self.weights.get(&canonical(partition.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Spanning trees: every node in one block.
    pub fn all_connected(&self) -> Rational {
        self.weight(&[(1..=self.nodes).collect()])
    }

    /// Every node in its own block.
    pub fn all_separate(&self) -> Rational {
        let blocks: NodePartition = (1..=self.nodes).map(|i| vec![i]).collect();
        self.weight(&blocks)
    }

    pub fn total(&self) -> Rational {
        self.weights.values().fold(Rational::zero(), |a, b| a + b)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NodePartition, &Rational)> {
        self.weights.iter()
    }
}

impl fmt::Display for GroveTally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, w) in &self.weights {
            let blocks: Vec<String> =
                p.iter().map(|b| b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")).collect();
            writeln!(f, "{}\t{w}", blocks.join("|"))?;
        }
        Ok(())
    }
}

fn canonical(mut blocks: NodePartition) -> NodePartition {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.retain(|b| !b.is_empty());
    blocks.sort();
    blocks
}

fn find(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

/// Enumerate all forests in which every tree contains a node, tallying
/// their weights by the induced partition of the nodes.
pub fn enumerate_groves(g: &AnnularGraph) -> Result<GroveTally, OracleError> {
    let edges = g.edges();
    if edges.len() > MAX_EDGES {
        return Err(OracleError::TooLarge(edges.len()));
    }
    let v = g.vertex_count();
    let n = g.node_count();
    let mut weights = BTreeMap::new();

    // include/exclude each edge in turn, never closing a cycle
    let mut stack: Vec<(usize, Vec<usize>, Rational)> = vec![(0, (0..v).collect(), Rational::one())];
    while let Some((k, parent, w)) = stack.pop() {
        if k == edges.len() {
            let roots: Vec<usize> = (0..v).map(|x| find(&parent, x)).collect();
            let mut blocks: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
            for (x, &r) in roots.iter().enumerate().take(n) {
                blocks.entry(r).or_default().push(x as u32 + 1);
            }
            if roots.iter().all(|r| blocks.contains_key(r)) {
                let key = canonical(blocks.into_values().collect());
                let slot = weights.entry(key).or_insert_with(Rational::zero);
                *slot = slot.clone() + w;
            }
            continue;
        }
        let e = &edges[k];
        let (a, b) = (find(&parent, e.u - 1), find(&parent, e.v - 1));
        if a != b {
            let mut joined = parent.clone();
            joined[a.max(b)] = a.min(b);
            stack.push((k + 1, joined, w.clone() * e.weight.clone()));
        }
        stack.push((k + 1, parent, w));
    }
    Ok(GroveTally { nodes: n as u32, weights })
}

/// `Z[tau]`: groves whose partition, restricted to the listed nodes, is
/// exactly the pairs and singletons of `tau`. Internalized nodes may sit in
/// any tree, but every tree needs a listed node.
pub fn z_partial(tally: &GroveTally, tau: &PartialPairing) -> Result<Rational, OracleError> {
    if tau.n() != tally.nodes {
        return Err(OracleError::NodeCountMismatch { pairing: tau.n() as usize, graph: tally.nodes as usize });
    }
    let mut target: NodePartition = tau.pairs().iter().map(|&(a, b)| vec![a, b]).collect();
    target.extend(tau.singletons().iter().map(|&s| vec![s]));
    let target = canonical(target);
    let hidden = tau.internalized();
    let mut acc = Rational::zero();
    for (p, w) in &tally.weights {
        let restricted: NodePartition =
            p.iter().map(|b| b.iter().copied().filter(|x| !hidden.contains(x)).collect()).collect();
        if restricted.iter().any(Vec::is_empty) {
            continue;
        }
        if canonical(restricted) == target {
            acc += w;
        }
    }
    Ok(acc)
}

/// `Z[tau] / Z[1,2,...,n]`.
pub fn ratio_bar(tally: &GroveTally, tau: &PartialPairing) -> Result<Rational, OracleError> {
    divide(z_partial(tally, tau)?, tally.all_connected())
}

/// `Z[tau] / Z[1|2|...|n]`.
pub fn ratio_dot(tally: &GroveTally, tau: &PartialPairing) -> Result<Rational, OracleError> {
    divide(z_partial(tally, tau)?, tally.all_separate())
}

fn divide(num: Rational, den: Rational) -> Result<Rational, OracleError> {
    if den.is_zero() {
        return Err(OracleError::ZeroDenominator);
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::{laplacian_series, Edge};

    fn tally(name: &str) -> GroveTally {
        enumerate_groves(&AnnularGraph::fixture(name).unwrap()).unwrap()
    }

    #[test]
    fn fix_a_counts() {
        let t = tally("FIX-A");
        assert_eq!(t.all_connected(), rat(8, 1));
        assert_eq!(t.all_separate(), rat(1, 1));
        assert_eq!(t.weight(&[vec![1, 3], vec![2, 4]]), rat(1, 1));
        let tau = PartialPairing::parse("1,3|2,4", 4).unwrap();
        assert_eq!(ratio_bar(&t, &tau).unwrap(), rat(1, 8));
        assert_eq!(ratio_dot(&t, &tau).unwrap(), rat(1, 1));
    }

    #[test]
    fn internalized_nodes_by_hand() {
        // every tree must meet 2 or 4, and they share a tree: spanning trees only
        let t = tally("FIX-A");
        let tau = PartialPairing::parse("2,4", 4).unwrap();
        assert_eq!(z_partial(&t, &tau).unwrap(), rat(8, 1));
    }

    #[test]
    fn matrix_tree_agreement() {
        for name in ["FIX-A", "FIX-B", "FIX-C"] {
            let g = AnnularGraph::fixture(name).unwrap();
            let sink = g.node_count() - 1;
            let keep: Vec<usize> = (0..g.vertex_count()).filter(|&i| i != sink).collect();
            let lap = laplacian_series(&g, 0).map(|s| s.constant_term()).submatrix(&keep, &keep);
            assert_eq!(tally(name).all_connected(), lap.determinant(), "{name}");
        }
    }

    #[test]
    fn all_nodes_graph_has_unit_separate_weight() {
        assert_eq!(tally("FIX-B").all_separate(), rat(1, 1));
    }

    #[test]
    fn tally_total_counts_rooted_forests() {
        // Forests where every tree meets a node, on FIX-A with all vertices
        // nodes: every forest qualifies.
        let t = tally("FIX-A");
        let g = AnnularGraph::fixture("FIX-A").unwrap();
        let mut forests = 0;
        for mask in 0u32..(1 << g.edges().len()) {
            let mut parent: Vec<usize> = (0..4).collect();
            let mut ok = true;
            for (k, e) in g.edges().iter().enumerate() {
                if mask >> k & 1 == 1 {
                    let (a, b) = (find(&parent, e.u - 1), find(&parent, e.v - 1));
                    if a == b {
                        ok = false;
                        break;
                    }
                    parent[a] = b;
                }
            }
            forests += ok as i64;
        }
        assert_eq!(t.total(), rat(forests, 1));
    }

    #[test]
    fn disconnected_pair_has_zero_weight() {
        let e = |u, v| Edge { u, v, weight: rat(1, 1), zip: 0 };
        let g = AnnularGraph::new(4, 4, vec![e(1, 2), e(3, 4)]).unwrap();
        let t = enumerate_groves(&g).unwrap();
        let tau = PartialPairing::parse("1,4|2,3", 4).unwrap();
        assert!(z_partial(&t, &tau).unwrap().is_zero());
        assert_eq!(ratio_bar(&t, &tau), Err(OracleError::ZeroDenominator));
    }

    #[test]
    fn size_guard() {
        let edges: Vec<Edge> = (0..25).map(|i| Edge { u: 1, v: 2 + i % 2, weight: rat(1, 1), zip: 0 }).collect();
        let g = AnnularGraph::new(3, 3, edges).unwrap();
        assert_eq!(enumerate_groves(&g), Err(OracleError::TooLarge(25)));
    }
}
