use std::fmt;
use std::str::FromStr;

use super::{AnnularGraph, Edge, GraphError};
use crate::exact::Rational;

const HEADER: &str = "annular-graph v1";

impl AnnularGraph {
    /// Read the line format:
    ///
    /// ```text
    /// annular-graph v1
    /// vertices 4 nodes 4
    /// edge 1 2 1/1 0
    /// ```
    ///
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line, msg: &str| GraphError::Parse { line, msg: msg.to_string() };

        match lines.next() {
            Some((_, HEADER)) => {}
            Some((line, _)) => return Err(err(line, "expected header `annular-graph v1`")),
            None => return Err(err(1, "empty input")),
        }
        let (line, sizes) = lines.next().ok_or_else(|| err(2, "missing `vertices V nodes n` line"))?;
        let words: Vec<&str> = sizes.split_whitespace().collect();
        let (vertices, nodes) = match words.as_slice() {
            ["vertices", v, "nodes", n] => (
                v.parse::<usize>().map_err(|_| err(line, "bad vertex count"))?,
                n.parse::<usize>().map_err(|_| err(line, "bad node count"))?,
            ),
            _ => return Err(err(line, "expected `vertices V nodes n`")),
        };

        let mut edges = Vec::new();
        for (line, l) in lines {
            let words: Vec<&str> = l.split_whitespace().collect();
            let ["edge", u, v, w, zip] = words.as_slice() else {
                return Err(err(line, "expected `edge u v p/q zip`"));
            };
            edges.push(Edge {
                u: u.parse().map_err(|_| err(line, "bad endpoint"))?,
                v: v.parse().map_err(|_| err(line, "bad endpoint"))?,
                weight: Rational::from_str(w).map_err(|_| err(line, "bad weight"))?,
                zip: zip.parse().map_err(|_| err(line, "bad zipper count"))?,
            });
        }
        AnnularGraph::new(vertices, nodes, edges).map_err(|e| match e {
            GraphError::Invalid(msg) => GraphError::Parse { line, msg },
            other => other,
        })
    }
}

impl fmt::Display for AnnularGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        writeln!(f, "vertices {} nodes {}", self.vertices, self.nodes)?;
        for e in &self.edges {
            writeln!(f, "edge {} {} {}/{} {}", e.u, e.v, e.weight.numer(), e.weight.denom(), e.zip)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn round_trip() {
        let text = "annular-graph v1\n\n# comment\nvertices 3 nodes 2\nedge 1 2 3/2 +1 # trailing\nedge 2 3 2 0\n";
        let g = AnnularGraph::parse(text).unwrap();
        assert_eq!(g.edges()[0].weight, rat(3, 2));
        assert_eq!(g.edges()[0].zip, 1);
        let printed = g.to_string();
        assert_eq!(printed, "annular-graph v1\nvertices 3 nodes 2\nedge 1 2 3/2 1\nedge 2 3 2/1 0\n");
        assert_eq!(AnnularGraph::parse(&printed).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        let bad = "annular-graph v1\nvertices 2 nodes 2\nedge 1 2 x 0\n";
        assert_eq!(AnnularGraph::parse(bad), Err(GraphError::Parse { line: 3, msg: "bad weight".into() }));
        assert!(matches!(AnnularGraph::parse("graph\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(AnnularGraph::parse("annular-graph v1\nvertices 2 nodes 2\nedge 1 2 -1/1 0\n").is_err());
    }
}
