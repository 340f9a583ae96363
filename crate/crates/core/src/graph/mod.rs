//! Weighted graphs embedded in an annulus, with a zipper recording how
//! often each directed edge crosses a fixed cut.
//!
//! Nodes are vertices `1..=n`; node `n` sits on the inner boundary and also
//! serves as the sink of the Green's function. Vertices `n+1..=V` are
//! internal.

mod electric;
mod text;

pub use electric::{
    green_data, green_series, laplacian_series, response_data, response_series, GreenData, ResponseData,
};

use thiserror::Error;

use crate::exact::{Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("grounded Laplacian is singular (is the graph connected?)")]
    SingularLaplacian,
    #[error("internal block of the Laplacian is singular")]
    SingularInternalBlock,
    #[error("derivative matrix is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Rational,
    /// Signed number of zipper crossings when traversed from `u` to `v`.
    pub zip: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnularGraph {
    vertices: usize,
    nodes: usize,
    edges: Vec<Edge>,
}

impl AnnularGraph {
    pub fn new(vertices: usize, nodes: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        if nodes == 0 || nodes > vertices {
            return Err(GraphError::Invalid(format!("need 1 <= nodes <= vertices, got {nodes} and {vertices}")));
        }
        for e in &edges {
            if e.u == 0 || e.v == 0 || e.u > vertices || e.v > vertices {
                return Err(GraphError::Invalid(format!("edge {}-{} leaves 1..={vertices}", e.u, e.v)));
            }
            if e.u == e.v {
                return Err(GraphError::Invalid(format!("self-loop at {}", e.u)));
            }
            if e.weight <= Rational::zero() {
                return Err(GraphError::Invalid(format!("edge {}-{} has non-positive weight", e.u, e.v)));
            }
        }
        Ok(AnnularGraph { vertices, nodes, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Same graph with every zipper count set to zero.
    pub fn unzipped(&self) -> Self {
        let edges = self.edges.iter().map(|e| Edge { zip: 0, ..e.clone() }).collect();
        AnnularGraph { edges, ..self.clone() }
    }

    /// One of the shipped test graphs: `FIX-A`, `FIX-B` or `FIX-C`.
    pub fn fixture(name: &str) -> Result<Self, GraphError> {
        let text = match name.to_ascii_uppercase().as_str() {
            "FIX-A" => include_str!("../../fixtures/fix_a.graph"),
            "FIX-B" => include_str!("../../fixtures/fix_b.graph"),
            "FIX-C" => include_str!("../../fixtures/fix_c.graph"),
            _ => return Err(GraphError::UnknownFixture(name.to_string())),
        };
        Self::parse(text)
    }
}
