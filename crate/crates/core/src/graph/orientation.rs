use std::fmt;

use super::{full_set, members, Digraph, Graph, VertexSet};
use crate::error::{Error, Result};

/// A choice of direction for every edge of an undirected graph.
///
/// Acyclicity is not an invariant; operations that need it check it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    graph: Graph,
    out: Vec<VertexSet>,
}

impl Orientation {
    /// Every arrow must be an edge of `graph`, and every edge must get exactly one arrow.
    pub fn new(graph: Graph, arrows: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = graph.n();
        let mut out = vec![0; n];
        for (u, v) in arrows {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if !graph.has_edge(u, v) {
                return Err(Error::InvalidOrientation(format!("{u}>{v} is not an edge")));
            }
            if out[v] >> u & 1 == 1 {
                return Err(Error::InvalidOrientation(format!(
                    "edge {u}-{v} directed both ways"
                )));
            }
            out[u] |= 1 << v;
        }
        Self::from_out_rows(graph, out)
    }

    /// Builds from out-neighbour rows, checking that each edge is directed exactly once.
    pub fn from_out_rows(graph: Graph, out: Vec<VertexSet>) -> Result<Self> {
        if out.len() != graph.n() {
            return Err(Error::InvalidOrientation("row count mismatch".into()));
        }
        for (u, v) in graph.edges() {
            let fwd = out[u] >> v & 1 == 1;
            let back = out[v] >> u & 1 == 1;
            if fwd == back {
                return Err(Error::InvalidOrientation(format!(
                    "edge {u}-{v} must be directed exactly once"
                )));
            }
        }
        for (u, &row) in out.iter().enumerate() {
            if row & !graph.neighbors(u) != 0 {
                return Err(Error::InvalidOrientation(format!(
                    "arrow from {u} is not an edge"
                )));
            }
        }
        Ok(Orientation { graph, out })
    }

    /// Orients every edge from its larger label to its smaller one.
    pub fn towards_smaller(graph: Graph) -> Self {
        let out = (0..graph.n())
            .map(|v| graph.neighbors(v) & full_set(v))
            .collect();
        Orientation { graph, out }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn points(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn out_set(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    pub fn arrows(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| members(self.out[u]).map(move |v| (u, v)))
            .collect()
    }

    pub fn as_digraph(&self) -> Digraph {
        Digraph::from_rows(self.out.clone()).expect("within bounds")
    }

    pub fn is_acyclic(&self) -> bool {
        self.as_digraph().is_acyclic()
    }

    /// Sinks of the orientation restricted to `within`.
    pub fn sinks_within(&self, within: VertexSet) -> VertexSet {
        members(within)
            .filter(|&v| self.out[v] & within == 0)
            .fold(0, |s, v| s | 1 << v)
    }

    /// Sources of the orientation restricted to `within`.
    pub fn sources_within(&self, within: VertexSet) -> VertexSet {
        members(within)
            .filter(|&v| (self.graph.neighbors(v) & within) & !self.out[v] == 0)
            .fold(0, |s, v| s | 1 << v)
    }

    pub fn sinks(&self) -> VertexSet {
        self.sinks_within(full_set(self.n()))
    }

    pub fn sources(&self) -> VertexSet {
        self.sources_within(full_set(self.n()))
    }

    /// Reverses every arrow incident to `v`.
    pub(crate) fn flip(&mut self, v: usize) {
        for w in members(self.graph.neighbors(v)) {
            self.out[v] ^= 1 << w;
            self.out[w] ^= 1 << v;
        }
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compact form, e.g. `orientation 3: 1>0 2>1`.
impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "orientation {}:", self.n())?;
        for (u, v) in self.arrows() {
            write!(f, " {u}>{v}")?;
        }
        Ok(())
    }
}
