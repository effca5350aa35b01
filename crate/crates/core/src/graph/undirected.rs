use std::fmt;

use super::{check_size, full_set, members, rank_in, VertexSet};
use crate::error::{Error, Result};

/// A simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= super::MAX_VERTICES, "too many vertices");
        Graph { n, adj: vec![0; n] }
    }

    /// Rejects loops and out-of-range endpoints; repeated edges collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_size(n)?;
        let mut g = Graph { n, adj: vec![0; n] };
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v] = full_set(n) & !(1 << v);
        }
        g
    }

    /// Path `0 – 1 – ⋯ – (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// Decodes edge subset `code` over the pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if code >> bit & 1 == 1 {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| members(self.adj[u] >> (u + 1) << (u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// True iff no edge has both ends in `set`.
    pub fn is_stable(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.adj[v] & set == 0)
    }

    /// Vertices reachable from `start` (a vertex set) inside `within`.
    pub fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let next = members(frontier).fold(0, |s, v| s | self.adj[v]) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected; the graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(1, full_set(self.n)) == full_set(self.n)
    }

    pub fn restrict_set(&self, set: VertexSet) -> Self {
        let adj = members(set)
            .map(|u| members(self.adj[u] & set).fold(0, |r, v| r | 1 << rank_in(set, v)))
            .collect();
        Graph {
            n: set.count_ones() as usize,
            adj,
        }
    }

    /// Number of proper colorings with `k` colors, by backtracking.
    pub fn count_colorings(&self, k: usize) -> u128 {
        fn go(g: &Graph, v: usize, k: usize, colors: &mut Vec<usize>) -> u128 {
            if v == g.n {
                return 1;
            }
            let mut total = 0;
            for c in 0..k {
                if (0..v).all(|u| !g.has_edge(u, v) || colors[u] != c) {
                    colors.push(c);
                    total += go(g, v + 1, k, colors);
                    colors.pop();
                }
            }
            total
        }
        go(self, 0, k, &mut Vec::with_capacity(self.n))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compact single-line form, e.g. `graph 3: 0-1 1-2`.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph {}:", self.n)?;
        for (u, v) in self.edges() {
            write!(f, " {u}-{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_cover_all_graphs() {
        assert_eq!(Graph::from_code(3, 0b111), Graph::complete(3));
        assert_eq!(Graph::from_code(3, 0b101).edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(Graph::path(3).edge_count(), 2);
    }

    #[test]
    fn connectivity_and_stability() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::path(3).is_stable(0b101));
        assert!(!Graph::path(3).is_stable(0b011));
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(Graph::complete(3).count_colorings(3), 6);
        assert_eq!(Graph::empty(3).count_colorings(4), 64);
        assert_eq!(Graph::path(3).count_colorings(0), 0);
    }

    #[test]
    fn rejects_loops() {
        assert!(Graph::new(2, [(1, 1)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }
}
