use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use super::{check_size, full_set, members, rank_in, set_of, PathCover, VertexSet};
use crate::det;
use crate::error::{Error, Result};

/// A labeled digraph on `0..n`. Loops are allowed, multiple arrows are not.
///
/// Stored as one out-neighbour bit row per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Digraph {
    /// The digraph on `n` vertices with no arrows.
    pub fn empty(n: usize) -> Self {
        assert!(n <= super::MAX_VERTICES, "too many vertices");
        Digraph {
            n,
            rows: vec![0; n],
        }
    }

    /// Builds a digraph, rejecting out-of-range endpoints. Repeated arrows collapse.
    pub fn new(n: usize, arrows: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_size(n)?;
        let mut rows = vec![0; n];
        for (u, v) in arrows {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            rows[u] |= 1 << v;
        }
        Ok(Digraph { n, rows })
    }

    /// Builds a digraph from out-neighbour bit rows.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        check_size(n)?;
        let full = full_set(n);
        if let Some(r) = rows.iter().find(|&&r| r & !full != 0) {
            let vertex = (r & !full).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(Digraph { n, rows })
    }

    /// Decodes arrow set number `code` of the `n²` arrow slots, slot `u*n+v`.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut d = Digraph::empty(n);
        for u in 0..n {
            d.rows[u] = ((code >> (u * n)) & full_set(n) as u64) as VertexSet;
        }
        d
    }

    /// The acyclic digraph with an arrow `i → j` for every `i < j`.
    pub fn complete_acyclic(n: usize) -> Self {
        let mut d = Digraph::empty(n);
        for u in 0..n {
            d.rows[u] = full_set(n) & !full_set(u + 1);
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arrow(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Out-neighbours of `v`.
    pub fn out_set(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    /// In-neighbours of `v`.
    pub fn in_set(&self, v: usize) -> VertexSet {
        (0..self.n)
            .filter(|&u| self.has_arrow(u, v))
            .fold(0, |s, u| s | 1 << u)
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    /// Arrows in lexicographic order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| members(self.rows[u]).map(move |v| (u, v)))
    }

    pub fn arrow_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Copy with the arrow `(u, v)` added.
    pub fn with_arrow(&self, u: usize, v: usize) -> Result<Self> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        let mut d = self.clone();
        d.rows[u] |= 1 << v;
        Ok(d)
    }

    /// Arrow present iff absent here, over all of `V × V` including loops.
    pub fn complement(&self) -> Self {
        let full = full_set(self.n);
        Digraph {
            n: self.n,
            rows: self.rows.iter().map(|r| !r & full).collect(),
        }
    }

    /// Restriction to the given vertices, relabeled `0..|s|` in increasing order.
    pub fn restrict(&self, s: &[usize]) -> Result<Self> {
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.restrict_set(set_of(s)))
    }

    /// Restriction to a vertex bitmask (must lie within `0..n`).
    pub fn restrict_set(&self, set: VertexSet) -> Self {
        debug_assert_eq!(set & !full_set(self.n), 0);
        let rows = members(set)
            .map(|u| {
                members(self.rows[u] & set).fold(0, |r, v| r | 1 << rank_in(set, v))
            })
            .collect();
        Digraph {
            n: set.count_ones() as usize,
            rows,
        }
    }

    /// Contraction by `(v, w)`: drop arrows into `w` and out of `v`, then merge
    /// the two. The merged vertex takes the smaller label; labels above the
    /// larger one shift down by one.
    pub fn contract_arrow(&self, v: usize, w: usize) -> Result<Self> {
        for x in [v, w] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if v == w {
            return Err(Error::LoopContraction(v));
        }
        let (lo, hi) = (v.min(w), v.max(w));
        let relabel = |x: usize| match x {
            x if x == hi => lo,
            x if x > hi => x - 1,
            x => x,
        };
        let arrows = self
            .arrows()
            .filter(|&(a, b)| b != w && a != v)
            .map(|(a, b)| (relabel(a), relabel(b)));
        Digraph::new(self.n - 1, arrows)
    }

    /// Contraction by a path cover: one vertex per path (in canonical path
    /// order), with an arrow `i → j` iff this digraph has an arrow from the end
    /// of path `i` to the start of path `j`.
    pub fn contract_path_cover(&self, cover: &PathCover) -> Result<Self> {
        if !cover.is_cover_of(self) {
            return Err(Error::InvalidPathCover(format!(
                "{cover:?} is not a path cover of this digraph"
            )));
        }
        let paths = cover.paths();
        let k = paths.len();
        let mut out = Digraph::empty(k);
        for (i, p) in paths.iter().enumerate() {
            let end = *p.last().expect("paths are nonempty");
            for (j, q) in paths.iter().enumerate() {
                if self.has_arrow(end, q[0]) {
                    out.rows[i] |= 1 << j;
                }
            }
        }
        Ok(out)
    }

    /// True iff there is no directed cycle. A loop is a cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut remaining = full_set(self.n);
        loop {
            let sinks: VertexSet = members(remaining)
                .filter(|&v| self.rows[v] & remaining == 0)
                .fold(0, |s, v| s | 1 << v);
            if sinks == 0 {
                return remaining == 0;
            }
            remaining &= !sinks;
        }
    }

    /// The lexicographically smallest topological order.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg: Vec<usize> = (0..self.n)
            .map(|v| self.in_set(v).count_ones() as usize)
            .collect();
        let mut ready: BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for w in members(self.rows[v]) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() == self.n {
            Ok(order)
        } else {
            Err(Error::NotAcyclic)
        }
    }

    /// 0/1 adjacency matrix, entry `(i, j)` set iff `(i, j)` is an arrow.
    pub fn adjacency_matrix(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| BigInt::from(self.has_arrow(i, j) as u8))
                    .collect()
            })
            .collect()
    }

    /// Exact determinant of the adjacency matrix.
    pub fn adjacency_determinant(&self) -> BigInt {
        det::bareiss(&self.adjacency_matrix())
    }

    /// True iff `seq` lists distinct vertices with each consecutive pair an arrow.
    pub fn is_path(&self, seq: &[usize]) -> bool {
        let mut seen: VertexSet = 0;
        for &v in seq {
            if v >= self.n || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        seq.windows(2).all(|w| self.has_arrow(w[0], w[1]))
    }

    /// True iff `seq` is a cycle: a path whose last vertex points back to the first.
    pub fn is_cycle(&self, seq: &[usize]) -> bool {
        !seq.is_empty() && self.is_path(seq) && self.has_arrow(seq[seq.len() - 1], seq[0])
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compact single-line form, e.g. `digraph 3: 0>1 1>2 2>2`.
impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "digraph {}:", self.n)?;
        for (u, v) in self.arrows() {
            write!(f, " {u}>{v}")?;
        }
        Ok(())
    }
}
