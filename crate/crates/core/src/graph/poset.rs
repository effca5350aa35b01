use std::fmt;

use super::{check_size, full_set, members, Digraph, Graph, VertexSet};
use crate::error::{Error, Result};

/// A finite strict partial order on `0..n`, stored as its (transitive,
/// acyclic) digraph: `u → v` iff `u < v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    lt: Digraph,
}

impl Poset {
    /// Transitive closure of the given cover relations. A cycle among the
    /// covers (including a reflexive pair) is an error.
    pub fn from_covers(n: usize, covers: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_size(n)?;
        let base = Digraph::new(n, covers)?;
        if !base.is_acyclic() {
            return Err(Error::NotPartialOrder("cover relations contain a cycle".into()));
        }
        let mut rows: Vec<VertexSet> = base.rows().to_vec();
        // Warshall over bit rows
        for k in 0..n {
            let rk = rows[k];
            for row in rows.iter_mut() {
                if *row >> k & 1 == 1 {
                    *row |= rk;
                }
            }
        }
        Ok(Poset {
            lt: Digraph::from_rows(rows)?,
        })
    }

    /// Validates that `lt` is irreflexive, transitive and acyclic.
    pub fn from_relation(lt: Digraph) -> Result<Self> {
        let n = lt.n();
        if let Some(v) = (0..n).find(|&v| lt.has_arrow(v, v)) {
            return Err(Error::NotPartialOrder(format!("{v} < {v}")));
        }
        for u in 0..n {
            for v in members(lt.out_set(u)) {
                if lt.out_set(v) & !lt.out_set(u) != 0 {
                    return Err(Error::NotPartialOrder(format!(
                        "not transitive through {u} < {v}"
                    )));
                }
            }
        }
        if !lt.is_acyclic() {
            return Err(Error::NotPartialOrder("relation has a cycle".into()));
        }
        Ok(Poset { lt })
    }

    /// Chain `0 < 1 < ⋯ < n-1`.
    pub fn chain(n: usize) -> Self {
        Poset {
            lt: Digraph::complete_acyclic(n),
        }
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            lt: Digraph::empty(n),
        }
    }

    pub fn n(&self) -> usize {
        self.lt.n()
    }

    pub fn less(&self, u: usize, v: usize) -> bool {
        self.lt.has_arrow(u, v)
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.less(u, v) || self.less(v, u)
    }

    /// Elements strictly above `v`.
    pub fn above(&self, v: usize) -> VertexSet {
        self.lt.out_set(v)
    }

    /// The acyclic digraph `u → v` iff `u < v`.
    pub fn digraph(&self) -> &Digraph {
        &self.lt
    }

    /// Cover relations (the Hasse diagram).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.lt
            .arrows()
            .filter(|&(u, v)| {
                members(self.lt.out_set(u)).all(|w| !self.lt.has_arrow(w, v))
            })
            .collect()
    }

    /// Edge `{u, v}` iff `u` and `v` are incomparable.
    pub fn incomparability_graph(&self) -> Graph {
        let n = self.n();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.comparable(u, v));
        Graph::new(n, edges).expect("valid edges")
    }

    /// True iff the arrow `u → v` is weakly decreasing, i.e. `u` is not less than `v`.
    pub fn weakly_decreasing(&self, u: usize, v: usize) -> bool {
        !self.less(u, v)
    }

    /// Greatest element of a nonempty chain.
    pub(crate) fn max_of_chain(&self, chain: VertexSet) -> usize {
        members(chain)
            .find(|&v| self.above(v) & chain == 0)
            .expect("nonempty chain has a maximum")
    }

    /// Least element of a nonempty chain.
    pub(crate) fn min_of_chain(&self, chain: VertexSet) -> usize {
        members(chain)
            .find(|&v| members(chain).all(|u| !self.less(u, v)))
            .expect("nonempty chain has a minimum")
    }

    /// True iff there is no induced 3-chain plus an element incomparable to all of it.
    pub fn is_three_plus_one_free(&self) -> bool {
        let n = self.n();
        for a in 0..n {
            for b in members(self.above(a)) {
                for c in members(self.above(b)) {
                    let chain = 1 << a | 1 << b | 1 << c;
                    let free = (0..n).any(|d| {
                        chain >> d & 1 == 0 && members(chain).all(|x| !self.comparable(x, d))
                    });
                    if free {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every labeled poset on `n` elements. Element `k` is added to a poset on
    /// `0..k` by choosing a down-set below it and an up-set above it.
    pub fn all(n: usize) -> Vec<Poset> {
        let mut current = vec![Poset::antichain(0)];
        for k in 0..n {
            let mut next = Vec::new();
            for p in &current {
                let full = full_set(k);
                for down in 0..=full {
                    if !p.is_down_set(down) {
                        continue;
                    }
                    // anything above k must already be above every element below k
                    let allowed = members(down).fold(full, |s, d| s & p.above(d)) & !down;
                    let mut sub = allowed;
                    loop {
                        if p.is_up_set(sub) {
                            next.push(p.extend(down, sub));
                        }
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & allowed;
                    }
                }
            }
            current = next;
        }
        current
    }

    fn is_down_set(&self, set: VertexSet) -> bool {
        (0..self.n()).all(|u| set >> u & 1 == 1 || self.above(u) & set == 0)
    }

    fn is_up_set(&self, set: VertexSet) -> bool {
        members(set).all(|u| self.above(u) & !set == 0)
    }

    fn extend(&self, down: VertexSet, up: VertexSet) -> Poset {
        let k = self.n();
        let mut rows: Vec<VertexSet> = self.lt.rows().to_vec();
        for d in members(down) {
            rows[d] |= 1 << k;
        }
        rows.push(up);
        Poset {
            lt: Digraph::from_rows(rows).expect("within bounds"),
        }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compact form listing cover relations, e.g. `poset 3: 0<1 0<2`.
impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poset {}:", self.n())?;
        for (u, v) in self.covers() {
            write!(f, " {u}<{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn closure_and_cycles() {
        let p = Poset::from_covers(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p.less(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert!(Poset::from_covers(2, [(0, 1), (1, 0)]).is_err());
        assert!(Poset::from_covers(2, [(1, 1)]).is_err());
    }

    #[test]
    fn relation_validation() {
        let not_transitive = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(Poset::from_relation(not_transitive).is_err());
        assert!(Poset::from_relation(Digraph::new(1, [(0, 0)]).unwrap()).is_err());
        assert!(Poset::from_relation(Digraph::complete_acyclic(4)).is_ok());
    }

    #[test]
    fn incomparability_graphs() {
        assert_eq!(Poset::chain(4).incomparability_graph(), Graph::empty(4));
        assert_eq!(Poset::antichain(4).incomparability_graph(), Graph::complete(4));
        let p = samples::five_element_poset();
        assert_eq!(
            p.incomparability_graph().edges(),
            vec![(0, 3), (0, 4), (1, 4), (2, 4)]
        );
    }

    #[test]
    fn labeled_poset_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| Poset::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219, 4231]);
        for p in Poset::all(4) {
            assert!(Poset::from_relation(p.digraph().clone()).is_ok());
        }
    }

    #[test]
    fn three_plus_one() {
        assert!(Poset::chain(4).is_three_plus_one_free());
        let p = Poset::from_covers(4, [(0, 1), (1, 2)]).unwrap();
        assert!(!p.is_three_plus_one_free());
        assert!(!samples::five_element_poset().is_three_plus_one_free());
    }
}
