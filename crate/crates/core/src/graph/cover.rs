use super::{Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::partition::Partition;

fn check_partition_of(n: usize, blocks: &[Vec<usize>], what: &str) -> std::result::Result<(), String> {
    let mut seen: VertexSet = 0;
    for b in blocks {
        if b.is_empty() {
            return Err(format!("empty {what}"));
        }
        for &v in b {
            if v >= n {
                return Err(format!("vertex {v} out of range for {n} vertices"));
            }
            if seen >> v & 1 == 1 {
                return Err(format!("vertex {v} appears twice"));
            }
            seen |= 1 << v;
        }
    }
    if seen.count_ones() as usize != n {
        return Err(format!("{what}s do not cover all {n} vertices"));
    }
    Ok(())
}

/// Vertex-disjoint paths covering `0..n`, listed by increasing first vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathCover {
    paths: Vec<Vec<usize>>,
}

impl PathCover {
    /// Checks disjointness and coverage, then sorts into canonical form.
    pub fn new(n: usize, mut paths: Vec<Vec<usize>>) -> Result<Self> {
        check_partition_of(n, &paths, "path").map_err(Error::InvalidPathCover)?;
        paths.sort_by_key(|p| p[0]);
        Ok(PathCover { paths })
    }

    /// Reads a cover off a successor map (`None` ends a path). The map must be
    /// injective and acyclic.
    pub fn from_successors(succ: &[Option<usize>]) -> Result<Self> {
        let n = succ.len();
        let mut has_pred: VertexSet = 0;
        for s in succ.iter().flatten() {
            has_pred |= 1 << s;
        }
        let mut paths = Vec::new();
        for start in (0..n).filter(|&v| has_pred >> v & 1 == 0) {
            let mut p = vec![start];
            let mut cur = start;
            while let Some(next) = succ[cur] {
                if p.len() > n {
                    break;
                }
                p.push(next);
                cur = next;
            }
            paths.push(p);
        }
        Self::new(n, paths)
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    /// `t(E)`: the partition of path sizes.
    pub fn partition(&self) -> Partition {
        Partition::from_sizes(self.paths.iter().map(Vec::len)).expect("nonempty paths")
    }

    /// `ℓ(E)`: the number of paths.
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    /// True iff every path runs along arrows of `d` and the cover spans `d`.
    pub fn is_cover_of(&self, d: &Digraph) -> bool {
        self.vertex_count() == d.n() && self.paths.iter().all(|p| d.is_path(p))
    }
}

/// Vertex-disjoint cycles covering `0..n`. Each cycle starts at its minimum
/// vertex; cycles are listed by increasing minimum. A one-vertex cycle is a loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleCover {
    cycles: Vec<Vec<usize>>,
}

impl CycleCover {
    pub fn new(n: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        check_partition_of(n, &cycles, "cycle").map_err(Error::InvalidCycleCover)?;
        let mut cycles: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|mut c| {
                let m = (0..c.len()).min_by_key(|&i| c[i]).expect("nonempty");
                c.rotate_left(m);
                c
            })
            .collect();
        cycles.sort_by_key(|c| c[0]);
        Ok(CycleCover { cycles })
    }

    /// Cycle decomposition of a permutation given as a successor map.
    pub fn from_permutation(succ: &[usize]) -> Result<Self> {
        let n = succ.len();
        let mut seen: VertexSet = 0;
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut c = Vec::new();
            let mut cur = start;
            while seen >> cur & 1 == 0 {
                seen |= 1 << cur;
                c.push(cur);
                cur = *succ.get(cur).ok_or_else(|| {
                    Error::InvalidCycleCover(format!("successor of {cur} missing"))
                })?;
                if cur >= n {
                    return Err(Error::InvalidCycleCover(format!("successor {cur} out of range")));
                }
            }
            if cur != start {
                return Err(Error::InvalidCycleCover("successor map is not a permutation".into()));
            }
            cycles.push(c);
        }
        Self::new(n, cycles)
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// `t(F)`: the partition of cycle lengths.
    pub fn partition(&self) -> Partition {
        Partition::from_sizes(self.cycles.iter().map(Vec::len)).expect("nonempty cycles")
    }

    /// `ℓ(F)`: the number of cycles.
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// `W(F)`: the number of vertices.
    pub fn weight(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// Successor of each vertex along its cycle.
    pub fn successors(&self) -> Vec<usize> {
        let mut succ = vec![0; self.weight()];
        for c in &self.cycles {
            for i in 0..c.len() {
                succ[c[i]] = c[(i + 1) % c.len()];
            }
        }
        succ
    }

    pub fn is_cover_of(&self, d: &Digraph) -> bool {
        self.weight() == d.n() && self.cycles.iter().all(|c| d.is_cycle(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let c = CycleCover::new(4, vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(c.cycles(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(c.partition().parts(), &[2, 2]);
        assert_eq!((c.len(), c.weight()), (2, 4));
        assert_eq!(CycleCover::from_permutation(&c.successors()).unwrap(), c);

        let p = PathCover::new(3, vec![vec![2], vec![1, 0]]).unwrap();
        assert_eq!(p.paths(), &[vec![1, 0], vec![2]]);
        assert_eq!(
            PathCover::from_successors(&[None, Some(0), None]).unwrap(),
            p
        );
    }

    #[test]
    fn rejects_non_covers() {
        assert!(PathCover::new(3, vec![vec![0, 1]]).is_err());
        assert!(PathCover::new(2, vec![vec![0, 1], vec![1]]).is_err());
        assert!(CycleCover::new(2, vec![vec![], vec![0, 1]]).is_err());
        assert!(CycleCover::from_permutation(&[1, 1]).is_err());
    }
}
