//! Exhaustive enumerators and counters.
//!
//! Every enumerator returns its results sorted by canonical form, so output
//! order is reproducible. Counts fit in `u64`: with at most 16 vertices no
//! family enumerated here exceeds `16!` members per instance.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{full_set, members, CycleCover, Digraph, Graph, Orientation, PathCover, VertexSet};
use crate::partition::Partition;

/// A set partition, as blocks listed by increasing minimum element.
pub type SetPartition = Vec<VertexSet>;

fn nonempty(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyVertexSet)
    } else {
        Ok(())
    }
}

/// Every Hamiltonian path of `d`, lexicographically.
pub fn hamiltonian_paths(d: &Digraph) -> Result<Vec<Vec<usize>>> {
    nonempty(d.n())?;
    fn extend(d: &Digraph, path: &mut Vec<usize>, used: VertexSet, out: &mut Vec<Vec<usize>>) {
        if path.len() == d.n() {
            out.push(path.clone());
            return;
        }
        let last = *path.last().expect("nonempty");
        for w in members(d.out_set(last) & !used) {
            path.push(w);
            extend(d, path, used | 1 << w, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for v in 0..d.n() {
        extend(d, &mut vec![v], 1 << v, &mut out);
    }
    Ok(out)
}

/// Number of Hamiltonian paths by subset dynamic programming. The digraph on
/// zero vertices has one (empty) path.
pub fn count_hamiltonian_paths(d: &Digraph) -> u64 {
    let n = d.n();
    if n == 0 {
        return 1;
    }
    // ways[set][v]: paths covering `set` and ending at v
    let full = full_set(n) as usize;
    let mut ways = vec![vec![0u64; n]; full + 1];
    for v in 0..n {
        ways[1 << v][v] = 1;
    }
    for set in 1..=full {
        for v in 0..n {
            let w = ways[set][v];
            if w == 0 {
                continue;
            }
            for x in members(d.out_set(v) & !(set as VertexSet)) {
                ways[set | 1 << x][x] += w;
            }
        }
    }
    ways[full].iter().sum()
}

/// Number of Hamiltonian cycles, counted as subdigraphs (a loop for `n = 1`).
pub fn count_hamiltonian_cycles(d: &Digraph) -> u64 {
    let n = d.n();
    match n {
        0 => 0,
        1 => d.has_arrow(0, 0) as u64,
        _ => {
            // paths from vertex 0 covering everything, closed back to 0
            let full = full_set(n) as usize;
            let mut ways = vec![vec![0u64; n]; full + 1];
            ways[1][0] = 1;
            for set in (1..=full).filter(|s| s & 1 == 1) {
                for v in 0..n {
                    let w = ways[set][v];
                    if w == 0 {
                        continue;
                    }
                    for x in members(d.out_set(v) & !(set as VertexSet)) {
                        ways[set | 1 << x][x] += w;
                    }
                }
            }
            (1..n)
                .filter(|&v| d.has_arrow(v, 0))
                .map(|v| ways[full][v])
                .sum()
        }
    }
}

/// Every cycle cover of `d` (loops count as cycles), sorted.
pub fn cycle_covers(d: &Digraph) -> Result<Vec<CycleCover>> {
    nonempty(d.n())?;
    fn assign(d: &Digraph, v: usize, used: VertexSet, succ: &mut Vec<usize>, out: &mut Vec<CycleCover>) {
        if v == d.n() {
            out.push(CycleCover::from_permutation(succ).expect("bijective successor map"));
            return;
        }
        for w in members(d.out_set(v) & !used) {
            succ.push(w);
            assign(d, v + 1, used | 1 << w, succ, out);
            succ.pop();
        }
    }
    let mut out = Vec::new();
    assign(d, 0, 0, &mut Vec::with_capacity(d.n()), &mut out);
    out.sort();
    Ok(out)
}

/// Every path cover of `d`, optionally only those of type `filter`, sorted.
pub fn path_covers(d: &Digraph, filter: Option<&Partition>) -> Result<Vec<PathCover>> {
    let n = d.n();
    nonempty(n)?;
    if let Some(l) = filter {
        if l.size() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: l.size(),
            });
        }
    }
    fn closes_cycle(succ: &[Option<usize>], from: usize, target: usize) -> bool {
        let mut cur = from;
        loop {
            if cur == target {
                return true;
            }
            match succ.get(cur).copied().flatten() {
                Some(next) => cur = next,
                None => return false,
            }
        }
    }
    fn assign(
        d: &Digraph,
        v: usize,
        used: VertexSet,
        succ: &mut Vec<Option<usize>>,
        filter: Option<&Partition>,
        out: &mut Vec<PathCover>,
    ) {
        if v == d.n() {
            let cover = PathCover::from_successors(succ).expect("acyclic injective map");
            if filter.is_none_or(|l| cover.partition() == *l) {
                out.push(cover);
            }
            return;
        }
        succ.push(None);
        assign(d, v + 1, used, succ, filter, out);
        succ.pop();
        for w in members(d.out_set(v) & !used & !(1 << v)) {
            if closes_cycle(succ, w, v) {
                continue;
            }
            succ.push(Some(w));
            assign(d, v + 1, used | 1 << w, succ, filter, out);
            succ.pop();
        }
    }
    let mut out = Vec::new();
    assign(d, 0, 0, &mut Vec::with_capacity(n), filter, &mut out);
    out.sort();
    Ok(out)
}

/// Every acyclic orientation of `g`, sorted.
pub fn acyclic_orientations(g: &Graph) -> Vec<Orientation> {
    let edges = g.edges();
    let mut out = Vec::new();
    for code in 0u64..1 << edges.len() {
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if code >> i & 1 == 1 { (v, u) } else { (u, v) });
        let o = Orientation::new(g.clone(), arrows).expect("one direction per edge");
        if o.is_acyclic() {
            out.push(o);
        }
    }
    out.sort();
    out
}

/// Disjoint directed cycles with lengths the parts of `lambda`, laid out on
/// consecutive labels. A part of size 1 is a loop.
pub fn tau_digraph(lambda: &Partition) -> Result<Digraph> {
    if lambda.is_empty() {
        return Err(Error::InvalidPartition("empty partition".into()));
    }
    let mut arrows = Vec::new();
    let mut base = 0;
    for &k in lambda.parts() {
        for i in 0..k {
            arrows.push((base + i, base + (i + 1) % k));
        }
        base += k;
    }
    Digraph::new(base, arrows)
}

/// `c_λ^μ`: the number of acyclic spanning subdigraphs of `τ_λ` of type `μ`.
pub fn c_coefficients(lambda: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let tau = tau_digraph(lambda)?;
    let n = tau.n();
    let arrows: Vec<(usize, usize)> = tau.arrows().collect();
    let mut out = BTreeMap::new();
    for code in 0u64..1 << arrows.len() {
        let sub = Digraph::new(
            n,
            arrows
                .iter()
                .enumerate()
                .filter(|&(i, _)| code >> i & 1 == 1)
                .map(|(_, &a)| a),
        )?;
        if !sub.is_acyclic() {
            continue;
        }
        // acyclic subsets of disjoint cycles are path covers
        let succ: Vec<Option<usize>> = (0..n)
            .map(|v| members(sub.out_set(v)).next())
            .collect();
        let mu = PathCover::from_successors(&succ)?.partition();
        *out.entry(mu).or_insert(0) += 1;
    }
    Ok(out)
}

/// Every directed spanning tree of `d`, as `(root, tree)` pairs: each
/// non-root vertex has exactly one out-arrow and every vertex reaches the root.
/// Brute force over `(n-1)`-subsets of the non-loop arrows.
pub fn directed_trees(d: &Digraph) -> Result<Vec<(usize, Digraph)>> {
    let n = d.n();
    nonempty(n)?;
    let arrows: Vec<(usize, usize)> = d.arrows().filter(|&(u, v)| u != v).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n);
    fn pick(
        n: usize,
        arrows: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<(usize, Digraph)>,
    ) {
        if chosen.len() == n - 1 {
            let t = Digraph::new(n, chosen.iter().copied()).expect("in range");
            let roots: Vec<usize> = (0..n).filter(|&v| t.out_degree(v) == 0).collect();
            if roots.len() == 1
                && (0..n).all(|v| t.out_degree(v) <= 1)
                && t.is_acyclic()
            {
                out.push((roots[0], t));
            }
            return;
        }
        for i in start..arrows.len() {
            chosen.push(arrows[i]);
            pick(n, arrows, i + 1, chosen, out);
            chosen.pop();
        }
    }
    pick(n, &arrows, 0, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

pub fn count_directed_trees(d: &Digraph) -> Result<u64> {
    Ok(directed_trees(d)?.len() as u64)
}

/// `η_G(t)`: coefficient `k` counts connected spanning subgraphs with `k` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaPolynomial {
    coefficients: Vec<u64>,
}

impl EtaPolynomial {
    /// Coefficients indexed by edge count, without trailing zeros.
    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> u64 {
        self.coefficients.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * &t + BigInt::from(c))
    }
}

impl fmt::Display for EtaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(k, &c)| match k {
                0 => c.to_string(),
                1 => format!("{c} t"),
                _ => format!("{c} t^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// `η_G` by enumerating edge subsets with a union-find connectivity test.
/// A disconnected graph gives the zero polynomial.
pub fn eta_polynomial(g: &Graph) -> EtaPolynomial {
    let n = g.n();
    let edges = g.edges();
    let mut coefficients = vec![0u64; edges.len() + 1];
    for code in 0u64..1 << edges.len() {
        let mut parent: Vec<usize> = (0..n).collect();
        let mut components = n;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if code >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
        }
        if components <= 1 {
            coefficients[code.count_ones() as usize] += 1;
        }
    }
    while coefficients.last() == Some(&0) {
        coefficients.pop();
    }
    EtaPolynomial { coefficients }
}

/// A sequence of disjoint nonempty blocks covering `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = 0;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            if b & seen != 0 || b & !full_set(n) != 0 {
                return Err(Error::InvalidSetPartition(format!(
                    "block {:?} overlaps or leaves 0..{n}",
                    members(b).collect::<Vec<_>>()
                )));
            }
            seen |= b;
        }
        if seen != full_set(n) {
            return Err(Error::InvalidSetPartition("blocks do not cover every vertex".into()));
        }
        Ok(OrderedSetPartition { n, blocks })
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(blocks.len());
        for b in blocks {
            let mut m: VertexSet = 0;
            for &v in b {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if m >> v & 1 == 1 {
                    return Err(Error::InvalidSetPartition(format!("{v} repeated")));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Self::new(n, masks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block_vertices(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&b| members(b).collect()).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Blocks separated by `|`, e.g. `0 2|1`.
impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .block_vertices()
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

/// True iff every block is stable and every vertex outside the first block
/// has a neighbour in the block before its own.
pub fn is_stable_link_sequence(g: &Graph, sigma: &OrderedSetPartition) -> bool {
    sigma.n() == g.n()
        && sigma.blocks().iter().all(|&b| g.is_stable(b))
        && sigma.blocks().windows(2).all(|w| {
            members(w[1]).all(|v| g.neighbors(v) & w[0] != 0)
        })
}

/// Every stable link sequence of `g`, sorted.
pub fn stable_link_sequences(g: &Graph) -> Vec<OrderedSetPartition> {
    fn grow(g: &Graph, remaining: VertexSet, prev: Option<VertexSet>, blocks: &mut Vec<VertexSet>, out: &mut Vec<OrderedSetPartition>) {
        if remaining == 0 {
            out.push(OrderedSetPartition::new(g.n(), blocks.clone()).expect("valid blocks"));
            return;
        }
        let candidates = match prev {
            None => remaining,
            Some(p) => members(remaining)
                .filter(|&v| g.neighbors(v) & p != 0)
                .fold(0, |s, v| s | 1 << v),
        };
        let mut sub = candidates;
        while sub != 0 {
            if g.is_stable(sub) {
                blocks.push(sub);
                grow(g, remaining & !sub, Some(sub), blocks, out);
                blocks.pop();
            }
            sub = (sub - 1) & candidates;
        }
    }
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    grow(g, full_set(g.n()), None, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Breadth-first layering from `s`: `σ₁ = s`, then each block is the set of
/// new vertices adjacent to the previous block.
pub fn layering_j(g: &Graph, s: VertexSet) -> Result<OrderedSetPartition> {
    let full = full_set(g.n());
    if s == 0 || s & !full != 0 {
        return Err(Error::NotAnchored);
    }
    let mut blocks = vec![s];
    let mut seen = s;
    while seen != full {
        let prev = *blocks.last().expect("nonempty");
        let next = members(prev).fold(0, |acc, v| acc | g.neighbors(v)) & !seen;
        if next == 0 {
            return Err(Error::NotAnchored);
        }
        blocks.push(next);
        seen |= next;
    }
    OrderedSetPartition::new(g.n(), blocks)
}

/// True iff the edges of `g` split into edges inside blocks of `sigma` plus,
/// for each vertex outside the first block, a nonempty set of edges to the
/// preceding block.
pub fn assembled_from_layers(g: &Graph, sigma: &OrderedSetPartition) -> bool {
    let n = g.n();
    if sigma.n() != n {
        return false;
    }
    let mut block_of = vec![0usize; n];
    for (i, &b) in sigma.blocks().iter().enumerate() {
        for v in members(b) {
            block_of[v] = i;
        }
    }
    let edges_ok = g
        .edges()
        .iter()
        .all(|&(u, v)| block_of[u].abs_diff(block_of[v]) <= 1);
    let linked = (0..n)
        .filter(|&v| block_of[v] > 0)
        .all(|v| g.neighbors(v) & sigma.blocks()[block_of[v] - 1] != 0);
    edges_ok && linked
}

/// Set partitions of the vertex set `set`, each with blocks ordered by minimum.
pub fn set_partitions_of(set: VertexSet) -> Vec<SetPartition> {
    fn go(rest: VertexSet, cur: &mut Vec<VertexSet>, out: &mut Vec<SetPartition>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let low = rest & rest.wrapping_neg();
        let others = rest & !low;
        // enumerate subsets of `others` to join the lowest element
        let mut sub: VertexSet = 0;
        loop {
            cur.push(low | sub);
            go(others & !sub, cur, out);
            cur.pop();
            if sub == others {
                break;
            }
            sub = (sub.wrapping_sub(others)) & others;
        }
    }
    let mut out = Vec::new();
    go(set, &mut Vec::new(), &mut out);
    out
}

/// Every set partition of `0..n`.
pub fn set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    nonempty(n)?;
    Ok(set_partitions_of(full_set(n)))
}

/// Every set partition coarser than or equal to `sigma`.
pub fn coarsenings(sigma: &SetPartition) -> Vec<SetPartition> {
    let k = sigma.len();
    set_partitions_of(full_set(k))
        .into_iter()
        .map(|grouping| {
            let mut blocks: Vec<VertexSet> = grouping
                .iter()
                .map(|&g| members(g).fold(0, |s, i| s | sigma[i]))
                .collect();
            blocks.sort_by_key(|b| b.trailing_zeros());
            blocks
        })
        .collect()
}

/// `t(σ)`: the partition of block sizes.
pub fn set_partition_type(sigma: &SetPartition) -> Partition {
    Partition::from_sizes(sigma.iter().map(|b| b.count_ones() as usize)).expect("nonempty blocks")
}

/// Every digraph (loops allowed) on `n` vertices, in code order.
pub fn digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    (0u64..1 << (n * n)).map(move |c| Digraph::from_code(n, c))
}

/// Every labeled acyclic digraph on `n` vertices.
pub fn acyclic_digraphs(n: usize) -> Vec<Digraph> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for code in 0u64..1 << slots.len() {
        let d = Digraph::new(
            n,
            slots
                .iter()
                .enumerate()
                .filter(|&(i, _)| code >> i & 1 == 1)
                .map(|(_, &a)| a),
        )
        .expect("in range");
        if d.is_acyclic() {
            out.push(d);
        }
    }
    out
}

/// Every labeled simple graph on `n` vertices.
pub fn graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0u64..1 << (n * n.saturating_sub(1) / 2)).map(move |c| Graph::from_code(n, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Poset;
    use crate::samples;

    fn bell(n: usize) -> usize {
        // Bell triangle
        let mut row = vec![1usize];
        for _ in 1..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        *row.last().unwrap()
    }

    #[test]
    fn four_vertex_sample_counts() {
        let c = samples::four_vertex_acyclic().complement();
        assert_eq!(hamiltonian_paths(&c).unwrap().len(), 7);
        assert_eq!(count_hamiltonian_paths(&c), 7);
        assert_eq!(cycle_covers(&c).unwrap().len(), 7);
    }

    #[test]
    fn complete_acyclic_complements_have_one_of_each() {
        for n in 1..=6 {
            let c = Digraph::complete_acyclic(n).complement();
            let paths = hamiltonian_paths(&c).unwrap();
            assert_eq!(paths, vec![(0..n).rev().collect::<Vec<_>>()]);
            let covers = cycle_covers(&c).unwrap();
            assert_eq!(covers.len(), 1);
            assert!(covers[0].cycles().iter().all(|cy| cy.len() == 1));
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(hamiltonian_paths(&Digraph::empty(1)).unwrap(), vec![vec![0]]);
        assert_eq!(hamiltonian_paths(&Digraph::empty(0)), Err(Error::EmptyVertexSet));
        let no_cycles = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(cycle_covers(&no_cycles).unwrap().is_empty());
        assert_eq!(path_covers(&Digraph::empty(3), None).unwrap().len(), 1);
        assert!(path_covers(&Digraph::empty(3), Some(&Partition::single(2))).is_err());
    }

    #[test]
    fn covers_and_counts_agree_with_brute_force() {
        for n in 1..=3 {
            for d in digraphs(n) {
                let paths = hamiltonian_paths(&d).unwrap();
                assert_eq!(paths.len() as u64, count_hamiltonian_paths(&d));
                let full = Partition::single(n);
                let ham_covers: Vec<Vec<usize>> = path_covers(&d, Some(&full))
                    .unwrap()
                    .into_iter()
                    .map(|c| c.paths()[0].clone())
                    .collect();
                let mut sorted = paths.clone();
                sorted.sort();
                assert_eq!(ham_covers, sorted);
                for f in cycle_covers(&d).unwrap() {
                    assert!(f.is_cover_of(&d));
                    assert_eq!(f.weight(), n);
                    assert_eq!(f.partition().size(), n);
                }
                for e in path_covers(&d, None).unwrap() {
                    assert!(e.is_cover_of(&d));
                }
                let cycles = hamiltonian_paths(&d)
                    .unwrap()
                    .into_iter()
                    .filter(|p| p[0] == 0 && d.has_arrow(p[n - 1], 0))
                    .count() as u64;
                assert_eq!(count_hamiltonian_cycles(&d), cycles);
            }
        }
    }

    #[test]
    fn weakly_decreasing_covers_are_covers_of_the_complement() {
        let p = Poset::chain(2);
        let c = p.digraph().complement();
        let covers = path_covers(&c, None).unwrap();
        // singletons, and the decreasing pair 1 -> 0
        assert_eq!(covers.len(), 2);
        for e in covers {
            for path in e.paths() {
                assert!(path.windows(2).all(|w| p.weakly_decreasing(w[0], w[1])));
            }
        }
    }

    #[test]
    fn acyclic_orientation_counts() {
        assert_eq!(acyclic_orientations(&Graph::complete(3)).len(), 6);
        assert_eq!(acyclic_orientations(&Graph::empty(3)).len(), 1);
        // |χ_G(-1)| from deletion-contraction
        fn chromatic_at(g: &Graph, k: i64) -> i64 {
            let edges = g.edges();
            let Some(&(u, v)) = edges.first() else {
                return k.pow(g.n() as u32);
            };
            let deleted = Graph::new(g.n(), edges[1..].iter().copied()).unwrap();
            // merge v into u
            let relabel = |x: usize| if x == v { u } else if x > v { x - 1 } else { x };
            let merged = Graph::new(
                g.n() - 1,
                edges[1..]
                    .iter()
                    .map(|&(a, b)| (relabel(a), relabel(b)))
                    .filter(|(a, b)| a != b),
            )
            .unwrap();
            chromatic_at(&deleted, k) - chromatic_at(&merged, k)
        }
        for n in 1..=4 {
            for g in graphs(n) {
                assert_eq!(
                    acyclic_orientations(&g).len() as i64,
                    chromatic_at(&g, -1).abs()
                );
            }
        }
    }

    #[test]
    fn tau_digraphs() {
        let one = tau_digraph(&Partition::single(1)).unwrap();
        assert_eq!(one.arrows().collect::<Vec<_>>(), vec![(0, 0)]);
        let two = tau_digraph(&Partition::single(2)).unwrap();
        assert_eq!(two.arrows().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        let l = Partition::new(vec![2, 1]).unwrap();
        let t = tau_digraph(&l).unwrap();
        assert_eq!(t.arrows().collect::<Vec<_>>(), vec![(0, 1), (1, 0), (2, 2)]);
        let covers = cycle_covers(&t).unwrap();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].partition(), l);
        assert!(tau_digraph(&Partition::ones(0)).is_err());
    }

    #[test]
    fn c_coefficients_small() {
        let c2 = c_coefficients(&Partition::single(2)).unwrap();
        assert_eq!(c2[&Partition::ones(2)], 1);
        assert_eq!(c2[&Partition::single(2)], 2);
        let c1 = c_coefficients(&Partition::single(1)).unwrap();
        assert_eq!(c1.len(), 1);
        assert_eq!(c1[&Partition::ones(1)], 1);
        // p3 = e111 - 3 e21 + 3 e3: |c| = 1, 3, 3
        let c3 = c_coefficients(&Partition::single(3)).unwrap();
        assert_eq!(c3[&Partition::ones(3)], 1);
        assert_eq!(c3[&Partition::new(vec![2, 1]).unwrap()], 3);
        assert_eq!(c3[&Partition::single(3)], 3);
    }

    #[test]
    fn directed_tree_counts() {
        let loops = Digraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(count_directed_trees(&loops).unwrap(), 1);
        assert_eq!(count_directed_trees(&Digraph::empty(3).complement()).unwrap(), 9);
        assert_eq!(count_directed_trees(&Digraph::empty(0)), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_polynomial(&Graph::empty(1)).coefficients(), &[1]);
        let k3 = eta_polynomial(&Graph::complete(3));
        assert_eq!(k3.coefficients(), &[0, 0, 3, 1]);
        assert_eq!(k3.to_string(), "3 t^2 + 1 t^3");
        assert!(eta_polynomial(&Graph::empty(2)).is_zero());
        assert_eq!(k3.eval(-1), BigInt::from(2));
    }

    #[test]
    fn stable_link_sequence_examples() {
        for n in 1..=4 {
            let factorial: usize = (1..=n).product();
            assert_eq!(stable_link_sequences(&Graph::complete(n)).len(), factorial);
        }
        for n in 2..=4 {
            let seqs = stable_link_sequences(&Graph::empty(n));
            assert_eq!(seqs.len(), 1);
            assert_eq!(seqs[0].blocks(), &[full_set(n)]);
        }
        for n in 1..=4 {
            for g in graphs(n) {
                let seqs = stable_link_sequences(&g);
                assert!(seqs.iter().all(|s| is_stable_link_sequence(&g, s)));
                assert_eq!(seqs.len(), acyclic_orientations(&g).len());
            }
        }
    }

    #[test]
    fn layering_examples() {
        let g = Graph::path(3);
        assert_eq!(layering_j(&g, 0b111).unwrap().blocks(), &[0b111]);
        assert_eq!(layering_j(&g, 0b001).unwrap().blocks(), &[1, 2, 4]);
        assert_eq!(layering_j(&Graph::empty(2), 1), Err(Error::NotAnchored));
    }

    /// Graphs with `j_{σ₁}(G) = σ` are exactly the ones assembled from layers.
    #[test]
    fn layering_preimages_exhaustive() {
        for n in 1..=4 {
            let all: Vec<Graph> = graphs(n).collect();
            for sp in set_partitions(n).unwrap() {
                // every ordering of the blocks
                for order in permutations(sp.len()) {
                    let blocks: Vec<VertexSet> = order.iter().map(|&i| sp[i]).collect();
                    let sigma = OrderedSetPartition::new(n, blocks.clone()).unwrap();
                    for g in &all {
                        let anchored = g.reach(blocks[0], full_set(n)) == full_set(n);
                        let by_j = anchored && layering_j(g, blocks[0]).unwrap() == sigma;
                        assert_eq!(by_j, assembled_from_layers(g, &sigma), "{g} {sigma}");
                    }
                }
            }
        }
    }

    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, k - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn set_partition_counts() {
        assert_eq!(set_partitions(1).unwrap().len(), 1);
        for n in 1..=6 {
            assert_eq!(set_partitions(n).unwrap().len(), bell(n));
        }
        assert!(set_partitions(0).is_err());
        let sigma = vec![0b0011, 0b0100, 0b1000];
        let coarse = coarsenings(&sigma);
        assert_eq!(coarse.len(), 5);
        assert!(coarse.contains(&vec![0b1111]));
    }

    #[test]
    fn instance_counts() {
        let dag_counts: Vec<usize> = (0..=4).map(|n| acyclic_digraphs(n).len()).collect();
        assert_eq!(dag_counts, vec![1, 1, 3, 25, 543]);
        assert_eq!(digraphs(2).count(), 16);
        assert_eq!(graphs(4).count(), 64);
    }
}
