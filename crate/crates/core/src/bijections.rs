//! Constructive bijections between paths, cycle covers, trees, acyclic
//! orientations and ordered set partitions.
//!
//! Each forward map has an explicit inverse, and the `_traced` variants
//! return the intermediate steps so a caller can check per-step invariants.

use crate::enumerate::{is_stable_link_sequence, OrderedSetPartition};
use crate::error::{Error, Result};
use crate::graph::{full_set, members, CycleCover, Digraph, Graph, Orientation, Poset, VertexSet};

fn ranks(d: &Digraph) -> Result<Vec<usize>> {
    let order = d.topological_order()?;
    let mut rank = vec![0; d.n()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    Ok(rank)
}

/// One peel of the path-to-cycles map: the path `rest` (on `S`) and the
/// cycle `cycle` (on `T`) split off its end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoataStep {
    pub rest: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl FoataStep {
    pub fn s(&self) -> VertexSet {
        self.rest.iter().fold(0, |a, &v| a | 1 << v)
    }

    pub fn t(&self) -> VertexSet {
        self.cycle.iter().fold(0, |a, &v| a | 1 << v)
    }
}

/// Splits cycles off the end of `path` until nothing is left. `rank` is the
/// fixed total order: `z` is the last vertex, `v` the last vertex ranked
/// above `z`, and everything after `v` closes into a cycle.
fn peel(path: &[usize], rank: &[usize]) -> Vec<FoataStep> {
    let mut steps = Vec::new();
    let mut rest = path.to_vec();
    while let Some(&z) = rest.last() {
        let cut = rest
            .iter()
            .rposition(|&v| rank[v] > rank[z])
            .map_or(0, |i| i + 1);
        let cycle = rest.split_off(cut);
        steps.push(FoataStep {
            rest: rest.clone(),
            cycle,
        });
    }
    steps
}

/// Inverse of [`peel`]: cycles by decreasing maximum rank, each rotated to end
/// at its maximum, concatenated.
fn unpeel(cycles: &[Vec<usize>], rank: &[usize]) -> Vec<usize> {
    let mut rotated: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| {
            let top = (0..c.len()).max_by_key(|&i| rank[c[i]]).expect("nonempty cycle");
            let shift = (top + 1) % c.len();
            let mut c = c.clone();
            c.rotate_left(shift);
            c
        })
        .collect();
    rotated.sort_by_key(|c| std::cmp::Reverse(rank[*c.last().expect("nonempty")]));
    rotated.concat()
}

fn check_hamiltonian(d: &Digraph, path: &[usize]) -> Result<()> {
    if d.n() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if path.len() != d.n() || !d.is_path(path) {
        return Err(Error::InvalidPath(format!("{path:?} is not a Hamiltonian path")));
    }
    Ok(())
}

/// Sends a Hamiltonian path on the complement of acyclic `d` to a cycle cover
/// of the complement, using the lexicographically least topological order.
pub fn foata_path_to_cycles(d: &Digraph, path: &[usize]) -> Result<CycleCover> {
    foata_path_to_cycles_traced(d, path).map(|(c, _)| c)
}

pub fn foata_path_to_cycles_traced(d: &Digraph, path: &[usize]) -> Result<(CycleCover, Vec<FoataStep>)> {
    let rank = ranks(d)?;
    check_hamiltonian(&d.complement(), path)?;
    let steps = peel(path, &rank);
    let cover = CycleCover::new(d.n(), steps.iter().map(|s| s.cycle.clone()).collect())?;
    Ok((cover, steps))
}

/// Inverse of [`foata_path_to_cycles`].
pub fn foata_cycles_to_path(d: &Digraph, cover: &CycleCover) -> Result<Vec<usize>> {
    let rank = ranks(d)?;
    if d.n() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if !cover.is_cover_of(&d.complement()) {
        return Err(Error::InvalidCycleCover("not a cycle cover of the complement".into()));
    }
    Ok(unpeel(cover.cycles(), &rank))
}

/// Root of a directed spanning tree, after checking it lies in `host`.
fn tree_root(host: &Digraph, tree: &Digraph) -> Result<usize> {
    let n = host.n();
    if tree.n() != n {
        return Err(Error::InvalidTree("vertex count mismatch".into()));
    }
    if tree.arrows().any(|(u, v)| u == v || !host.has_arrow(u, v)) {
        return Err(Error::InvalidTree("arrow outside the complement".into()));
    }
    let roots: Vec<usize> = (0..n).filter(|&v| tree.out_degree(v) == 0).collect();
    if roots.len() != 1 || (0..n).any(|v| tree.out_degree(v) > 1) || !tree.is_acyclic() {
        return Err(Error::InvalidTree("not a directed tree".into()));
    }
    Ok(roots[0])
}

/// Sends a pair `(v, T)`, with `T` a directed spanning tree of the complement
/// of acyclic `d`, to a functional subdigraph of the complement: the path from
/// `v` to the root becomes cycles, every other tree arrow is kept.
pub fn tree_to_functional(d: &Digraph, v: usize, tree: &Digraph) -> Result<Digraph> {
    let rank = ranks(d)?;
    let n = d.n();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    tree_root(&d.complement(), tree)?;
    let mut path = vec![v];
    while let Some(next) = members(tree.out_set(*path.last().expect("nonempty"))).next() {
        path.push(next);
    }
    let on_path: VertexSet = path.iter().fold(0, |a, &x| a | 1 << x);
    let mut rows: Vec<VertexSet> = (0..n)
        .map(|u| if on_path >> u & 1 == 1 { 0 } else { tree.out_set(u) })
        .collect();
    for step in peel(&path, &rank) {
        let c = &step.cycle;
        for i in 0..c.len() {
            rows[c[i]] |= 1 << c[(i + 1) % c.len()];
        }
    }
    Digraph::from_rows(rows)
}

/// Inverse of [`tree_to_functional`]: returns `(v, T)`.
pub fn functional_to_tree(d: &Digraph, f: &Digraph) -> Result<(usize, Digraph)> {
    let rank = ranks(d)?;
    let n = d.n();
    let c = d.complement();
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if f.n() != n || (0..n).any(|u| f.out_degree(u) != 1 || f.out_set(u) & !c.out_set(u) != 0) {
        return Err(Error::InvalidTree(
            "expected exactly one complement arrow out of each vertex".into(),
        ));
    }
    let succ: Vec<usize> = (0..n).map(|u| f.out_set(u).trailing_zeros() as usize).collect();
    // vertices on cycles are those that return to themselves
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut on_cycle: VertexSet = 0;
    for start in 0..n {
        let mut x = start;
        for _ in 0..n {
            x = succ[x];
        }
        if on_cycle >> x & 1 == 1 {
            continue;
        }
        let mut cyc = vec![x];
        on_cycle |= 1 << x;
        let mut y = succ[x];
        while y != x {
            cyc.push(y);
            on_cycle |= 1 << y;
            y = succ[y];
        }
        cycles.push(cyc);
    }
    let path = unpeel(&cycles, &rank);
    let mut rows: Vec<VertexSet> = (0..n)
        .map(|u| if on_cycle >> u & 1 == 1 { 0 } else { f.out_set(u) })
        .collect();
    for w in path.windows(2) {
        rows[w[0]] |= 1 << w[1];
    }
    Ok((path[0], Digraph::from_rows(rows)?))
}

fn check_orientation_of(p: &Poset, a: &Orientation) -> Result<()> {
    if a.graph() != &p.incomparability_graph() {
        return Err(Error::InvalidOrientation(
            "not an orientation of the incomparability graph".into(),
        ));
    }
    if !a.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    Ok(())
}

/// Processes a weakly decreasing Hamiltonian path in order, directing every
/// not yet directed incomparability edge toward the current vertex.
pub fn shatter_r(p: &Poset, path: &[usize]) -> Result<Orientation> {
    check_hamiltonian(&p.digraph().complement(), path)?;
    let g = p.incomparability_graph();
    let mut out = vec![0 as VertexSet; p.n()];
    let mut done: VertexSet = 0;
    for &x in path {
        for y in members(g.neighbors(x) & !done) {
            out[y] |= 1 << x;
        }
        done |= 1 << x;
    }
    Orientation::from_out_rows(g, out)
}

/// One peel of the shatter-path: the current sinks and the greatest of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShatterStep {
    pub sinks: VertexSet,
    pub chosen: usize,
}

/// The shatter-path: repeatedly remove the greatest sink.
pub fn shatter_s(p: &Poset, a: &Orientation) -> Result<Vec<usize>> {
    Ok(shatter_s_traced(p, a)?
        .into_iter()
        .map(|s| s.chosen)
        .collect())
}

pub fn shatter_s_traced(p: &Poset, a: &Orientation) -> Result<Vec<ShatterStep>> {
    check_orientation_of(p, a)?;
    let mut remaining = full_set(p.n());
    let mut steps = Vec::with_capacity(p.n());
    while remaining != 0 {
        let sinks = a.sinks_within(remaining);
        let chosen = p.max_of_chain(sinks);
        steps.push(ShatterStep { sinks, chosen });
        remaining &= !(1 << chosen);
    }
    Ok(steps)
}

/// Circularity by both characterizations; they are asserted to agree.
fn circular_unchecked(p: &Poset, a: &Orientation) -> bool {
    let mut remaining = full_set(p.n());
    let mut path = Vec::with_capacity(p.n());
    while remaining != 0 {
        let v = p.max_of_chain(a.sinks_within(remaining));
        path.push(v);
        remaining &= !(1 << v);
    }
    let closing = p.weakly_decreasing(path[path.len() - 1], path[0]);
    let by_ends = !p.less(p.min_of_chain(a.sources()), p.max_of_chain(a.sinks()));
    assert_eq!(closing, by_ends, "circularity criteria disagree on {a}");
    closing
}

/// True iff the shatter-path of `a` closes into a weakly decreasing cycle,
/// equivalently iff the smallest source is not less than the greatest sink.
pub fn is_circular(p: &Poset, a: &Orientation) -> Result<bool> {
    check_orientation_of(p, a)?;
    if p.n() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    Ok(circular_unchecked(p, a))
}

/// One flip of the second-sink maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipStep {
    pub vertex: usize,
    pub sinks_after: VertexSet,
    pub sources_after: VertexSet,
    /// For `t`: the flipped vertex became the smallest source.
    /// For `u`: it became the second-largest sink.
    pub invariant_holds: bool,
}

fn flip_cap(g: &Graph) -> u64 {
    1u64.checked_shl(g.edge_count() as u32).unwrap_or(u64::MAX)
}

fn second_largest(p: &Poset, chain: VertexSet) -> Option<usize> {
    let rest = chain & !(1 << p.max_of_chain(chain));
    (rest != 0).then(|| p.max_of_chain(rest))
}

fn check_connected(p: &Poset, a: &Orientation) -> Result<()> {
    check_orientation_of(p, a)?;
    if p.n() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if !a.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Flips the second-largest sink of a circular orientation until one sink is left.
pub fn second_sink_t(p: &Poset, a: &Orientation) -> Result<Orientation> {
    second_sink_t_traced(p, a).map(|(o, _)| o)
}

pub fn second_sink_t_traced(p: &Poset, a: &Orientation) -> Result<(Orientation, Vec<FlipStep>)> {
    check_connected(p, a)?;
    if !circular_unchecked(p, a) {
        return Err(Error::NotCircular);
    }
    let cap = flip_cap(a.graph());
    let mut cur = a.clone();
    let mut steps = Vec::new();
    while let Some(w) = second_largest(p, cur.sinks()) {
        if steps.len() as u64 >= cap {
            return Err(Error::IterationCap(cap));
        }
        cur.flip(w);
        let sources = cur.sources();
        steps.push(FlipStep {
            vertex: w,
            sinks_after: cur.sinks(),
            sources_after: sources,
            invariant_holds: p.min_of_chain(sources) == w,
        });
    }
    Ok((cur, steps))
}

/// Flips the smallest source of a unique-sink orientation until it is circular.
pub fn second_sink_u(p: &Poset, b: &Orientation) -> Result<Orientation> {
    second_sink_u_traced(p, b).map(|(o, _)| o)
}

pub fn second_sink_u_traced(p: &Poset, b: &Orientation) -> Result<(Orientation, Vec<FlipStep>)> {
    check_connected(p, b)?;
    if b.sinks().count_ones() != 1 {
        return Err(Error::NotUniqueSink);
    }
    let cap = flip_cap(b.graph());
    let mut cur = b.clone();
    let mut steps = Vec::new();
    while !circular_unchecked(p, &cur) {
        if steps.len() as u64 >= cap {
            return Err(Error::IterationCap(cap));
        }
        let v = p.min_of_chain(cur.sources());
        cur.flip(v);
        let sinks = cur.sinks();
        steps.push(FlipStep {
            vertex: v,
            sinks_after: sinks,
            sources_after: cur.sources(),
            invariant_holds: second_largest(p, sinks) == Some(v),
        });
    }
    Ok((cur, steps))
}

/// The sink sequence: block `i` is the sink set once earlier blocks are removed.
pub fn sink_sequence_f(g: &Graph, a: &Orientation) -> Result<OrderedSetPartition> {
    if a.graph() != g {
        return Err(Error::InvalidOrientation("orientation of a different graph".into()));
    }
    if !a.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let mut remaining = full_set(g.n());
    let mut blocks = Vec::new();
    while remaining != 0 {
        let s = a.sinks_within(remaining);
        blocks.push(s);
        remaining &= !s;
    }
    OrderedSetPartition::new(g.n(), blocks)
}

/// Inverse of [`sink_sequence_f`]: every edge points from the later block to the earlier one.
pub fn link_sequence_to_orientation(g: &Graph, sigma: &OrderedSetPartition) -> Result<Orientation> {
    if !is_stable_link_sequence(g, sigma) {
        return Err(Error::InvalidLinkSequence(sigma.to_string()));
    }
    let n = g.n();
    let mut block_of = vec![0usize; n];
    for (i, &b) in sigma.blocks().iter().enumerate() {
        for v in members(b) {
            block_of[v] = i;
        }
    }
    let arrows = g
        .edges()
        .into_iter()
        .map(|(u, v)| if block_of[u] > block_of[v] { (u, v) } else { (v, u) });
    Orientation::new(g.clone(), arrows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{
        acyclic_digraphs, acyclic_orientations, cycle_covers, directed_trees, graphs,
        hamiltonian_paths, stable_link_sequences,
    };
    use crate::samples;
    use std::collections::BTreeSet;

    #[test]
    fn foata_two_vertex_and_complete() {
        let d = Digraph::new(2, [(0, 1)]).unwrap();
        let c = foata_path_to_cycles(&d, &[1, 0]).unwrap();
        assert_eq!(c.cycles(), &[vec![0], vec![1]]);
        for n in 1..=5 {
            let d = Digraph::complete_acyclic(n);
            let paths = hamiltonian_paths(&d.complement()).unwrap();
            assert_eq!(paths.len(), 1);
            let c = foata_path_to_cycles(&d, &paths[0]).unwrap();
            assert_eq!(c.len(), n);
            assert_eq!(foata_cycles_to_path(&d, &c).unwrap(), paths[0]);
        }
    }

    #[test]
    fn foata_is_bijective_and_steps_keep_last_vertex() {
        for n in 1..=4 {
            for d in acyclic_digraphs(n) {
                let c = d.complement();
                let rank = ranks(&d).unwrap();
                let mut images = BTreeSet::new();
                for path in hamiltonian_paths(&c).unwrap() {
                    let (cover, steps) = foata_path_to_cycles_traced(&d, &path).unwrap();
                    let mut current = path.clone();
                    for s in &steps {
                        let last = *current.last().unwrap();
                        assert!(s.t() >> last & 1 == 1);
                        if let Some(&end) = s.rest.last() {
                            assert!(members(s.t()).all(|x| rank[end] > rank[x]));
                        }
                        assert!(c.is_path(&s.rest) && c.is_cycle(&s.cycle));
                        current = s.rest.clone();
                    }
                    assert_eq!(foata_cycles_to_path(&d, &cover).unwrap(), path);
                    images.insert(cover);
                }
                let all: BTreeSet<_> = cycle_covers(&c).unwrap().into_iter().collect();
                assert_eq!(images, all, "{d}");
            }
        }
    }

    #[test]
    fn foata_rejects_bad_input() {
        let d = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(foata_path_to_cycles(&d, &[0, 1]).is_err());
        let cyclic = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(foata_path_to_cycles(&cyclic, &[0, 0]), Err(Error::NotAcyclic));
    }

    #[test]
    fn trees_pair_with_functional_digraphs() {
        for n in 1..=3 {
            for d in acyclic_digraphs(n) {
                let c = d.complement();
                let mut images = BTreeSet::new();
                for (_, t) in directed_trees(&c).unwrap() {
                    for v in 0..n {
                        let f = tree_to_functional(&d, v, &t).unwrap();
                        assert!((0..n).all(|u| f.out_degree(u) == 1));
                        assert_eq!(functional_to_tree(&d, &f).unwrap(), (v, t.clone()));
                        images.insert(f);
                    }
                }
                let functional: u64 = (0..n).map(|u| c.out_degree(u) as u64).product();
                assert_eq!(images.len() as u64, functional);
            }
        }
        let one = Digraph::empty(1);
        let f = tree_to_functional(&one, 0, &Digraph::empty(1)).unwrap();
        assert!(f.has_arrow(0, 0));
    }

    #[test]
    fn shatter_round_trips() {
        for n in 1..=4 {
            for p in Poset::all(n) {
                let g = p.incomparability_graph();
                let orientations = acyclic_orientations(&g);
                let paths = hamiltonian_paths(&p.digraph().complement()).unwrap();
                assert_eq!(orientations.len(), paths.len());
                for a in &orientations {
                    let s = shatter_s(&p, a).unwrap();
                    assert!(p.digraph().complement().is_path(&s));
                    assert_eq!(&shatter_r(&p, &s).unwrap(), a);
                }
                for path in &paths {
                    assert_eq!(&shatter_s(&p, &shatter_r(&p, path).unwrap()).unwrap(), path);
                }
            }
        }
    }

    #[test]
    fn shatter_sample() {
        let p = samples::five_element_poset();
        let a = samples::five_element_orientation();
        assert_eq!(shatter_s(&p, &a).unwrap(), vec![1, 4, 2, 0, 3]);
        assert_eq!(shatter_r(&p, &[1, 4, 2, 0, 3]).unwrap(), a);
        let chain = Poset::chain(3);
        let empty = Orientation::towards_smaller(chain.incomparability_graph());
        assert_eq!(shatter_s(&chain, &empty).unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn circularity_examples() {
        for n in 2..=4 {
            let chain = Poset::chain(n);
            let o = Orientation::towards_smaller(chain.incomparability_graph());
            assert!(!is_circular(&chain, &o).unwrap());
            let anti = Poset::antichain(n);
            for a in acyclic_orientations(&anti.incomparability_graph()) {
                assert!(is_circular(&anti, &a).unwrap());
            }
        }
        let p = samples::five_element_poset();
        assert!(is_circular(&p, &samples::five_element_circular_orientation()).unwrap());
    }

    #[test]
    fn second_sink_sample() {
        let p = samples::five_element_poset();
        let a = samples::five_element_circular_orientation();
        let (b, steps) = second_sink_t_traced(&p, &a).unwrap();
        assert_eq!(b, samples::five_element_orientation());
        assert_eq!(steps.iter().map(|s| s.vertex).collect::<Vec<_>>(), vec![3, 0, 3]);
        assert!(steps.iter().all(|s| s.invariant_holds));
        let (back, usteps) = second_sink_u_traced(&p, &b).unwrap();
        assert_eq!(back, a);
        assert!(usteps.iter().all(|s| s.invariant_holds));
    }

    #[test]
    fn second_sink_census() {
        for n in 1..=4 {
            for p in Poset::all(n) {
                let g = p.incomparability_graph();
                if !g.is_connected() {
                    continue;
                }
                let all = acyclic_orientations(&g);
                for a in all.iter().filter(|a| is_circular(&p, a).unwrap()) {
                    let (b, steps) = second_sink_t_traced(&p, a).unwrap();
                    assert_eq!(b.sinks(), 1 << p.max_of_chain(a.sinks()));
                    assert!(steps.iter().all(|s| s.invariant_holds));
                    assert_eq!(&second_sink_u(&p, &b).unwrap(), a);
                }
                for b in all.iter().filter(|b| b.sinks().count_ones() == 1) {
                    let (a, steps) = second_sink_u_traced(&p, b).unwrap();
                    assert!(steps.iter().all(|s| s.invariant_holds));
                    assert_eq!(a.sinks() & b.sinks(), b.sinks());
                    assert_eq!(&second_sink_t(&p, &a).unwrap(), b);
                }
            }
        }
    }

    #[test]
    fn sink_sequences_are_bijective() {
        for n in 1..=4 {
            for g in graphs(n) {
                let seqs = stable_link_sequences(&g);
                let mut images = Vec::new();
                for a in acyclic_orientations(&g) {
                    let s = sink_sequence_f(&g, &a).unwrap();
                    assert!(is_stable_link_sequence(&g, &s));
                    assert_eq!(link_sequence_to_orientation(&g, &s).unwrap(), a);
                    images.push(s);
                }
                images.sort();
                assert_eq!(images, seqs);
            }
        }
        let k3 = Graph::complete(3);
        let sigma = OrderedSetPartition::from_blocks(3, &[vec![2], vec![0], vec![1]]).unwrap();
        let o = link_sequence_to_orientation(&k3, &sigma).unwrap();
        assert_eq!(o.arrows(), vec![(0, 2), (1, 0), (1, 2)]);
        let bad = OrderedSetPartition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(link_sequence_to_orientation(&k3, &bad).is_err());
    }
}
