//! Census drivers: each identity is checked on every labeled instance up to an
//! exhaustive size, and on seeded random samples above it.
//!
//! Reports are deterministic given `(theorem, nmax, seed)`: instances are
//! generated sequentially, checked in parallel, and failures are sorted.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{
    foata_cycles_to_path, foata_path_to_cycles, functional_to_tree, is_circular,
    link_sequence_to_orientation, second_sink_t_traced, second_sink_u_traced, shatter_r,
    shatter_s, sink_sequence_f, tree_to_functional,
};
use crate::enumerate::{
    acyclic_digraphs, acyclic_orientations, assembled_from_layers, count_hamiltonian_paths,
    cycle_covers, digraphs, directed_trees, eta_polynomial, graphs, hamiltonian_paths,
    is_stable_link_sequence, layering_j, path_covers, set_partitions_of, stable_link_sequences,
    OrderedSetPartition,
};
use crate::error::{Error, Result};
use crate::graph::{full_set, Digraph, Graph, Poset, VertexSet};
use crate::partition::Partition;
use crate::setmaps::{
    lass_reciprocity_check, path_pairs, path_setmap, pathsum_involution, pathsum_signed_sum,
    signed_complement_setmap, SetMap,
};
use crate::symfunc::{
    chromatic_symfunc, inc_e_coefficient, is_e_positive, p_to_e_via_tau, pi_symfunc,
    pi_via_berge_lass, z_e_coefficient_direct, z_h_coefficient_direct, z_symfunc, Basis, Rational,
    SymFunc,
};

/// Default ceiling on census sizes.
pub const DEFAULT_HARD_CAP: usize = 6;

/// The identities a census can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// Paths and cycle covers of complements of acyclic digraphs are equinumerous, via Foata.
    PathsEqualCovers,
    /// `Π = Z` on complements of acyclic digraphs.
    PiEqualsZ,
    /// Both counts satisfy the deletion-contraction recurrence.
    DeletionContraction,
    /// Directed tree count on the complement of an acyclic digraph.
    TreeCount,
    /// `p_λ` in the elementary basis via acyclic subdigraphs of `τ_λ`.
    PowerSumsViaTau,
    /// `[e_λ] Z_D` by counting pairs of path and cycle covers.
    ZElementary,
    /// `[h_λ] Z_D` by summing determinants of contractions.
    ZHomogeneous,
    /// `Π_P = X_{inc(P)}`.
    IncPath,
    /// `[e_λ] X_{inc(P)}` by summing determinants over weakly decreasing covers.
    IncElementary,
    /// The shatter maps are mutually inverse.
    Shatter,
    /// The second-sink maps are mutually inverse with per-flip invariants.
    SecondSink,
    /// Sink sequences biject onto stable link sequences.
    LinkSequences,
    /// `a_G = η_G(-1)` and the layering characterization.
    Eta,
    /// The signed path sum vanishes via a sign-reversing involution.
    PathSum,
    /// Reciprocity for path set maps.
    Lass,
    /// Hamiltonian paths from cycle counts of restrictions.
    BergeLass,
    /// `ω(Π_D) = Π_{D̄}`.
    OmegaReciprocity,
}

impl Theorem {
    pub const ALL: [Theorem; 17] = [
        Theorem::PathsEqualCovers,
        Theorem::PiEqualsZ,
        Theorem::DeletionContraction,
        Theorem::TreeCount,
        Theorem::PowerSumsViaTau,
        Theorem::ZElementary,
        Theorem::ZHomogeneous,
        Theorem::IncPath,
        Theorem::IncElementary,
        Theorem::Shatter,
        Theorem::SecondSink,
        Theorem::LinkSequences,
        Theorem::Eta,
        Theorem::PathSum,
        Theorem::Lass,
        Theorem::BergeLass,
        Theorem::OmegaReciprocity,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::PathsEqualCovers => "peqc2",
            Theorem::PiEqualsZ => "peqc1",
            Theorem::DeletionContraction => "deletion-contraction",
            Theorem::TreeCount => "rtree",
            Theorem::PowerSumsViaTau => "eco-lemma",
            Theorem::ZElementary => "zexp1",
            Theorem::ZHomogeneous => "zexp2",
            Theorem::IncPath => "incpath",
            Theorem::IncElementary => "eco",
            Theorem::Shatter => "shatter",
            Theorem::SecondSink => "second-sink",
            Theorem::LinkSequences => "sls",
            Theorem::Eta => "eta",
            Theorem::PathSum => "pathsum",
            Theorem::Lass => "lass",
            Theorem::BergeLass => "berge-lass",
            Theorem::OmegaReciprocity => "omega-reciprocity",
        }
    }

    /// Largest `n` checked exhaustively; larger sizes are sampled.
    pub fn exhaustive_cap(self) -> usize {
        match self {
            Theorem::PowerSumsViaTau => usize::MAX,
            Theorem::IncPath | Theorem::IncElementary | Theorem::Shatter | Theorem::SecondSink => 5,
            Theorem::LinkSequences | Theorem::Eta => 5,
            Theorem::Lass | Theorem::OmegaReciprocity => 3,
            _ => 4,
        }
    }

    /// Samples drawn at each size above the exhaustive cap.
    pub fn samples(self) -> usize {
        match self {
            Theorem::TreeCount => 50,
            Theorem::Lass | Theorem::OmegaReciprocity => 500,
            _ => 200,
        }
    }

    fn family(self) -> Family {
        match self {
            Theorem::PathsEqualCovers
            | Theorem::PiEqualsZ
            | Theorem::DeletionContraction
            | Theorem::TreeCount => Family::AcyclicDigraphs,
            Theorem::PowerSumsViaTau => Family::Partitions,
            Theorem::ZElementary
            | Theorem::ZHomogeneous
            | Theorem::PathSum
            | Theorem::Lass
            | Theorem::BergeLass
            | Theorem::OmegaReciprocity => Family::Digraphs,
            Theorem::IncPath | Theorem::IncElementary | Theorem::Shatter | Theorem::SecondSink => {
                Family::Posets
            }
            Theorem::LinkSequences | Theorem::Eta => Family::Graphs,
        }
    }
}

impl Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown theorem id `{s}`")))
    }
}

#[derive(Clone, Copy)]
enum Family {
    AcyclicDigraphs,
    Digraphs,
    Posets,
    Graphs,
    Partitions,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::AcyclicDigraphs => "labeled acyclic digraphs",
            Family::Digraphs => "labeled digraphs with loops",
            Family::Posets => "labeled posets",
            Family::Graphs => "labeled simple graphs",
            Family::Partitions => "integer partitions",
        }
    }
}

/// Outcome of one census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub theorem: String,
    pub instance_space: String,
    pub instances_checked: u64,
    pub failures: Vec<String>,
    pub passed: bool,
    pub seed: u64,
    pub findings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// Census size limits and seed.
#[derive(Clone, Copy, Debug)]
pub struct CensusConfig {
    pub nmax: usize,
    pub seed: u64,
    pub hard_cap: usize,
}

impl CensusConfig {
    pub fn new(nmax: usize) -> Self {
        CensusConfig {
            nmax,
            seed: 0,
            hard_cap: DEFAULT_HARD_CAP,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn check(&self) -> Result<()> {
        if self.nmax > self.hard_cap {
            return Err(Error::TooLarge {
                n: self.nmax,
                max: self.hard_cap,
            });
        }
        Ok(())
    }
}

fn rng_for(seed: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_acyclic(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                arrows.push((order[i], order[j]));
            }
        }
    }
    Digraph::new(n, arrows).expect("in range")
}

fn random_digraph(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let bits = n * n;
    let code = if bits == 64 { rng.gen() } else { rng.gen::<u64>() & ((1u64 << bits) - 1) };
    Digraph::from_code(n, code)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    Graph::from_code(n, rng.gen::<u64>() & ((1u64 << bits) - 1))
}

fn random_poset(rng: &mut ChaCha8Rng, n: usize) -> Poset {
    let d = random_acyclic(rng, n);
    Poset::from_covers(n, d.arrows()).expect("acyclic relation")
}

type Check<T> = fn(&T) -> std::result::Result<(), String>;

/// Runs `check` over `instances` in parallel; failures are `instance: reason`, sorted.
fn run_all<T: Sync + Display>(instances: &[T], check: Check<T>) -> Vec<String> {
    let mut failures: Vec<String> = instances
        .par_iter()
        .filter_map(|x| check(x).err().map(|msg| format!("{x}: {msg}")))
        .collect();
    failures.sort();
    failures
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err_str<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Runs the census for `theorem` over sizes `1..=nmax`.
pub fn run_census(theorem: Theorem, config: &CensusConfig) -> Result<CensusReport> {
    config.check()?;
    let cap = theorem.exhaustive_cap();
    let family = theorem.family();
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for n in 1..=config.nmax {
        let exhaustive = n <= cap;
        let mut rng = rng_for(config.seed, n);
        let k = theorem.samples();
        let f = match family {
            Family::AcyclicDigraphs => {
                let xs = if exhaustive {
                    acyclic_digraphs(n)
                } else {
                    (0..k).map(|_| random_acyclic(&mut rng, n)).collect()
                };
                checked += xs.len() as u64;
                run_all(&xs, acyclic_check(theorem))
            }
            Family::Digraphs => {
                let xs: Vec<Digraph> = if exhaustive {
                    digraphs(n).collect()
                } else {
                    (0..k).map(|_| random_digraph(&mut rng, n)).collect()
                };
                checked += xs.len() as u64;
                run_all(&xs, digraph_check(theorem))
            }
            Family::Posets => {
                let xs = if exhaustive {
                    Poset::all(n)
                } else {
                    (0..k).map(|_| random_poset(&mut rng, n)).collect()
                };
                checked += xs.len() as u64;
                run_all(&xs, poset_check(theorem))
            }
            Family::Graphs => {
                let xs: Vec<Graph> = if exhaustive {
                    graphs(n).collect()
                } else {
                    (0..k).map(|_| random_graph(&mut rng, n)).collect()
                };
                checked += xs.len() as u64;
                run_all(&xs, graph_check(theorem))
            }
            Family::Partitions => {
                let xs = Partition::all(n);
                checked += xs.len() as u64;
                run_all(&xs, check_power_sums_via_tau)
            }
        };
        failures.extend(f);
    }
    let instance_space = if cap >= config.nmax {
        format!("{}, n = 1..={} exhaustive", family.name(), config.nmax)
    } else {
        format!(
            "{}, n = 1..={} exhaustive, {} seeded samples per n in {}..={}",
            family.name(),
            cap,
            theorem.samples(),
            cap + 1,
            config.nmax
        )
    };
    Ok(CensusReport {
        theorem: theorem.id().to_string(),
        instance_space,
        instances_checked: checked,
        passed: failures.is_empty(),
        failures,
        seed: config.seed,
        findings: Vec::new(),
        wall_time_ms: None,
    })
}

fn acyclic_check(t: Theorem) -> Check<Digraph> {
    match t {
        Theorem::PathsEqualCovers => check_paths_equal_covers,
        Theorem::PiEqualsZ => check_pi_equals_z,
        Theorem::DeletionContraction => check_deletion_contraction,
        Theorem::TreeCount => check_tree_count,
        _ => unreachable!("not an acyclic-digraph census"),
    }
}

fn digraph_check(t: Theorem) -> Check<Digraph> {
    match t {
        Theorem::ZElementary => check_z_elementary,
        Theorem::ZHomogeneous => check_z_homogeneous,
        Theorem::PathSum => check_pathsum,
        Theorem::Lass => check_lass,
        Theorem::BergeLass => check_berge_lass,
        Theorem::OmegaReciprocity => check_omega_reciprocity,
        _ => unreachable!("not a digraph census"),
    }
}

fn poset_check(t: Theorem) -> Check<Poset> {
    match t {
        Theorem::IncPath => check_inc_path,
        Theorem::IncElementary => check_inc_elementary,
        Theorem::Shatter => check_shatter,
        Theorem::SecondSink => check_second_sink,
        _ => unreachable!("not a poset census"),
    }
}

fn graph_check(t: Theorem) -> Check<Graph> {
    match t {
        Theorem::LinkSequences => check_link_sequences,
        Theorem::Eta => check_eta,
        _ => unreachable!("not a graph census"),
    }
}

fn check_paths_equal_covers(d: &Digraph) -> std::result::Result<(), String> {
    let c = d.complement();
    let paths = err_str(hamiltonian_paths(&c))?;
    let covers: BTreeSet<_> = err_str(cycle_covers(&c))?.into_iter().collect();
    ensure(paths.len() == covers.len(), || {
        format!("{} paths but {} cycle covers", paths.len(), covers.len())
    })?;
    let mut images = BTreeSet::new();
    for p in &paths {
        let cover = err_str(foata_path_to_cycles(d, p))?;
        let back = err_str(foata_cycles_to_path(d, &cover))?;
        ensure(&back == p, || format!("Foata round trip fails on {p:?}"))?;
        images.insert(cover);
    }
    ensure(images == covers, || "Foata image is not every cycle cover".into())?;
    let det = c.adjacency_determinant();
    ensure(det == BigInt::from(count_hamiltonian_paths(d)), || {
        format!("det of complement is {det}")
    })
}

fn check_pi_equals_z(d: &Digraph) -> std::result::Result<(), String> {
    let c = d.complement();
    let pi = err_str(pi_symfunc(&c))?.convert(Basis::P);
    let z = err_str(z_symfunc(&c))?;
    ensure(pi == z, || format!("Π = {pi} but Z = {z}"))
}

fn check_deletion_contraction(d: &Digraph) -> std::result::Result<(), String> {
    let n = d.n();
    let counts = |g: &Digraph| -> std::result::Result<(usize, usize), String> {
        let c = g.complement();
        Ok((err_str(hamiltonian_paths(&c))?.len(), err_str(cycle_covers(&c))?.len()))
    };
    let base = counts(d)?;
    for v in 0..n {
        for w in 0..n {
            if v == w || d.has_arrow(v, w) {
                continue;
            }
            let added = err_str(d.with_arrow(v, w))?;
            if !added.is_acyclic() {
                continue;
            }
            let contracted = err_str(d.contract_arrow(v, w))?;
            ensure(contracted.is_acyclic(), || format!("contraction by {v}>{w} has a cycle"))?;
            let a = counts(&added)?;
            let b = counts(&contracted)?;
            ensure(base.0 == a.0 + b.0, || {
                format!("paths: {} != {} + {} for {v}>{w}", base.0, a.0, b.0)
            })?;
            ensure(base.1 == a.1 + b.1, || {
                format!("covers: {} != {} + {} for {v}>{w}", base.1, a.1, b.1)
            })?;
        }
    }
    Ok(())
}

fn check_tree_count(d: &Digraph) -> std::result::Result<(), String> {
    let n = d.n();
    let c = d.complement();
    let trees = err_str(directed_trees(&c))?;
    let product: u64 = (0..n).map(|v| c.out_degree(v) as u64).product();
    ensure(trees.len() as u64 * n as u64 == product, || {
        format!("{} trees, product of out-degrees {product}", trees.len())
    })?;
    let mut images = BTreeSet::new();
    for (_, t) in &trees {
        for v in 0..n {
            let f = err_str(tree_to_functional(d, v, t))?;
            let back = err_str(functional_to_tree(d, &f))?;
            ensure(back == (v, t.clone()), || format!("tree pairing fails at vertex {v}"))?;
            images.insert(f);
        }
    }
    ensure(images.len() as u64 == product, || "tree pairing is not injective".into())
}

fn check_power_sums_via_tau(l: &Partition) -> std::result::Result<(), String> {
    let via = err_str(p_to_e_via_tau(l))?;
    let direct = SymFunc::basis_element(Basis::P, l).convert(Basis::E);
    ensure(via == direct, || format!("τ route {via}, conversion {direct}"))
}

/// Path covers of `d` grouped by type.
fn covers_by_type(d: &Digraph) -> std::result::Result<BTreeMap<Partition, Vec<crate::PathCover>>, String> {
    let mut out: BTreeMap<Partition, Vec<_>> = BTreeMap::new();
    for e in err_str(path_covers(d, None))? {
        out.entry(e.partition()).or_default().push(e);
    }
    Ok(out)
}

fn check_z_elementary(d: &Digraph) -> std::result::Result<(), String> {
    let n = d.n();
    let ze = err_str(z_symfunc(d))?.convert(Basis::E);
    let groups = covers_by_type(d)?;
    for l in Partition::all(n) {
        let mut direct = BigInt::zero();
        for e in groups.get(&l).into_iter().flatten() {
            direct += err_str(cycle_covers(&err_str(d.contract_path_cover(e))?))?.len();
        }
        if (n - l.len()) % 2 == 1 {
            direct = -direct;
        }
        let conv = ze.coeff(&l);
        ensure(Rational::from_integer(direct.clone()) == conv, || {
            format!("[e_{{{l}}}]: direct {direct}, conversion {conv}")
        })?;
    }
    // the grouped sum must agree with the public entry point
    let top = Partition::single(n);
    let public = err_str(z_e_coefficient_direct(d, &top))?;
    let sign = if n.is_multiple_of(2) { -1 } else { 1 };
    ensure(Rational::from_integer(public * sign) == ze.coeff(&top), || {
        "z_e_coefficient_direct disagrees".into()
    })
}

fn check_z_homogeneous(d: &Digraph) -> std::result::Result<(), String> {
    let n = d.n();
    let z = err_str(z_symfunc(d))?;
    // coefficient of h_λ in Z is the coefficient of e_λ in ω(Z)
    let via_omega = z.omega().convert(Basis::E);
    let zh = z.convert(Basis::H);
    ensure(via_omega.terms().eq(zh.terms()), || "ω route and h conversion disagree".into())?;
    let groups = covers_by_type(d)?;
    for l in Partition::all(n) {
        let mut direct = BigInt::zero();
        for e in groups.get(&l).into_iter().flatten() {
            direct += err_str(d.contract_path_cover(e))?.adjacency_determinant();
        }
        let conv = zh.coeff(&l);
        ensure(Rational::from_integer(direct.clone()) == conv, || {
            format!("[h_{{{l}}}]: direct {direct}, conversion {conv}")
        })?;
    }
    let top = Partition::single(n);
    ensure(
        Rational::from_integer(err_str(z_h_coefficient_direct(d, &top))?) == zh.coeff(&top),
        || "z_h_coefficient_direct disagrees".into(),
    )
}

fn check_pathsum(d: &Digraph) -> std::result::Result<(), String> {
    let n = d.n();
    let sum = pathsum_signed_sum(d);
    ensure(sum.is_zero(), || format!("signed sum is {sum}"))?;
    let pairs = err_str(path_pairs(d))?;
    for p in &pairs {
        let q = err_str(pathsum_involution(d, p))?;
        ensure(&q != p, || format!("fixed point {p:?}"))?;
        ensure(q.complement_len().abs_diff(p.complement_len()) == 1, || {
            format!("{p:?} and its image have the same sign")
        })?;
        ensure(pairs.binary_search(&q).is_ok(), || format!("image of {p:?} is not a pair"))?;
        ensure(&err_str(pathsum_involution(d, &q))? == p, || {
            format!("not an involution at {p:?}")
        })?;
    }
    let h = err_str(path_setmap(d))?;
    let g = err_str(signed_complement_setmap(d))?;
    ensure(err_str(h.multiply(&g))? == err_str(SetMap::identity(n))?, || {
        "path set maps are not inverse".into()
    })
}

fn check_lass(d: &Digraph) -> std::result::Result<(), String> {
    let h = err_str(path_setmap(d))?;
    for s in 1..=full_set(d.n()) {
        ensure(err_str(lass_reciprocity_check(&h, s))?, || {
            format!("reciprocity fails on subset {s:#b}")
        })?;
    }
    Ok(())
}

fn check_berge_lass(h: &Digraph) -> std::result::Result<(), String> {
    let direct = err_str(hamiltonian_paths(h))?.len();
    let formula = err_str(pi_via_berge_lass(h))?;
    ensure(formula == BigInt::from(direct), || format!("{direct} paths, formula {formula}"))
}

fn check_omega_reciprocity(d: &Digraph) -> std::result::Result<(), String> {
    let lhs = err_str(pi_symfunc(d))?.omega();
    let rhs = err_str(pi_symfunc(&d.complement()))?;
    ensure(lhs == rhs, || format!("ω(Π_D) = {lhs}, Π of complement = {rhs}"))
}

fn check_inc_path(p: &Poset) -> std::result::Result<(), String> {
    let pi = err_str(pi_symfunc(p.digraph()))?;
    let x = err_str(chromatic_symfunc(&p.incomparability_graph()))?;
    ensure(pi == x, || format!("Π_P = {pi}, X = {x}"))
}

fn check_inc_elementary(p: &Poset) -> std::result::Result<(), String> {
    let xe = err_str(chromatic_symfunc(&p.incomparability_graph()))?.convert(Basis::E);
    for l in Partition::all(p.n()) {
        let direct = err_str(inc_e_coefficient(p, &l))?;
        let conv = xe.coeff(&l);
        ensure(Rational::from_integer(direct.clone()) == conv, || {
            format!("[e_{{{l}}}]: determinant sum {direct}, conversion {conv}")
        })?;
    }
    Ok(())
}

fn check_shatter(p: &Poset) -> std::result::Result<(), String> {
    let g = p.incomparability_graph();
    let orientations = acyclic_orientations(&g);
    let paths = err_str(hamiltonian_paths(&p.digraph().complement()))?;
    ensure(orientations.len() == paths.len(), || {
        format!("{} orientations, {} weakly decreasing paths", orientations.len(), paths.len())
    })?;
    let complement = p.digraph().complement();
    for a in &orientations {
        let s = err_str(shatter_s(p, a))?;
        ensure(complement.is_path(&s) && s.len() == p.n(), || {
            format!("shatter-path {s:?} is not weakly decreasing")
        })?;
        ensure(&err_str(shatter_r(p, &s))? == a, || format!("r(s(A)) != A for {a}"))?;
    }
    for path in &paths {
        let a = err_str(shatter_r(p, path))?;
        ensure(&err_str(shatter_s(p, &a))? == path, || format!("s(r(F)) != F for {path:?}"))?;
    }
    Ok(())
}

fn check_second_sink(p: &Poset) -> std::result::Result<(), String> {
    let g = p.incomparability_graph();
    if !g.is_connected() {
        return Ok(());
    }
    let all = acyclic_orientations(&g);
    // per vertex v: circular with greatest sink v, and unique sink at v
    let mut circular_at = vec![BTreeSet::new(); p.n()];
    let mut unique_at = vec![BTreeSet::new(); p.n()];
    for a in &all {
        if err_str(is_circular(p, a))? {
            let (b, steps) = err_str(second_sink_t_traced(p, a))?;
            ensure(steps.iter().all(|s| s.invariant_holds), || {
                format!("t flip invariant fails on {a}")
            })?;
            ensure(b.sinks().count_ones() == 1, || format!("t({a}) has several sinks"))?;
            let (back, usteps) = err_str(second_sink_u_traced(p, &b))?;
            ensure(&back == a, || format!("u(t(A)) != A for {a}"))?;
            ensure(usteps.iter().all(|s| s.invariant_holds), || {
                format!("u flip invariant fails on {b}")
            })?;
            let v = b.sinks().trailing_zeros() as usize;
            ensure(a.sinks() >> v & 1 == 1, || "greatest sink moved".into())?;
            circular_at[v].insert(a.clone());
            unique_at[v].insert(b);
        }
    }
    for b in all.iter().filter(|b| b.sinks().count_ones() == 1) {
        let v = b.sinks().trailing_zeros() as usize;
        ensure(unique_at[v].contains(b), || format!("{b} is not t of any circular orientation"))?;
    }
    for (v, circ) in circular_at.iter().enumerate() {
        let unique = all.iter().filter(|b| b.sinks() == 1 << v).count();
        ensure(circ.len() == unique, || {
            format!("vertex {v}: {} circular, {unique} unique-sink", circ.len())
        })?;
    }
    Ok(())
}

fn check_link_sequences(g: &Graph) -> std::result::Result<(), String> {
    let seqs = stable_link_sequences(g);
    let mut images = Vec::new();
    for a in acyclic_orientations(g) {
        let s = err_str(sink_sequence_f(g, &a))?;
        ensure(is_stable_link_sequence(g, &s), || format!("f({a}) = {s} is not stable-linked"))?;
        ensure(err_str(link_sequence_to_orientation(g, &s))? == a, || {
            format!("inverse fails on {s}")
        })?;
        images.push(s);
    }
    images.sort();
    ensure(images == seqs, || {
        format!("{} orientations, {} stable link sequences", images.len(), seqs.len())
    })
}

fn ordered_set_partitions(n: usize) -> Vec<OrderedSetPartition> {
    fn permute(blocks: &mut Vec<VertexSet>, k: usize, n: usize, out: &mut Vec<OrderedSetPartition>) {
        if k == blocks.len() {
            out.push(OrderedSetPartition::new(n, blocks.clone()).expect("valid blocks"));
            return;
        }
        for i in k..blocks.len() {
            blocks.swap(k, i);
            permute(blocks, k + 1, n, out);
            blocks.swap(k, i);
        }
    }
    let mut out = Vec::new();
    for mut sigma in set_partitions_of(full_set(n)) {
        permute(&mut sigma, 0, n, &mut out);
    }
    out
}

fn check_eta(g: &Graph) -> std::result::Result<(), String> {
    let n = g.n();
    // layering characterization, over every ordered set partition
    for sigma in ordered_set_partitions(n) {
        let by_layers = layering_j(g, sigma.blocks()[0]).ok() == Some(sigma.clone());
        ensure(by_layers == assembled_from_layers(g, &sigma), || {
            format!("layering and assembly disagree on {sigma}")
        })?;
    }
    if !g.is_connected() {
        ensure(eta_polynomial(g).is_zero(), || "η of a disconnected graph is nonzero".into())?;
        return Ok(());
    }
    let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let eta = eta_polynomial(g).eval(-1) * &sign;
    let unique_at_0 = acyclic_orientations(g).iter().filter(|a| a.sinks() == 1).count();
    ensure(eta == BigInt::from(unique_at_0), || {
        format!("(-1)^(n-1) η(-1) = {eta}, unique sinks at 0: {unique_at_0}")
    })?;
    let x = err_str(chromatic_symfunc(g))?.convert(Basis::P);
    let a = x.coeff(&Partition::single(n)) * Rational::from_integer(sign);
    ensure(a == Rational::from_integer(eta.clone()), || {
        format!("(-1)^(n-1) [p_n] X = {a}, η route {eta}")
    })
}

/// Scans every labeled poset on `n` elements: e-coefficients of the
/// incomparability graph by determinant sums and by conversion must agree.
/// Posets whose function is not e-positive are listed as findings with their
/// (3+1)-freeness.
pub fn scan_posets(n: usize, hard_cap: usize) -> Result<CensusReport> {
    if n > hard_cap {
        return Err(Error::TooLarge { n, max: hard_cap });
    }
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let posets = Poset::all(n);
    let results: Vec<(Option<String>, Option<String>)> = posets
        .par_iter()
        .map(|p| {
            let x = match chromatic_symfunc(&p.incomparability_graph()) {
                Ok(x) => x,
                Err(e) => return (Some(format!("{p}: {e}")), None),
            };
            let xe = x.convert(Basis::E);
            let mut failure = None;
            for l in Partition::all(n) {
                match inc_e_coefficient(p, &l) {
                    Ok(d) if Rational::from_integer(d.clone()) == xe.coeff(&l) => {}
                    Ok(d) => {
                        failure = Some(format!(
                            "{p}: [e_{{{l}}}] determinant sum {d}, conversion {}",
                            xe.coeff(&l)
                        ));
                        break;
                    }
                    Err(e) => {
                        failure = Some(format!("{p}: {e}"));
                        break;
                    }
                }
            }
            let finding = (!is_e_positive(&x)).then(|| {
                let free = p.is_three_plus_one_free();
                format!(
                    "{p}: not e-positive, (3+1)-free: {free}{}; X = {xe}",
                    if free { " [UNEXPECTED]" } else { "" }
                )
            });
            (failure, finding)
        })
        .collect();
    let mut failures: Vec<String> = results.iter().filter_map(|r| r.0.clone()).collect();
    let mut findings: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    failures.sort();
    findings.sort();
    Ok(CensusReport {
        theorem: "scan-posets".into(),
        instance_space: format!("labeled posets on {n} elements, exhaustive"),
        instances_checked: posets.len() as u64,
        passed: failures.is_empty(),
        failures,
        seed: 0,
        findings,
        wall_time_ms: None,
    })
}
