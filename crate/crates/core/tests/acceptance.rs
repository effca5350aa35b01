//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Counts that the library computes are re-derived here by brute force over
//! permutations wherever that is cheap enough.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cyclecover::bijections::{
    foata_cycles_to_path, foata_path_to_cycles, is_circular, second_sink_t_traced, second_sink_u,
    shatter_r, shatter_s,
};
use cyclecover::enumerate::{acyclic_digraphs, cycle_covers, hamiltonian_paths};
use cyclecover::samples;
use cyclecover::symfunc::p_to_e_via_tau;
use cyclecover::verify::{run_census, scan_posets, CensusConfig, CensusReport, Theorem};
use cyclecover::{Basis, Digraph, Partition, SymFunc};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Hamiltonian paths and cycle covers counted straight from the definitions.
fn brute_counts(d: &Digraph, perms: &[Vec<usize>]) -> (usize, usize) {
    let paths = perms
        .iter()
        .filter(|p| p.windows(2).all(|w| d.has_arrow(w[0], w[1])))
        .count();
    let covers = perms
        .iter()
        .filter(|s| s.iter().enumerate().all(|(i, &j)| d.has_arrow(i, j)))
        .count();
    (paths, covers)
}

fn census(t: Theorem, nmax: usize) -> Result<CensusReport, String> {
    let r = run_census(t, &CensusConfig::new(nmax)).map_err(|e| e.to_string())?;
    if r.passed {
        Ok(r)
    } else {
        Err(format!("{t}: {} failures, first {}", r.failures.len(), r.failures[0]))
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_acyclic_example() -> Outcome {
    let start = Instant::now();
    let d = samples::four_vertex_acyclic();
    let c = d.complement();
    let paths = hamiltonian_paths(&c).map_err(|e| e.to_string())?;
    let covers = cycle_covers(&c).map_err(|e| e.to_string())?;
    check(paths.len() == 7 && covers.len() == 7, || {
        format!("{} paths, {} covers", paths.len(), covers.len())
    })?;
    check(brute_counts(&c, &permutations(4)) == (7, 7), || "brute force disagrees".into())?;
    for p in &paths {
        let cover = foata_path_to_cycles(&d, p).map_err(|e| e.to_string())?;
        check(covers.contains(&cover), || format!("{p:?} maps outside the covers"))?;
        check(foata_cycles_to_path(&d, &cover).map_err(|e| e.to_string())? == *p, || {
            format!("round trip fails on {p:?}")
        })?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("7 paths, 7 covers in {:?}", start.elapsed()))
}

fn paths_equal_covers() -> Outcome {
    let start = Instant::now();
    let r = census(Theorem::PathsEqualCovers, 4)?;
    let mut total = 0;
    for n in 1..=4 {
        let perms = permutations(n);
        let ds = acyclic_digraphs(n);
        total += ds.len();
        for d in &ds {
            let (p, c) = brute_counts(&d.complement(), &perms);
            check(p == c, || format!("{d}: {p} paths, {c} covers"))?;
        }
    }
    check(total == 1 + 3 + 25 + 543, || format!("{total} acyclic digraphs"))?;
    check(r.instances_checked == total as u64, || "census size differs".into())?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{total} acyclic digraphs, Foata round trips, {:?}", start.elapsed()))
}

fn deletion_contraction() -> Outcome {
    let r = census(Theorem::DeletionContraction, 4)?;
    Ok(format!("{} acyclic digraphs", r.instances_checked))
}

fn tree_count() -> Outcome {
    let r = census(Theorem::TreeCount, 4)?;
    Ok(format!("{} acyclic digraphs", r.instances_checked))
}

fn power_sums_via_tau() -> Outcome {
    let r = census(Theorem::PowerSumsViaTau, 6)?;
    let p2 = p_to_e_via_tau(&Partition::single(2)).map_err(|e| e.to_string())?;
    check(p2.to_string() == "e_{1,1} - 2 e_{2}", || format!("p_2 = {p2}"))?;
    let conv = SymFunc::basis_element(Basis::P, &Partition::single(2)).convert(Basis::E);
    check(conv == p2, || format!("conversion gives {conv}"))?;
    Ok(format!("{} partitions, p_2 = {p2}", r.instances_checked))
}

fn z_expansions() -> Outcome {
    let start = Instant::now();
    let a = census(Theorem::ZElementary, 4)?;
    let b = census(Theorem::ZHomogeneous, 4)?;
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{} digraphs for e and h coefficients, {:?}",
        a.instances_checked.max(b.instances_checked),
        start.elapsed()
    ))
}

fn incomparability() -> Outcome {
    let a = census(Theorem::IncPath, 5)?;
    census(Theorem::IncElementary, 5)?;
    check(a.instances_checked == 1 + 3 + 19 + 219 + 4231, || {
        format!("{} posets", a.instances_checked)
    })?;
    Ok(format!("{} labeled posets", a.instances_checked))
}

fn shatter() -> Outcome {
    let r = census(Theorem::Shatter, 4)?;
    let p = samples::five_element_poset();
    let a = samples::five_element_orientation();
    let s = shatter_s(&p, &a).map_err(|e| e.to_string())?;
    check(s == [1, 4, 2, 0, 3], || format!("sample shatter-path {s:?}"))?;
    check(shatter_r(&p, &s).map_err(|e| e.to_string())? == a, || "sample r(s(A)) != A".into())?;
    Ok(format!("{} posets, sample path {s:?}", r.instances_checked))
}

fn second_sink() -> Outcome {
    let r = census(Theorem::SecondSink, 4)?;
    let p = samples::five_element_poset();
    let a = samples::five_element_circular_orientation();
    check(is_circular(&p, &a).map_err(|e| e.to_string())?, || "sample is not circular".into())?;
    let (b, steps) = second_sink_t_traced(&p, &a).map_err(|e| e.to_string())?;
    check(b == samples::five_element_orientation(), || format!("t(A) = {b}"))?;
    check(steps.iter().all(|s| s.invariant_holds), || "sample flip invariant".into())?;
    check(second_sink_u(&p, &b).map_err(|e| e.to_string())? == a, || "sample u(t(A)) != A".into())?;
    Ok(format!("{} posets, sample reaches its unique sink in {} flips", r.instances_checked, steps.len()))
}

fn link_sequences() -> Outcome {
    let a = census(Theorem::LinkSequences, 4)?;
    census(Theorem::Eta, 4)?;
    Ok(format!("{} graphs", a.instances_checked))
}

fn set_maps() -> Outcome {
    let a = census(Theorem::PathSum, 4)?;
    let b = census(Theorem::OmegaReciprocity, 5)?;
    let c = census(Theorem::Lass, 5)?;
    let expected = 2 + 16 + 512 + 500 + 500;
    check(b.instances_checked == expected && c.instances_checked == expected, || {
        format!("{} and {} instances", b.instances_checked, c.instances_checked)
    })?;
    Ok(format!(
        "pathsum on {} digraphs; reciprocity on {} (exhaustive to 3, 500 samples at 4 and 5)",
        a.instances_checked, b.instances_checked
    ))
}

fn berge_lass() -> Outcome {
    let r = census(Theorem::BergeLass, 4)?;
    Ok(format!("{} digraphs with loops", r.instances_checked))
}

fn scan() -> Outcome {
    let mut posets = 0;
    let mut findings = 0;
    for n in 1..=5 {
        let r = scan_posets(n, 6).map_err(|e| e.to_string())?;
        check(r.passed, || format!("n = {n}: {}", r.failures[0]))?;
        if let Some(f) = r.findings.iter().find(|f| f.contains("UNEXPECTED")) {
            return Err(format!("(3+1)-free poset not e-positive: {f}"));
        }
        posets += r.instances_checked;
        findings += r.findings.len();
    }
    Ok(format!(
        "{posets} posets, routes agree; {findings} non-e-positive, none (3+1)-free"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("small acyclic digraph: 7 paths and 7 cycle covers", small_acyclic_example),
        ("paths equal cycle covers, Foata round trip, n <= 4", paths_equal_covers),
        ("deletion-contraction for both counts, n <= 4", deletion_contraction),
        ("directed tree count, n <= 4", tree_count),
        ("power sums via acyclic subdigraphs, n <= 6", power_sums_via_tau),
        ("direct e and h coefficients of Z, n <= 4", z_expansions),
        ("incomparability functions and determinant e-coefficients, n <= 5", incomparability),
        ("shatter maps mutually inverse, n <= 4", shatter),
        ("second-sink maps and flip invariants, n <= 4", second_sink),
        ("sink sequences and eta at -1, n <= 4", link_sequences),
        ("path sums, omega reciprocity, set map reciprocity", set_maps),
        ("path counts from restricted cycle counts, n <= 4", berge_lass),
        ("e-positivity scan, n <= 5", scan),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
