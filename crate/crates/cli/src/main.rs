//! `cyclecover`: symmetric functions, bijections and verification censuses
//! for small digraphs, graphs and posets.
//!
//! Exit status: 0 success, 1 census failure, 2 usage or parse error,
//! 3 input outside an operation's domain.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cyclecover::bijections::{
    foata_cycles_to_path, foata_path_to_cycles_traced, functional_to_tree,
    link_sequence_to_orientation, second_sink_t_traced, second_sink_u_traced, shatter_r,
    shatter_s_traced, sink_sequence_f, tree_to_functional, FlipStep,
};
use cyclecover::format::{parse_objects, Object};
use cyclecover::graph::members;
use cyclecover::symfunc::{chromatic_symfunc, pi_symfunc};
use cyclecover::verify::{run_census, scan_posets, CensusConfig, CensusReport, Theorem, DEFAULT_HARD_CAP};
use cyclecover::{Basis, Error, SymFunc};

#[derive(Parser)]
#[command(name = "cyclecover", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the symmetric function of a graph, digraph or poset.
    ///
    /// Graphs give the chromatic symmetric function; digraphs and posets give
    /// the path symmetric function.
    Csf {
        /// Object file, or `-` for stdin.
        input: PathBuf,
        /// Target basis: p, e, h, mt or m.
        #[arg(long, default_value = "e")]
        basis: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// For a poset, use the chromatic function of its incomparability graph.
        #[arg(long)]
        incomparability: bool,
    },
    /// Check an identity on every instance up to `--nmax`.
    Verify {
        /// Theorem id, or `all`.
        theorem: String,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Apply a bijection to the objects in a file.
    Bijection {
        /// foata, foata-inverse, tree, tree-inverse, shatter-r, shatter-s,
        /// second-sink-t, second-sink-u, sink-sequence or link-sequence.
        name: String,
        /// Object file, or `-` for stdin.
        input: PathBuf,
        /// Print intermediate steps as comment lines.
        #[arg(long)]
        trace: bool,
    },
    /// Compare e-coefficients by two routes over every poset on `n` elements.
    ScanPosets {
        n: usize,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        timing: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain_violation() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn hard_cap() -> Result<usize, Failure> {
    match std::env::var("CYCLECOVER_NMAX_HARD") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Usage(format!("CYCLECOVER_NMAX_HARD: `{v}` is not a number"))),
        Err(_) => Ok(DEFAULT_HARD_CAP),
    }
}

fn print_symfunc(f: &SymFunc, format: Format) {
    match format {
        Format::Text => println!("{f}"),
        Format::Json => println!("{}", f.to_json()),
    }
}

fn csf(input: &PathBuf, basis: &str, format: Format, incomparability: bool) -> Outcome {
    let basis: Basis = basis.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let objects = parse_objects(&read_input(input)?)?;
    if objects.is_empty() {
        return Err(Failure::Usage("no object found".into()));
    }
    for obj in objects {
        let f = match obj {
            Object::Graph(g) => chromatic_symfunc(&g)?,
            Object::Digraph(d) => pi_symfunc(&d)?,
            Object::Poset(p) if incomparability => chromatic_symfunc(&p.incomparability_graph())?,
            Object::Poset(p) => pi_symfunc(p.digraph())?,
            other => {
                return Err(Failure::Usage(format!(
                    "csf takes a graph, digraph or poset, found {}",
                    other.kind()
                )))
            }
        };
        print_symfunc(&f.convert(basis), format);
    }
    Ok(true)
}

fn print_report(r: &CensusReport, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(r).expect("serializable")),
        Format::Text => {
            let status = if r.passed { "PASS" } else { "FAIL" };
            print!("{status} {}: {} instances ({})", r.theorem, r.instances_checked, r.instance_space);
            if let Some(ms) = r.wall_time_ms {
                print!(" in {ms} ms");
            }
            println!();
            for f in &r.failures {
                println!("  failure: {f}");
            }
            if !r.findings.is_empty() {
                let unexpected: Vec<&String> =
                    r.findings.iter().filter(|f| f.contains("[UNEXPECTED]")).collect();
                println!(
                    "  findings: {} (JSON report lists all), {} unexpected",
                    r.findings.len(),
                    unexpected.len()
                );
                for f in unexpected {
                    println!("  finding: {f}");
                }
            }
        }
    }
}

fn verify(theorem: &str, nmax: usize, seed: u64, format: Format, timing: bool) -> Outcome {
    let theorems = if theorem == "all" {
        Theorem::ALL.to_vec()
    } else {
        vec![theorem
            .parse::<Theorem>()
            .map_err(|_| Failure::Usage(format!("unknown theorem id `{theorem}`")))?]
    };
    let config = CensusConfig {
        nmax,
        seed,
        hard_cap: hard_cap()?,
    };
    let mut ok = true;
    for t in theorems {
        let start = Instant::now();
        let mut r = run_census(t, &config)?;
        if timing {
            r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
        ok &= r.passed;
        print_report(&r, format);
    }
    Ok(ok)
}

fn scan(n: usize, report: Option<&PathBuf>, format: Format, timing: bool) -> Outcome {
    let start = Instant::now();
    let mut r = scan_posets(n, hard_cap()?)?;
    if timing {
        r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    if let Some(path) = report {
        let json = serde_json::to_string_pretty(&r).expect("serializable");
        fs::write(path, json + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    print_report(&r, format);
    Ok(r.passed)
}

fn set(s: u32) -> String {
    let vs: Vec<String> = members(s).map(|v| v.to_string()).collect();
    format!("{{{}}}", vs.join(","))
}

fn flip_trace(steps: &[FlipStep]) {
    for (i, s) in steps.iter().enumerate() {
        println!(
            "# flip {}: vertex {}, sinks {}, sources {}, invariant {}",
            i + 1,
            s.vertex,
            set(s.sinks_after),
            set(s.sources_after),
            if s.invariant_holds { "holds" } else { "FAILS" }
        );
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn wrong_input(name: &str, expected: &str, objects: &[Object]) -> Failure {
    let found: Vec<&str> = objects.iter().map(Object::kind).collect();
    Failure::Usage(format!("{name} expects {expected}, found [{}]", found.join(", ")))
}

fn bijection(name: &str, input: &PathBuf, trace: bool) -> Outcome {
    let objects = parse_objects(&read_input(input)?)?;
    let out = match (name, objects.as_slice()) {
        ("foata", [Object::Digraph(d), Object::Path { vertices, .. }]) => {
            let (cover, steps) = foata_path_to_cycles_traced(d, vertices)?;
            if trace {
                for (i, s) in steps.iter().enumerate() {
                    println!(
                        "# peel {}: S = {}, T = {}, path [{}], cycle ({})",
                        i + 1,
                        set(s.s()),
                        set(s.t()),
                        join(&s.rest),
                        join(&s.cycle)
                    );
                }
            }
            Object::Cycles(cover)
        }
        ("foata-inverse", [Object::Digraph(d), Object::Cycles(c)]) => Object::Path {
            n: d.n(),
            vertices: foata_cycles_to_path(d, c)?,
        },
        ("tree", [Object::Digraph(d), Object::Vertex(v), Object::Digraph(t)]) => {
            Object::Digraph(tree_to_functional(d, *v, t)?)
        }
        ("tree-inverse", [Object::Digraph(d), Object::Digraph(f)]) => {
            let (v, t) = functional_to_tree(d, f)?;
            print!("{}", Object::Vertex(v));
            Object::Digraph(t)
        }
        ("shatter-r", [Object::Poset(p), Object::Path { vertices, .. }]) => {
            Object::Orientation(shatter_r(p, vertices)?)
        }
        ("shatter-s", [Object::Poset(p), Object::Orientation(a)]) => {
            let steps = shatter_s_traced(p, a)?;
            if trace {
                for (i, s) in steps.iter().enumerate() {
                    println!("# step {}: sinks {}, remove {}", i + 1, set(s.sinks), s.chosen);
                }
            }
            Object::Path {
                n: p.n(),
                vertices: steps.iter().map(|s| s.chosen).collect(),
            }
        }
        ("second-sink-t", [Object::Poset(p), Object::Orientation(a)]) => {
            let (b, steps) = second_sink_t_traced(p, a)?;
            if trace {
                flip_trace(&steps);
            }
            Object::Orientation(b)
        }
        ("second-sink-u", [Object::Poset(p), Object::Orientation(b)]) => {
            let (a, steps) = second_sink_u_traced(p, b)?;
            if trace {
                flip_trace(&steps);
            }
            Object::Orientation(a)
        }
        ("sink-sequence", [Object::Orientation(a)]) => {
            Object::Sequence(sink_sequence_f(a.graph(), a)?)
        }
        ("sink-sequence", [Object::Graph(g), Object::Orientation(a)]) => {
            Object::Sequence(sink_sequence_f(g, a)?)
        }
        ("link-sequence", [Object::Graph(g), Object::Sequence(s)]) => {
            Object::Orientation(link_sequence_to_orientation(g, s)?)
        }
        ("foata", _) => return Err(wrong_input(name, "a digraph and a path", &objects)),
        ("foata-inverse", _) => return Err(wrong_input(name, "a digraph and cycles", &objects)),
        ("tree", _) => return Err(wrong_input(name, "a digraph, a vertex and a tree digraph", &objects)),
        ("tree-inverse", _) => return Err(wrong_input(name, "two digraphs", &objects)),
        ("shatter-r", _) => return Err(wrong_input(name, "a poset and a path", &objects)),
        ("shatter-s" | "second-sink-t" | "second-sink-u", _) => {
            return Err(wrong_input(name, "a poset and an orientation", &objects))
        }
        ("sink-sequence", _) => return Err(wrong_input(name, "an orientation", &objects)),
        ("link-sequence", _) => return Err(wrong_input(name, "a graph and a sequence", &objects)),
        _ => return Err(Failure::Usage(format!("unknown bijection `{name}`"))),
    };
    print!("{out}");
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Csf {
            input,
            basis,
            format,
            incomparability,
        } => csf(input, basis, *format, *incomparability),
        Command::Verify {
            theorem,
            nmax,
            seed,
            format,
            timing,
        } => verify(theorem, *nmax, *seed, *format, *timing),
        Command::Bijection { name, input, trace } => bijection(name, input, *trace),
        Command::ScanPosets {
            n,
            report,
            format,
            timing,
        } => scan(*n, report.as_ref(), *format, *timing),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("domain violation: {msg}");
            ExitCode::from(3)
        }
    }
}
