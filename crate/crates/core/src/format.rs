//! Plain-text object files.
//!
//! Each object starts with a header line `<kind> <n>` followed by body lines
//! of whitespace-separated 0-based indices. `#` starts a comment. A file may
//! hold several objects in sequence.
//!
//! ```text
//! digraph 3      # one "u v" arrow per line
//! 0 1
//! graph 3        # one "u v" edge per line
//! poset 3        # one "u v" cover relation per line (u < v)
//! orientation 3  # one "u v" arrow per line; the graph is the set of arrows
//! path 3         # one line listing the vertices in order
//! cycles 3       # one line per cycle
//! sequence 3     # one line per block
//! vertex 2       # a single vertex, no body
//! ```

use std::fmt;

use crate::enumerate::OrderedSetPartition;
use crate::error::{Error, Result};
use crate::graph::{check_size, members, CycleCover, Digraph, Graph, Orientation, Poset};

const KINDS: [&str; 8] = [
    "digraph",
    "graph",
    "poset",
    "orientation",
    "path",
    "cycles",
    "sequence",
    "vertex",
];

/// One parsed object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Digraph(Digraph),
    Graph(Graph),
    Poset(Poset),
    Orientation(Orientation),
    Path { n: usize, vertices: Vec<usize> },
    Cycles(CycleCover),
    Sequence(OrderedSetPartition),
    Vertex(usize),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Digraph(_) => "digraph",
            Object::Graph(_) => "graph",
            Object::Poset(_) => "poset",
            Object::Orientation(_) => "orientation",
            Object::Path { .. } => "path",
            Object::Cycles(_) => "cycles",
            Object::Sequence(_) => "sequence",
            Object::Vertex(_) => "vertex",
        }
    }
}

struct Block {
    line: usize,
    kind: String,
    arg: usize,
    body: Vec<(usize, Vec<usize>)>,
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(line, format!("expected a nonnegative integer, found `{t}`")))
        })
        .collect()
}

fn pairs(block: &Block) -> Result<Vec<(usize, usize)>> {
    block
        .body
        .iter()
        .map(|(line, nums)| match nums.as_slice() {
            [u, v] => Ok((*u, *v)),
            _ => Err(Error::parse(*line, "expected two indices `u v`")),
        })
        .collect()
}

fn at(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    }
}

fn build(block: Block) -> Result<Object> {
    let n = block.arg;
    let line = block.line;
    if block.kind != "vertex" {
        check_size(n).map_err(at(line))?;
    }
    let obj = match block.kind.as_str() {
        "digraph" => Object::Digraph(Digraph::new(n, pairs(&block)?).map_err(at(line))?),
        "graph" => Object::Graph(Graph::new(n, pairs(&block)?).map_err(at(line))?),
        "poset" => Object::Poset(Poset::from_covers(n, pairs(&block)?).map_err(at(line))?),
        "orientation" => {
            let arrows = pairs(&block)?;
            let g = Graph::new(n, arrows.iter().copied()).map_err(at(line))?;
            Object::Orientation(Orientation::new(g, arrows).map_err(at(line))?)
        }
        "path" => {
            let vertices = match block.body.as_slice() {
                [] => Vec::new(),
                [(_, v)] => v.clone(),
                _ => return Err(Error::parse(line, "a path has a single body line")),
            };
            if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
                return Err(Error::parse(line, format!("vertex {v} out of range for {n} vertices")));
            }
            Object::Path { n, vertices }
        }
        "cycles" => Object::Cycles(
            CycleCover::new(n, block.body.into_iter().map(|(_, c)| c).collect()).map_err(at(line))?,
        ),
        "sequence" => Object::Sequence(
            OrderedSetPartition::from_blocks(
                n,
                &block.body.into_iter().map(|(_, b)| b).collect::<Vec<_>>(),
            )
            .map_err(at(line))?,
        ),
        "vertex" => {
            if !block.body.is_empty() {
                return Err(Error::parse(line, "`vertex` takes no body lines"));
            }
            Object::Vertex(n)
        }
        other => return Err(Error::parse(line, format!("unknown object kind `{other}`"))),
    };
    Ok(obj)
}

/// Parses every object in `text`, in order.
pub fn parse_objects(text: &str) -> Result<Vec<Object>> {
    let mut blocks: Vec<Block> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let first = content.split_whitespace().next().expect("nonempty");
        if first.chars().all(|c| c.is_ascii_digit()) {
            let nums = numbers(line, content)?;
            match blocks.last_mut() {
                Some(b) => b.body.push((line, nums)),
                None => return Err(Error::parse(line, "data before any object header")),
            }
            continue;
        }
        if !KINDS.contains(&first) {
            return Err(Error::parse(line, format!("unknown object kind `{first}`")));
        }
        let rest = numbers(line, &content[first.len()..])?;
        let [arg] = rest.as_slice() else {
            return Err(Error::parse(line, format!("expected `{first} <n>`")));
        };
        blocks.push(Block {
            line,
            kind: first.to_string(),
            arg: *arg,
            body: Vec::new(),
        });
    }
    blocks.into_iter().map(build).collect()
}

/// Parses exactly one object.
pub fn parse_object(text: &str) -> Result<Object> {
    let mut objs = parse_objects(text)?;
    match objs.len() {
        1 => Ok(objs.pop().expect("one object")),
        0 => Err(Error::parse(0, "no object found")),
        k => Err(Error::parse(0, format!("expected one object, found {k}"))),
    }
}

fn join(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Writes the file form; parsing it back gives an equal object.
impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Digraph(d) => {
                writeln!(f, "digraph {}", d.n())?;
                for (u, v) in d.arrows() {
                    writeln!(f, "{u} {v}")?;
                }
            }
            Object::Graph(g) => {
                writeln!(f, "graph {}", g.n())?;
                for (u, v) in g.edges() {
                    writeln!(f, "{u} {v}")?;
                }
            }
            Object::Poset(p) => {
                writeln!(f, "poset {}", p.n())?;
                for (u, v) in p.covers() {
                    writeln!(f, "{u} {v}")?;
                }
            }
            Object::Orientation(o) => {
                writeln!(f, "orientation {}", o.n())?;
                for (u, v) in o.arrows() {
                    writeln!(f, "{u} {v}")?;
                }
            }
            Object::Path { n, vertices } => {
                writeln!(f, "path {n}")?;
                if !vertices.is_empty() {
                    writeln!(f, "{}", join(vertices.iter().copied()))?;
                }
            }
            Object::Cycles(c) => {
                writeln!(f, "cycles {}", c.weight())?;
                for cyc in c.cycles() {
                    writeln!(f, "{}", join(cyc.iter().copied()))?;
                }
            }
            Object::Sequence(s) => {
                writeln!(f, "sequence {}", s.n())?;
                for &b in s.blocks() {
                    writeln!(f, "{}", join(members(b)))?;
                }
            }
            Object::Vertex(v) => writeln!(f, "vertex {v}")?,
        }
        Ok(())
    }
}
