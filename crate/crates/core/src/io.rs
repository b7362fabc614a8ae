//! Line-oriented text formats.
//!
//! Graphs:
//!
//! ```text
//! c optional comments
//! p tia <n> <m>
//! e <u> <v>          (m lines, 1-based)
//! ```
//!
//! Decompositions:
//!
//! ```text
//! s tia <t> <k_reported> <n>
//! b <node> <v...>    (t lines, 1-based nodes and vertices)
//! <i> <j>            (t - 1 tree edges)
//! ```
//!
//! Weights: one `<vertex> <weight>` pair per line, 1-based, unlisted
//! vertices weigh 1.
//!
//! Writers emit the canonical form: no comments, edges as `u < v` in
//! lexicographic order, bag members ascending.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};
use crate::td::TreeDecomposition;
use crate::vertex_set::VertexSet;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

fn number<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a number, found `{tok}`")))
}

/// A 1-based id in `1..=n`, returned 0-based.
fn id(line: usize, tok: &str, n: usize, what: &str) -> Result<usize> {
    let x: usize = number(line, tok)?;
    if x == 0 || x > n {
        return Err(parse_err(line, format!("{what} {x} outside 1..={n}")));
    }
    Ok(x - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(0, "missing `p tia` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "tia" {
        return Err(parse_err(hl, "expected `p tia <n> <m>`"));
    }
    let n: usize = number(hl, header[2])?;
    let m: usize = number(hl, header[3])?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut b = GraphBuilder::new(n);
    let mut seen = 0;
    for (ln, toks) in lines {
        if toks[0] != "e" || toks.len() != 3 {
            return Err(parse_err(ln, "expected `e <u> <v>`"));
        }
        let u = id(ln, toks[1], n, "vertex")?;
        let v = id(ln, toks[2], n, "vertex")?;
        if u == v {
            return Err(parse_err(ln, format!("self-loop at vertex {}", u + 1)));
        }
        if b.has_edge(u, v) {
            return Err(parse_err(ln, format!("duplicate edge {} {}", u + 1, v + 1)));
        }
        b.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {seen}")));
    }
    Ok(b.build())
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p tia {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// A decomposition file: the tree and the independence number it claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionFile {
    pub td: TreeDecomposition,
    pub k_reported: usize,
}

/// Parses a decomposition file. Syntax errors are [`Error::Parse`]; a bag or
/// edge list that does not describe a tree is [`Error::MalformedTree`].
pub fn parse_decomposition(text: &str) -> Result<DecompositionFile> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(0, "missing `s tia` header"))?;
    if header.len() != 5 || header[0] != "s" || header[1] != "tia" {
        return Err(parse_err(hl, "expected `s tia <t> <k> <n>`"));
    }
    let t: usize = number(hl, header[2])?;
    let k_reported: usize = number(hl, header[3])?;
    let n: usize = number(hl, header[4])?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    if t == 0 {
        return Err(Error::MalformedTree("no nodes".into()));
    }
    let mut bags: Vec<Option<VertexSet>> = vec![None; t];
    let mut edges = Vec::new();
    for (ln, toks) in lines {
        if toks[0] == "b" {
            if toks.len() < 2 {
                return Err(parse_err(ln, "expected `b <node> <v...>`"));
            }
            let node = id(ln, toks[1], t, "node")?;
            if bags[node].is_some() {
                return Err(Error::MalformedTree(format!("bag {} given twice", node + 1)));
            }
            let mut bag = VertexSet::empty(n);
            for tok in &toks[2..] {
                let v = id(ln, tok, n, "vertex")?;
                if !bag.insert(v) {
                    return Err(parse_err(ln, format!("vertex {} repeated in bag", v + 1)));
                }
            }
            bags[node] = Some(bag);
        } else {
            if toks.len() != 2 {
                return Err(parse_err(ln, "expected `<i> <j>`"));
            }
            edges.push((id(ln, toks[0], t, "node")?, id(ln, toks[1], t, "node")?));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::MalformedTree(format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let td = TreeDecomposition::new(n, bags, edges, None)?;
    Ok(DecompositionFile { td, k_reported })
}

pub fn write_decomposition(td: &TreeDecomposition, k_reported: usize) -> String {
    let mut out = format!("s tia {} {} {}\n", td.num_nodes(), k_reported, td.universe());
    for (i, bag) in td.bags().iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    let mut edges: Vec<(usize, usize)> = td.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    for (a, b) in edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

pub fn canonicalize_graph(text: &str) -> Result<String> {
    parse_graph(text).map(|g| write_graph(&g))
}

pub fn canonicalize_decomposition(text: &str) -> Result<String> {
    parse_decomposition(text).map(|f| write_decomposition(&f.td, f.k_reported))
}

/// Per-vertex weights for a graph on `n` vertices.
pub fn parse_weights(text: &str, n: usize) -> Result<Vec<i64>> {
    let mut w = vec![1i64; n];
    let mut given = vec![false; n];
    for (ln, toks) in content_lines(text) {
        if toks.len() != 2 {
            return Err(parse_err(ln, "expected `<vertex> <weight>`"));
        }
        let v = id(ln, toks[0], n, "vertex")?;
        if std::mem::replace(&mut given[v], true) {
            return Err(parse_err(ln, format!("weight for vertex {} given twice", v + 1)));
        }
        w[v] = number(ln, toks[1])?;
    }
    Ok(w)
}
