//! Text formats.
//!
//! * edge list: a header line `n m`, then `m` lines `u v` with 0-based
//!   indices. Blank lines are ignored when parsing. Writing emits edges
//!   with `u < v` in sorted order, lines joined by `\n` with no trailing
//!   newline.
//! * graph6: the standard short form, so at most 62 vertices.
//! * dot: write-only, node labels carry the vertex label text.

use std::fmt::Write as _;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edge_list" | "edgelist" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            "dot" => Ok(Format::Dot),
            other => Err(Error::InvalidParameter(format!("unknown format `{other}`"))),
        }
    }
}

const GRAPH6_MAX: usize = 62;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
        Format::Dot => Err(Error::InvalidParameter(
            "dot is an export-only format".into(),
        )),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::EdgeList => Ok(write_edge_list(g)),
        Format::Graph6 => write_graph6(g),
        Format::Dot => Ok(write_dot(g)),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let n = parse_usize(toks[0], hline, "vertex count")?;
    let m = parse_usize(toks[1], hline, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(lineno, "edge line must be `u v`"));
        }
        let u = parse_usize(toks[0], lineno, "vertex index")?;
        let v = parse_usize(toks[1], lineno, "vertex index")?;
        if u >= n || v >= n {
            return Err(parse_err(
                lineno,
                format!("vertex index out of range for n = {n}"),
            ));
        }
        if u == v {
            return Err(parse_err(lineno, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(lineno, format!("duplicate edge {u} {v}")));
        }
        if edges.len() == m {
            return Err(parse_err(lineno, format!("more than {m} edges")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        write!(out, "\n{u} {v}").unwrap();
    }
    out
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(parse_err(1, "empty graph6 string"));
    };
    if !(63..=126).contains(&first) {
        return Err(parse_err(1, "invalid graph6 character"));
    }
    if first == 126 {
        return Err(parse_err(1, "graph6 long form (n > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != pairs.div_ceil(6) {
        return Err(parse_err(
            1,
            format!(
                "graph6 body has {} bytes, expected {} for n = {n}",
                body.len(),
                pairs.div_ceil(6)
            ),
        ));
    }
    let mut bits = Vec::with_capacity(body.len() * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(parse_err(1, "invalid graph6 character"));
        }
        let val = b - 63;
        for shift in (0..6).rev() {
            bits.push(val >> shift & 1 == 1);
        }
    }
    if bits[pairs..].iter().any(|&b| b) {
        return Err(parse_err(1, "nonzero graph6 padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX {
        return Err(Error::Graph6Size(n));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let name = g.name(v).replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  {v} [label=\"{name}\"];").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push('}');
    out.push('\n');
    out
}
