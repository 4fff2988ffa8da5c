//! graph6, JSON edge-list and DOT encodings.
//!
//! graph6 follows McKay's byte format: `N(n)` then the upper triangle of the
//! adjacency matrix in column order, packed six bits per byte plus 63.
//! JSON uses 1-indexed vertex labels: `{"n": 3, "edges": [[1, 2], [2, 3]]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet, MAX_VERTICES};

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b} outside the graph6 range 63..=126")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Parse("unsupported or truncated graph6 size field".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::GraphTooLarge { n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!("graph6 body has {} bytes, expected {expected} for n = {n}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Error::Parse("nonzero graph6 padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeListJson {
    fn from(g: &Graph) -> Self {
        EdgeListJson { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect() }
    }
}

impl TryFrom<&EdgeListJson> for Graph {
    type Error = Error;

    fn try_from(j: &EdgeListJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|&[a, b]| (a, b)).collect();
        Graph::from_labeled_edges(j.n, &edges)
    }
}

pub fn parse_edge_json(text: &str) -> Result<Graph> {
    let j: EdgeListJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::try_from(&j)
}

pub fn write_edge_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeListJson::from(g)).expect("edge list serializes")
}

/// What to emphasize in a DOT drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Highlight {
    Edges(EdgeSet),
    Vertices(VertexSet),
}

/// Undirected DOT with 1-indexed node names.
pub fn write_dot(g: &Graph, highlight: Option<&Highlight>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let marked = matches!(highlight, Some(Highlight::Vertices(s)) if s.contains(v));
        if marked {
            let _ = writeln!(out, "  {} [style=filled, fillcolor=lightblue];", v + 1);
        } else {
            let _ = writeln!(out, "  {};", v + 1);
        }
    }
    for (u, v) in g.edges() {
        let marked = matches!(highlight, Some(Highlight::Edges(e)) if e.contains((u, v)));
        if marked {
            let _ = writeln!(out, "  {} -- {} [color=red, penwidth=2];", u + 1, v + 1);
        } else {
            let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
        }
    }
    out.push_str("}\n");
    out
}
