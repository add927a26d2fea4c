//! Plain-text edge lists.
//!
//! First line `p <n> <m>`, then `m` lines `<u> <v>` with
//! `1 <= u < v <= n`, whitespace-separated. Lines starting with `#` are
//! ignored anywhere in the file. The writer emits edges in lexicographic
//! order with LF line endings, so parse∘write is the identity.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header \"p <n> <m>\"")]
    BadHeader { line: usize },
    #[error("line {line}: malformed edge line {text:?}")]
    BadEdgeLine { line: usize, text: String },
    #[error("line {line}: self-loop {v} {v}")]
    SelfLoop { line: usize, v: Vertex },
    #[error("line {line}: endpoints must satisfy u < v")]
    NotIncreasing { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: u32 },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: more than the declared {m} edges")]
    TooManyEdges { line: usize, m: usize },
    #[error("expected {m} edges, found {found}")]
    MissingEdges { m: usize, found: usize },
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(u32, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let mut it = trimmed.split_whitespace();
                let ok = it.next() == Some("p");
                let n = it.next().and_then(|t| t.parse::<u32>().ok());
                let m = it.next().and_then(|t| t.parse::<usize>().ok());
                match (ok, n, m, it.next()) {
                    (true, Some(n), Some(m), None) => header = Some((n, m)),
                    _ => return Err(ParseError::BadHeader { line }),
                }
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(ParseError::TooManyEdges { line, m });
                }
                let mut it = trimmed.split_whitespace();
                let u = it.next().and_then(|t| t.parse::<u64>().ok());
                let v = it.next().and_then(|t| t.parse::<u64>().ok());
                let (u, v) = match (u, v, it.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => {
                        return Err(ParseError::BadEdgeLine { line, text: trimmed.to_string() })
                    }
                };
                for x in [u, v] {
                    if x < 1 || x > n as u64 {
                        return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
                    }
                }
                let (u, v) = (u as Vertex, v as Vertex);
                if u == v {
                    return Err(ParseError::SelfLoop { line, v: u });
                }
                if u > v {
                    return Err(ParseError::NotIncreasing { line });
                }
                if !seen.insert((u, v)) {
                    return Err(ParseError::DuplicateEdge { line, u, v });
                }
                edges.push((u, v));
            }
        }
    }

    let (n, m) = header.ok_or(ParseError::BadHeader { line: text.lines().count() + 1 })?;
    if edges.len() != m {
        return Err(ParseError::MissingEdges { m, found: edges.len() });
    }
    Ok(Graph::new(n, edges).expect("validated while parsing"))
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
