//! Plain-text instance format: `c` comments, one `p pitvd <n> <m> <k>` header, then
//! `m` records `e <u> <v> <mult>` with 1-indexed labels.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{MultiGraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing `p pitvd` header")]
    MissingHeader,
    #[error("header announces {expected} edge records, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

fn err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Line { line, msg: msg.into() }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, FormatError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("bad {what} `{tok}`")))
}

/// Parses an instance; repeated edge records add up. Label `i` becomes `VertexId(i - 1)`.
pub fn parse(text: &str) -> Result<(MultiGraph, usize), FormatError> {
    let mut header: Option<(MultiGraph, usize, usize)> = None;
    let mut found = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(err(line, "second header"));
                }
                if toks.next() != Some("pitvd") {
                    return Err(err(line, "expected `p pitvd <n> <m> <k>`"));
                }
                let n: usize = field(toks.next(), line, "vertex count")?;
                let m: usize = field(toks.next(), line, "edge count")?;
                let k: usize = field(toks.next(), line, "budget")?;
                header = Some((MultiGraph::with_vertices(n), m, k));
            }
            Some("e") => {
                let (g, _, _) = header.as_mut().ok_or_else(|| err(line, "edge before header"))?;
                let u: u32 = field(toks.next(), line, "endpoint")?;
                let v: u32 = field(toks.next(), line, "endpoint")?;
                let mult: u32 = field(toks.next(), line, "multiplicity")?;
                let n = g.vertex_count() as u32;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(line, format!("label out of range 1..={n}")));
                }
                if u == v {
                    return Err(err(line, "self-loop"));
                }
                if mult == 0 {
                    return Err(err(line, "multiplicity must be positive"));
                }
                g.add_edge(VertexId(u - 1), VertexId(v - 1), mult).map_err(|e| err(line, e.to_string()))?;
                found += 1;
            }
            Some(other) => return Err(err(line, format!("unknown record `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(err(line, "trailing tokens"));
        }
    }
    let (g, expected, k) = header.ok_or(FormatError::MissingHeader)?;
    if expected != found {
        return Err(FormatError::EdgeCount { expected, found });
    }
    Ok((g, k))
}

/// Writes `(g, k)` with vertices relabelled `1..=n` in increasing id order.
pub fn serialize(g: &MultiGraph, k: usize) -> String {
    let label: std::collections::BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i + 1)).collect();
    let mut out = String::new();
    writeln!(out, "p pitvd {} {} {}", g.vertex_count(), g.edge_count(), k).unwrap();
    for (u, v, m) in g.edges() {
        writeln!(out, "e {} {} {}", label[&u], label[&v], m).unwrap();
    }
    out
}

/// Canonical negative instance: a double edge with budget 0.
pub fn serialize_decided_no() -> String {
    "c decided-no\np pitvd 2 1 0\ne 1 2 2\n".to_string()
}
