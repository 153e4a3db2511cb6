//! Plain-text graph files.
//!
//! ```text
//! c family f0 i1=11 i2=- i3=-
//! p 6 9
//! e 0 1
//! c label 0 a1
//! ```
//!
//! `p n m` gives the vertex and edge counts and must precede the edges; `e u
//! v` lines list the edges with 0-based ids. Lines starting with `c` are
//! comments; `c label v text` attaches a label and `c family ...` records the
//! generator call. Blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    /// Text after `c family`, if present.
    pub family: Option<String>,
}

/// Serializes `g`: family comment, header, sorted edges, then labels.
pub fn write_graph(g: &Graph, family: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(f) = family {
        writeln!(out, "c family {f}").unwrap();
    }
    let edges = g.edges();
    writeln!(out, "p {} {}", g.n(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "e {u} {v}").unwrap();
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            writeln!(out, "c label {v} {l}").unwrap();
        }
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} {tok:?} is not a non-negative integer")))
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, usize, Label)> = Vec::new();
    let mut family = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => match toks.next() {
                Some("label") => {
                    let v = number(toks.next(), line, "vertex")?;
                    let text = toks.next().ok_or_else(|| parse_err(line, "missing label text"))?;
                    if toks.next().is_some() {
                        return Err(parse_err(line, "label text must be one token"));
                    }
                    let l = text.parse::<Label>().map_err(|m| parse_err(line, m))?;
                    labels.push((line, v, l));
                }
                Some("family") => {
                    family = Some(toks.collect::<Vec<_>>().join(" "));
                }
                _ => {}
            },
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate p line"));
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after p n m"));
                }
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line, "edge before p line"));
                };
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after e u v"));
                }
                if u >= n || v >= n {
                    return Err(parse_err(line, format!("endpoint out of range 0..{n}")));
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop on {u}")));
                }
                edges.push((u, v));
            }
            other => return Err(parse_err(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing p line"))?;
    let graph = Graph::from_edges(n, edges).map_err(|e| parse_err(0, e.to_string()))?;
    if graph.edge_count() != m {
        return Err(parse_err(
            0,
            format!("header announces {m} edges, found {} distinct", graph.edge_count()),
        ));
    }
    let graph = if labels.is_empty() {
        graph
    } else {
        let mut slots: Vec<Option<Label>> = vec![None; n];
        for (line, v, l) in labels {
            if v >= n {
                return Err(parse_err(line, format!("label for vertex {v} out of range")));
            }
            if slots[v].replace(l).is_some() {
                return Err(parse_err(line, format!("vertex {v} labelled twice")));
            }
        }
        if let Some(v) = slots.iter().position(Option::is_none) {
            return Err(parse_err(0, format!("vertex {v} has no label while others do")));
        }
        graph.with_labels(slots.into_iter().map(Option::unwrap).collect())
    };
    Ok(GraphFile { graph, family })
}
