//! Line-based `.bfg` text format.
//!
//! ```text
//! bfg 1
//! # comment
//! vertex v1 0.5 -0.4
//! vertex v2 0.6 -0.5
//! edge v1 v2 0.4 -0.3
//! ```
//!
//! The header is mandatory and must be the first line. All vertex lines come
//! before all edge lines. `#` starts a comment that runs to end of line. The
//! writer is canonical: vertices sorted by id, edges by endpoint pair, and
//! decimals in minimal form, so equal graphs serialize to equal bytes.

use std::fmt::Write as _;

use bfg_core::{Bipolar, BipolarFuzzyGraph, GraphBuilder, VertexId};
use thiserror::Error;

pub const HEADER: &str = "bfg 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: bfg_core::Error,
    },
}

impl FormatError {
    pub fn line(&self) -> usize {
        match self {
            FormatError::Syntax { line, .. } | FormatError::Graph { line, .. } => *line,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Parses raw bytes, rejecting invalid UTF-8 with the offending line number.
pub fn parse_graph_bytes(bytes: &[u8]) -> Result<BipolarFuzzyGraph, FormatError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse_graph(text),
        Err(e) => {
            let line = 1 + bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count();
            Err(syntax(line, "invalid UTF-8"))
        }
    }
}

pub fn parse_graph(text: &str) -> Result<BipolarFuzzyGraph, FormatError> {
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l)).peekable();
    let mut builder = GraphBuilder::new();
    let mut seen_edge = false;

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, l)) if l.ends_with('\r') => return Err(syntax(n, "CR line ending; use LF")),
        Some((n, l)) => {
            return Err(match l.strip_prefix("bfg ") {
                Some(version) => syntax(n, format!("unsupported version {version:?}")),
                None => syntax(n, format!("expected header {HEADER:?}")),
            })
        }
        None => unreachable!("split always yields at least one item"),
    }

    while let Some((n, raw)) = lines.next() {
        if raw.is_empty() && lines.peek().is_none() {
            break; // trailing newline
        }
        if raw.contains('\r') {
            return Err(syntax(n, "CR line ending; use LF"));
        }
        let content = raw.split_once('#').map_or(raw, |(before, _)| before);
        let tokens: Vec<&str> = content.split_ascii_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        let graph_err = |source| FormatError::Graph { line: n, source };
        match keyword {
            "vertex" => {
                let [id, pos, neg] = args else {
                    return Err(syntax(n, "vertex needs: vertex <id> <pos> <neg>"));
                };
                if seen_edge {
                    return Err(syntax(n, "vertex line after an edge line"));
                }
                let id = VertexId::new(*id).map_err(graph_err)?;
                let value = Bipolar::parse(pos, neg).map_err(graph_err)?;
                builder.add_vertex(id, value).map_err(graph_err)?;
            }
            "edge" => {
                let [u, v, pos, neg] = args else {
                    return Err(syntax(n, "edge needs: edge <id> <id> <pos> <neg>"));
                };
                seen_edge = true;
                let u = VertexId::new(*u).map_err(graph_err)?;
                let v = VertexId::new(*v).map_err(graph_err)?;
                let value = Bipolar::parse(pos, neg).map_err(graph_err)?;
                builder.add_edge(u, v, value).map_err(graph_err)?;
            }
            other => return Err(syntax(n, format!("unknown keyword {other:?}"))),
        }
    }
    Ok(builder.build())
}

/// Canonical serialization.
pub fn write_graph(g: &BipolarFuzzyGraph) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for (v, b) in g.vertices() {
        writeln!(out, "vertex {v} {} {}", b.pos(), b.neg()).expect("writing to a String");
    }
    for (k, b) in g.edges() {
        writeln!(out, "edge {} {} {} {}", k.first(), k.second(), b.pos(), b.neg()).expect("writing to a String");
    }
    out
}
