//! MHG v1, a line-oriented text format for mixed hypergraphs.
//!
//! ```text
//! MHG 1
//! V 3
//! L 0 (1,1)
//! L 1 (2,2)
//! L 2 (3,2)
//! D 0 1
//! D 0 2
//! ```
//!
//! `#` starts a comment. Label lines are optional but all-or-nothing. The
//! writer emits indices ascending within a line, edge lines sorted within
//! their kind and C lines before D lines; the parser accepts any order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use mhg_core::{EdgeKind, MixedHypergraph, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `MHG 1`")]
    BadHeader,
    #[error("expected vertex count `V <count>`")]
    BadVertexCount,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("unknown record `{0}`")]
    UnknownRecord(String),
    #[error("vertex index {index} out of range for {count} vertices")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("vertex {0} repeated within one edge")]
    RepeatedIndex(usize),
    #[error("edge needs at least two vertices")]
    EdgeTooSmall,
    #[error("duplicate edge")]
    DuplicateEdge,
    #[error("malformed label `{0}`")]
    BadLabel(String),
    #[error("vertex {0} labelled twice")]
    DuplicateLabel(usize),
    #[error("labels must cover every vertex with one common dimension")]
    IncompleteLabels,
    #[error("unexpected end of input")]
    Truncated,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn write_mhg(h: &MixedHypergraph) -> String {
    let mut out = String::new();
    out.push_str("MHG 1\n");
    let _ = writeln!(out, "V {}", h.order());
    if let Some(labels) = h.labels() {
        for (i, v) in labels.iter().enumerate() {
            let _ = writeln!(out, "L {i} {v}");
        }
    }
    for (tag, kind) in [("C", EdgeKind::C), ("D", EdgeKind::D)] {
        for e in h.edges(kind) {
            out.push_str(tag);
            for i in e.indices() {
                let _ = write!(out, " {i}");
            }
            out.push('\n');
        }
    }
    out
}

fn parse_usize(line: usize, token: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| err(line, ParseErrorKind::BadInteger(token.to_string())))
}

fn parse_label(line: usize, text: &str) -> Result<Vertex, ParseError> {
    let bad = || err(line, ParseErrorKind::BadLabel(text.to_string()));
    let inner = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
    let coords = inner
        .split(',')
        .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Vertex(coords))
}

pub fn parse_mhg(text: &str) -> Result<MixedHypergraph, ParseError> {
    let mut records = text.lines().enumerate().filter_map(|(n, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((n + 1, body))
    });

    let (line, header) = records.next().ok_or(err(1, ParseErrorKind::Truncated))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["MHG", "1"] {
        return Err(err(line, ParseErrorKind::BadHeader));
    }
    let (line, count_rec) = records.next().ok_or(err(line + 1, ParseErrorKind::Truncated))?;
    let count = match count_rec.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["V", n] => parse_usize(line, n)?,
        _ => return Err(err(line, ParseErrorKind::BadVertexCount)),
    };

    let mut h = MixedHypergraph::empty(count);
    let mut labels: Vec<Option<Vertex>> = vec![None; count];
    let mut last_line = line;
    for (line, body) in records {
        last_line = line;
        let mut tokens = body.split_whitespace();
        let tag = tokens.next().expect("non-empty record");
        match tag {
            "L" => {
                let index = parse_usize(line, tokens.next().ok_or(err(line, ParseErrorKind::Truncated))?)?;
                if index >= count {
                    return Err(err(line, ParseErrorKind::IndexOutOfRange { index, count }));
                }
                let rest: String = tokens.collect();
                let vertex = parse_label(line, &rest)?;
                if labels[index].replace(vertex).is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateLabel(index)));
                }
            }
            "C" | "D" => {
                let kind = if tag == "C" { EdgeKind::C } else { EdgeKind::D };
                let mut seen = BTreeSet::new();
                for t in tokens {
                    let index = parse_usize(line, t)?;
                    if index >= count {
                        return Err(err(line, ParseErrorKind::IndexOutOfRange { index, count }));
                    }
                    if !seen.insert(index) {
                        return Err(err(line, ParseErrorKind::RepeatedIndex(index)));
                    }
                }
                if seen.len() < 2 {
                    return Err(err(line, ParseErrorKind::EdgeTooSmall));
                }
                let added = h.add_edge(kind, seen).expect("indices validated above");
                if !added {
                    return Err(err(line, ParseErrorKind::DuplicateEdge));
                }
            }
            other => return Err(err(line, ParseErrorKind::UnknownRecord(other.to_string()))),
        }
    }

    if labels.iter().any(Option::is_some) {
        let labels: Option<Vec<Vertex>> = labels.into_iter().collect();
        let labels = labels.ok_or(err(last_line, ParseErrorKind::IncompleteLabels))?;
        h.set_labels(Some(labels)).map_err(|_| err(last_line, ParseErrorKind::IncompleteLabels))?;
    }
    Ok(h)
}
