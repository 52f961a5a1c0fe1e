//! Text formats for hypergraphs and cut partitions.
//!
//! Hypergraph files: `#` comment lines, one `h <vertex_count>` header, then
//! one `e <v> <v> ...` line per edge with 0-based vertex ids. The edge order
//! in the file defines the edge ids everywhere else. Cut files: one
//! `c <edgeId> <edgeId> ...` line per cut, referring to the edge order of
//! the paired hypergraph file. Both are UTF-8 with space-separated fields.

use std::fmt;

use hypercut::cut::CutPartition;
use hypercut::hypergraph::BuildError;
use hypercut::{EdgeId, Hypergraph};

/// A parse failure, pointing at the offending line (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Non-fatal findings surfaced while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Drop edges that reduce to a single vertex instead of rejecting them.
    pub allow_singleton_edges: bool,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Parses a hypergraph document.
pub fn parse_hypergraph(
    text: &str,
    options: ParseOptions,
) -> Result<(Hypergraph, Vec<ParseWarning>), ParseError> {
    let mut vertex_count: Option<usize> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("h") => {
                if vertex_count.is_some() {
                    return Err(err(line_no, "duplicate 'h' header"));
                }
                let n = fields
                    .next()
                    .ok_or_else(|| err(line_no, "'h' header needs a vertex count"))?;
                if fields.next().is_some() {
                    return Err(err(line_no, "'h' header takes exactly one field"));
                }
                let n: usize = n
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid vertex count {n:?}")))?;
                vertex_count = Some(n);
            }
            Some("e") => {
                if vertex_count.is_none() {
                    return Err(err(line_no, "edge line before the 'h' header"));
                }
                let mut vertices = Vec::new();
                for field in fields {
                    let v: usize = field
                        .parse()
                        .map_err(|_| err(line_no, format!("invalid vertex id {field:?}")))?;
                    vertices.push(v);
                }
                let mut unique = vertices.clone();
                unique.sort_unstable();
                unique.dedup();
                if unique.len() < vertices.len() {
                    warnings.push(ParseWarning {
                        line: line_no,
                        message: "repeated vertices inside one edge; deduplicated".into(),
                    });
                }
                if unique.len() == 1 && options.allow_singleton_edges {
                    warnings.push(ParseWarning {
                        line: line_no,
                        message: "dropping singleton edge".into(),
                    });
                    continue;
                }
                edges.push(vertices);
                edge_lines.push(line_no);
            }
            Some(tag) => {
                return Err(err(line_no, format!("unknown line tag {tag:?}")));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let vertex_count =
        vertex_count.ok_or_else(|| err(1, "missing 'h <vertex_count>' header"))?;
    let hypergraph = Hypergraph::new(vertex_count, edges).map_err(|e| {
        let line_of = |edge: EdgeId| edge_lines.get(edge.0).copied().unwrap_or(1);
        match &e {
            BuildError::EmptyEdge(edge)
            | BuildError::EdgeTooSmall { edge, .. }
            | BuildError::OutOfRangeVertex { edge, .. } => err(line_of(*edge), e.to_string()),
            BuildError::DuplicateEdge { second, .. } => err(line_of(*second), e.to_string()),
        }
    })?;
    Ok((hypergraph, warnings))
}

/// Writes a hypergraph document; `parse_hypergraph` of the result rebuilds
/// the same value.
pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("h {}\n", h.vertex_count());
    for (_, edge) in h.edges() {
        out.push('e');
        for v in edge {
            out.push(' ');
            out.push_str(&v.0.to_string());
        }
        out.push('\n');
    }
    out
}

/// Parses a cut-partition document against a known edge count.
pub fn parse_cuts(text: &str, edge_count: usize) -> Result<CutPartition, ParseError> {
    let mut cuts: Vec<Vec<EdgeId>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("c") => {
                let mut cut = Vec::new();
                for field in fields {
                    let e: usize = field
                        .parse()
                        .map_err(|_| err(line_no, format!("invalid edge id {field:?}")))?;
                    if e >= edge_count {
                        return Err(err(
                            line_no,
                            format!("edge id {e} out of range (edge count is {edge_count})"),
                        ));
                    }
                    cut.push(EdgeId(e));
                }
                if cut.is_empty() {
                    return Err(err(line_no, "empty cut line"));
                }
                cuts.push(cut);
            }
            Some(tag) => return Err(err(line_no, format!("unknown line tag {tag:?}"))),
            None => unreachable!("blank lines are skipped"),
        }
    }
    Ok(CutPartition::new(cuts))
}

pub fn write_cuts(partition: &CutPartition) -> String {
    let mut out = String::new();
    for cut in &partition.cuts {
        out.push('c');
        for e in cut {
            out.push(' ');
            out.push_str(&e.0.to_string());
        }
        out.push('\n');
    }
    out
}
