//! Text formats.
//!
//! Edge list: first line `n m`, then `m` lines `u v`.
//! Triangulation: first line `n`, then `n - 3` lines `i j`, one per diagonal.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separators::MaximalOuterplanarGraph;

/// A parsed input file of either format.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphFile {
    EdgeList(Graph),
    Triangulation(MaximalOuterplanarGraph),
}

impl GraphFile {
    pub fn graph(&self) -> Graph {
        match self {
            GraphFile::EdgeList(g) => g.clone(),
            GraphFile::Triangulation(p) => p.to_graph(),
        }
    }
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn numbers(line_no: usize, line: &str, expected: usize) -> Result<Vec<usize>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != expected {
        return Err(parse_error(
            line_no,
            format!("expected {expected} field(s), found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_error(line_no, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

fn pairs<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    count: usize,
    last_line: usize,
) -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_error(last_line + 1, format!("expected {count} pairs, found {i}")))?;
        let nums = numbers(line_no, line, 2)?;
        out.push((line_no, nums[0], nums[1]));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_error(line_no, "unexpected trailing content"));
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| parse_error(1, "empty input"))?;
    let head = numbers(header_no, header, 2)?;
    let (n, m) = (head[0], head[1]);
    let raw = pairs(&mut lines, m, text.lines().count())?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, u, v) in raw {
        if u >= n || v >= n {
            return Err(parse_error(line_no, format!("vertex out of range 0..{n} in ({u}, {v})")));
        }
        if u == v {
            return Err(parse_error(line_no, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes the edge list with edges sorted, `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_triangulation(text: &str) -> Result<MaximalOuterplanarGraph> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| parse_error(1, "empty input"))?;
    let n = numbers(header_no, header, 1)?[0];
    if n < 3 {
        return Err(parse_error(header_no, format!("polygon needs at least 3 vertices, got {n}")));
    }
    let raw = pairs(&mut lines, n - 3, text.lines().count())?;
    let diagonals: Vec<_> = raw.iter().map(|&(_, i, j)| (i, j)).collect();
    MaximalOuterplanarGraph::new(n, &diagonals)
}

pub fn write_triangulation(p: &MaximalOuterplanarGraph) -> String {
    let mut out = format!("{}\n", p.vertex_count());
    for (i, j) in p.diagonals() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

/// Chooses the format from the header: two numbers for an edge list, one for
/// a triangulation.
pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    let header_fields = content_lines(text)
        .next()
        .map(|(_, l)| l.split_whitespace().count())
        .unwrap_or(0);
    match header_fields {
        1 => parse_triangulation(text).map(GraphFile::Triangulation),
        _ => parse_edge_list(text).map(GraphFile::EdgeList),
    }
}
