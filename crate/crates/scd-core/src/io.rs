//! Text formats: `.scd` digraphs and patterns, decompositions, orderings.

use crate::decomposition::PathDecomposition;
use crate::digraph::SemiCompleteDigraph;
use crate::error::{CoreError, Result};
use crate::ordering::VertexOrdering;
use crate::pattern::Pattern;

fn parse_err(line: usize, msg: impl Into<String>) -> CoreError {
    CoreError::Parse { line, msg: msg.into() }
}

/// Returns (n, matrix, first line number of the matrix) after an optional header.
fn parse_matrix(text: &str, skip: usize) -> Result<(usize, Vec<Vec<bool>>)> {
    let mut lines = text.lines().enumerate().skip(skip);
    let (ln, first) = lines.next().ok_or_else(|| parse_err(skip + 1, "missing vertex count"))?;
    let n: usize =
        first.trim().parse().map_err(|_| parse_err(ln + 1, format!("bad vertex count `{}`", first.trim())))?;
    let mut matrix = Vec::with_capacity(n);
    for (ln, line) in lines.by_ref().take(n) {
        let row = line.trim();
        if row.chars().count() != n {
            return Err(CoreError::ShapeError { expected: n, row: matrix.len(), found: row.chars().count() });
        }
        let bits = row
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(parse_err(ln + 1, format!("unexpected character `{other}`"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        matrix.push(bits);
    }
    if matrix.len() != n {
        return Err(CoreError::ShapeError { expected: n, row: matrix.len(), found: 0 });
    }
    if let Some((ln, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(parse_err(ln + 1, format!("trailing content `{}`", extra.trim())));
    }
    Ok((n, matrix))
}

pub fn parse_digraph(text: &str) -> Result<SemiCompleteDigraph> {
    let (n, m) = parse_matrix(text, 0)?;
    SemiCompleteDigraph::build(n, &m)
}

pub fn format_digraph(t: &SemiCompleteDigraph) -> String {
    let mut s = format!("{}\n", t.n());
    for u in 0..t.n() {
        s.extend((0..t.n()).map(|v| if t.arc(u, v) { '1' } else { '0' }));
        s.push('\n');
    }
    s
}

/// Pattern files carry a `PATTERN` line before the matrix and skip the semi-completeness check.
pub fn parse_pattern(text: &str) -> Result<Pattern> {
    let header = text.lines().next().unwrap_or("").trim();
    if header != "PATTERN" {
        return Err(parse_err(1, "expected `PATTERN` header"));
    }
    let (n, m) = parse_matrix(text, 1)?;
    let mut arcs = Vec::new();
    for (u, row) in m.iter().enumerate() {
        for (v, &b) in row.iter().enumerate() {
            if b {
                arcs.push((u, v));
            }
        }
    }
    Pattern::new(n, arcs)
}

pub fn format_pattern(h: &Pattern) -> String {
    let n = h.vertex_count();
    let mut m = vec![vec!['0'; n]; n];
    for &(u, v) in h.arcs() {
        m[u][v] = '1';
    }
    let mut s = format!("PATTERN\n{n}\n");
    for row in m {
        s.extend(row);
        s.push('\n');
    }
    s
}

fn parse_indices(line: &str, ln: usize) -> Result<Vec<usize>> {
    line.split_whitespace().map(|tok| tok.parse().map_err(|_| parse_err(ln, format!("bad index `{tok}`")))).collect()
}

pub fn parse_decomposition(text: &str) -> Result<PathDecomposition> {
    let mut lines = text.lines();
    let first = lines.next().ok_or_else(|| parse_err(1, "missing bag count"))?;
    let r: usize = first.trim().parse().map_err(|_| parse_err(1, format!("bad bag count `{}`", first.trim())))?;
    let mut bags = Vec::with_capacity(r);
    for i in 0..r {
        let line = lines.next().unwrap_or("");
        bags.push(parse_indices(line, i + 2)?);
    }
    Ok(PathDecomposition::new(bags))
}

pub fn format_decomposition(w: &PathDecomposition) -> String {
    let mut s = format!("{}\n", w.bags.len());
    for bag in &w.bags {
        let items: Vec<String> = bag.iter().map(usize::to_string).collect();
        s.push_str(&items.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_ordering(n: usize, text: &str) -> Result<VertexOrdering> {
    let line = text.lines().next().unwrap_or("");
    VertexOrdering::new(n, parse_indices(line, 1)?)
}

pub fn format_ordering(pi: &VertexOrdering) -> String {
    let items: Vec<String> = pi.as_slice().iter().map(usize::to_string).collect();
    format!("{}\n", items.join(" "))
}
