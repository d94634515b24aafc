//! Text encodings: a plain edge list and McKay's graph6.
//!
//! Edge list:
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        (m lines, 0-based)
//! ```
//!
//! Output always lists edges with `u < v` in lexicographic order.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Graph6,
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "graph6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format '{other}'")),
        }
    }
}

/// Edge list when the first non-comment, non-blank line starts with a digit;
/// graph6 otherwise. graph6 size bytes are never ASCII digits.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first.and_then(|l| l.chars().next()) {
        Some(c) if c.is_ascii_digit() => GraphFormat::EdgeList,
        _ => GraphFormat::Graph6,
    }
}

pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph, ParseError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Graph6 => {
            let mut s = write_graph6(g);
            s.push('\n');
            s
        }
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_usize(tok: &str, line: usize, column: usize) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| {
        ParseError::new(
            line,
            column,
            format!("expected a non-negative integer, found '{tok}'"),
        )
    })
}

/// Splits a line into tokens paired with their 1-based column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        if raw.trim_start().starts_with('#') || raw.trim().is_empty() {
            continue;
        }
        let toks = tokens(raw);
        if toks.len() != 2 {
            let col = toks.get(2).map_or(1, |t| t.0);
            return Err(ParseError::new(
                line_no,
                col,
                format!("expected two integers, found {} tokens", toks.len()),
            ));
        }
        let a = parse_usize(toks[0].1, line_no, toks[0].0)?;
        let b = parse_usize(toks[1].1, line_no, toks[1].0)?;
        match header {
            None => {
                if a == 0 || a > MAX_VERTICES {
                    return Err(ParseError::new(
                        line_no,
                        toks[0].0,
                        format!("vertex count {a} outside 1..={MAX_VERTICES}"),
                    ));
                }
                header = Some((a, b));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(ParseError::new(
                        line_no,
                        1,
                        format!("more than the declared {m} edges"),
                    ));
                }
                for (col, x) in [(toks[0].0, a), (toks[1].0, b)] {
                    if x >= n {
                        return Err(ParseError::new(
                            line_no,
                            col,
                            format!("vertex {x} out of range for n = {n}"),
                        ));
                    }
                }
                edges.push((line_no, a, b));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(ParseError::new(last_line.max(1), 1, "missing 'n m' header"));
    };
    if edges.len() != m {
        return Err(ParseError::new(
            last_line.max(1),
            1,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    let mut g = Graph::empty(n).map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    for (line_no, u, v) in edges {
        g = add_edge(&g, u, v).map_err(|e| ParseError::new(line_no, 1, e.to_string()))?;
    }
    Ok(g)
}

fn add_edge(g: &Graph, u: usize, v: usize) -> Result<Graph, GraphError> {
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    if g.has_edge(u, v) {
        return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
    }
    let mut adj = g.adjacency().to_vec();
    adj[u] |= 1 << v;
    adj[v] |= 1 << u;
    Graph::from_adjacency(adj)
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// graph6 encoding without header or trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let (line_no, line) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| ParseError::new(1, 1, "empty graph6 input"))?;
    if let Some((extra, _)) = text
        .lines()
        .enumerate()
        .skip(line_no)
        .find(|(_, l)| !l.trim().is_empty())
    {
        return Err(ParseError::new(
            extra + 1,
            1,
            "expected a single graph6 line",
        ));
    }
    let offset = if line.starts_with(GRAPH6_HEADER) {
        GRAPH6_HEADER.len()
    } else {
        0
    };
    let bytes = &line.as_bytes()[offset..];
    let err = |pos: usize, msg: &str| ParseError::new(line_no, offset + pos + 1, msg);
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the graph6 range 63..=126"));
        }
    }
    let (n, body_start) = match bytes {
        [] => return Err(err(0, "missing size byte")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(2, "truncated 8-byte size field"));
            }
            (
                rest[..6]
                    .iter()
                    .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize),
                8,
            )
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(1, "truncated 4-byte size field"));
            }
            (
                rest[..3]
                    .iter()
                    .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize),
                4,
            )
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(err(
            0,
            &format!("vertex count {n} outside 1..={MAX_VERTICES}"),
        ));
    }
    let body = &bytes[body_start..];
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            body_start + body.len().min(expected),
            &format!(
                "expected {expected} adjacency bytes for n = {n}, found {}",
                body.len()
            ),
        ));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(body_start + expected - 1, "nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj).map_err(|e| err(0, &e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn known_graph6_strings() {
        // Reference encodings, cross-checked with networkx.
        assert_eq!(write_graph6(&complete(1).unwrap()), "@");
        assert_eq!(write_graph6(&complete(2).unwrap()), "A_");
        assert_eq!(write_graph6(&complete(4).unwrap()), "C~");
        assert_eq!(write_graph6(&cycle(5).unwrap()), "Dhc");
        assert_eq!(write_graph6(&Graph::empty(5).unwrap()), "D??");
    }

    #[test]
    fn graph6_long_size_field() {
        let g = path(64).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@?hC"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g63 = cycle(63).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn graph6_header_and_errors() {
        assert_eq!(parse_graph6(">>graph6<<Dhc\n").unwrap(), cycle(5).unwrap());
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("?").is_err()); // n = 0
        let e = parse_graph6("Dh").unwrap_err();
        assert!(e.message.contains("expected 2 adjacency bytes"));
        // padding bits for n = 5: 10 bits, 2 padding bits in the second byte
        let e = parse_graph6("Dhd").unwrap_err();
        assert_eq!(e.message, "nonzero padding bits");
        assert_eq!(e.column, 3);
        let e = parse_graph6("D h").unwrap_err();
        assert_eq!(e.column, 2);
        assert!(parse_graph6("Dhc\nDhc\n").is_err());
    }

    #[test]
    fn edge_list_round_trip_and_normalization() {
        let text = "# triangle plus pendant\n4 4\n1 0\n2 1\n0 2\n\n3 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(write_edge_list(&g), "4 4\n0 1\n0 2\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_position() {
        let e = parse_edge_list("3 1\n0 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(e.message.contains("declared 2 edges"));
        let e = parse_edge_list("3 1\n0 5\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_edge_list("3 1\n1 1\n").unwrap_err();
        assert!(e.message.contains("self-loop"));
        let e = parse_edge_list("0 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        assert!(parse_edge_list("# nothing\n").is_err());
        let e = parse_edge_list("2 1\n0 1 7\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
    }

    #[test]
    fn detection() {
        assert_eq!(detect_format("# c\n3 0\n"), GraphFormat::EdgeList);
        assert_eq!(detect_format("Dhc\n"), GraphFormat::Graph6);
        assert_eq!(detect_format(">>graph6<<Dhc"), GraphFormat::Graph6);
        assert_eq!(parse_graph("Dhc", None).unwrap(), cycle(5).unwrap());
        assert_eq!(parse_graph("5 0", None).unwrap(), Graph::empty(5).unwrap());
    }
}
