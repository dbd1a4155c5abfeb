//! Text interchange formats: graph6 (short form), edge lists and 0/1 matrices.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable by the single-byte graph6 header.
pub const GRAPH6_MAX_N: usize = 62;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6 short form.
pub fn graph6_encode(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6(format!("order {n} exceeds short-form limit {GRAPH6_MAX_N}")));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    // Upper triangle, column by column.
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    Ok(out)
}

/// Decodes a graph6 short-form string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn graph6_decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let Some((&head, body)) = bytes.split_first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if let Some(&bad) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("byte {bad} outside printable range 63..126")));
    }
    if head == 126 {
        return Err(Error::Graph6("long-form header (n > 62) is not supported".into()));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated bit field: {} bytes, expected {need}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "trailing data: {} bytes, expected {need}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

/// Plain edge list: first line `n`, then one `u v` pair per line (0-indexed).
pub fn edge_list_encode(g: &Graph) -> String {
    let mut s = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn edge_list_decode(s: &str) -> Result<Graph> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count `{header}`")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse(format!("expected `u v`, got `{line}`")));
        };
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex `{t}`")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Graph::new(n, &edges)
}

/// `n` lines of `n` characters `0`/`1`.
pub fn matrix_decode(s: &str) -> Result<Graph> {
    let rows = s
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(Error::Parse(format!("unexpected matrix character `{other}`"))),
                })
                .collect::<Result<Vec<bool>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Graph::from_matrix(&rows)
}

/// Input formats understood by [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Auto,
    Graph6,
    EdgeList,
    Matrix,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(GraphFormat::Auto),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edges" | "edge-list" => Ok(GraphFormat::EdgeList),
            "matrix" => Ok(GraphFormat::Matrix),
            other => Err(Error::Parse(format!("unknown graph format `{other}`"))),
        }
    }
}

/// Guesses the format of `text`: a square block of two or more 0/1 lines is a
/// matrix, a leading integer starts an edge list, anything else is graph6.
pub fn detect_format(text: &str) -> GraphFormat {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let is_matrix = lines.len() >= 2
        && lines
            .iter()
            .all(|l| l.len() == lines.len() && l.bytes().all(|b| b == b'0' || b == b'1'));
    if is_matrix {
        GraphFormat::Matrix
    } else if lines.first().is_some_and(|l| l.bytes().all(|b| b.is_ascii_digit())) {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    let format = match format {
        GraphFormat::Auto => detect_format(text),
        f => f,
    };
    match format {
        GraphFormat::Graph6 => graph6_decode(text),
        GraphFormat::EdgeList => edge_list_decode(text),
        GraphFormat::Matrix => matrix_decode(text),
        GraphFormat::Auto => unreachable!(),
    }
}
