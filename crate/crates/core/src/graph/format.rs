//! graph6 and edge-list text formats.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::MultiGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "el" => Ok(Format::Edgelist),
            other => Err(Error::InvalidParam(format!("unknown format {other:?}"))),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<MultiGraph> {
    match format {
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| perr(1, "empty input"))?;
            parse_graph6(line)
        }
        Format::Edgelist => parse_edgelist(text),
    }
}

/// Every non-blank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<MultiGraph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

pub fn emit_graph(g: &MultiGraph, format: Format) -> Result<String> {
    match format {
        Format::Graph6 => emit_graph6(g),
        Format::Edgelist => Ok(emit_edgelist(g)),
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_edgelist(text: &str) -> Result<MultiGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| perr(1, "missing header"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(perr(hline, "header must be \"n m\""));
    }
    let n: usize = nums[0].parse().map_err(|_| perr(hline, "bad vertex count"))?;
    let m: usize = nums[1].parse().map_err(|_| perr(hline, "bad edge count"))?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(perr(lineno, "edge line must be \"u v\""));
        }
        let u: usize = toks[0].parse().map_err(|_| perr(lineno, "bad endpoint"))?;
        let v: usize = toks[1].parse().map_err(|_| perr(lineno, "bad endpoint"))?;
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(perr(
            hline,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    MultiGraph::new(n, edges)
}

fn emit_edgelist(g: &MultiGraph) -> String {
    let mut s = String::new();
    writeln!(s, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

fn parse_graph6(line: &str) -> Result<MultiGraph> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(perr(1, "graph6 byte outside 63..=126"));
    }
    let (n, rest) = match bytes {
        [] => return Err(perr(1, "empty graph6 string")),
        [126, 126, r @ ..] => {
            if r.len() < 6 {
                return Err(perr(1, "truncated graph6 size"));
            }
            (decode_size(&r[..6]), &r[6..])
        }
        [126, r @ ..] => {
            if r.len() < 3 {
                return Err(perr(1, "truncated graph6 size"));
            }
            (decode_size(&r[..3]), &r[3..])
        }
        [b, r @ ..] => ((*b - 63) as usize, r),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if rest.len() != need {
        return Err(perr(
            1,
            format!("graph6 body has {} bytes, expected {need}", rest.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    MultiGraph::new(n, edges)
}

fn decode_size(b: &[u8]) -> usize {
    b.iter().fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize)
}

fn emit_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgelist_path() {
        let g = parse_graph("3 2\n0 1\n1 2\n", Format::Edgelist).unwrap();
        assert_eq!(g, MultiGraph::path(3));
    }

    #[test]
    fn edgelist_loop_rejected() {
        let e = parse_graph("3 1\n2 2\n", Format::Edgelist).unwrap_err();
        assert_eq!(e, Error::Loop(2));
    }

    #[test]
    fn edgelist_errors() {
        assert!(parse_graph("", Format::Edgelist).is_err());
        assert!(parse_graph("3\n", Format::Edgelist).is_err());
        assert!(matches!(
            parse_graph("2 1\n0 5\n", Format::Edgelist),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(parse_graph("2 2\n0 1\n", Format::Edgelist).is_err());
    }

    #[test]
    fn edgelist_multiplicity() {
        let g = parse_graph("2 2\n0 1\n1 0\n", Format::Edgelist).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
    }

    #[test]
    fn graph6_k4() {
        let g = parse_graph("C~", Format::Graph6).unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert_eq!(emit_graph(&MultiGraph::complete(4), Format::Graph6).unwrap(), "C~");
    }

    #[test]
    fn graph6_known_string() {
        // 5 vertices, edges 0-2 0-4 1-3 3-4
        let g = MultiGraph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph(&g, Format::Graph6).unwrap(), "DQc");
        assert_eq!(parse_graph("DQc", Format::Graph6).unwrap(), g);
    }

    #[test]
    fn graph6_large_header() {
        let g = MultiGraph::cycle(70);
        let s = emit_graph(&g, Format::Graph6).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph(&s, Format::Graph6).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_multigraph() {
        let g = MultiGraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(emit_graph(&g, Format::Graph6), Err(Error::NotSimple));
    }

    #[test]
    fn c5_edgelist_has_five_edge_lines() {
        let s = emit_graph(&MultiGraph::cycle(5), Format::Edgelist).unwrap();
        assert_eq!(s.lines().count(), 6);
    }
}
