//! Line-oriented text formats.
//!
//! Bipartite: `p bis <|U|> <|V|> <m>` followed by `m` lines `e <u> <v>`.
//! Coloured: `p col <n> <m> <q>`, then `n` lines `v <index> <colour>` and `m`
//! lines `e <a> <b>`. Names are 1-based; lines starting with `c` are comments.

use std::fmt::Write as _;

use super::{BipartiteGraph, ColouredGraph};
use crate::error::{Error, Result};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            None => None,
            Some(f) if f.starts_with('c') => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

fn number(line: usize, field: &str) -> Result<usize> {
    field.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found {field:?}")))
}

/// 1-based name in `1..=bound` to 0-based index.
fn vertex(line: usize, field: &str, bound: usize) -> Result<usize> {
    let x = number(line, field)?;
    if x == 0 || x > bound {
        return Err(Error::VertexOutOfRange { vertex: x, bound });
    }
    Ok(x - 1)
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    if header.len() != 5 || header[0] != "p" || header[1] != "bis" {
        return Err(syntax(line, "expected header `p bis <|U|> <|V|> <m>`"));
    }
    let n_left = number(line, header[2])?;
    let n_right = number(line, header[3])?;
    let m = number(line, header[4])?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    let mut last_line = line;
    for (line, fields) in lines {
        last_line = line;
        if fields[0] != "e" || fields.len() != 3 {
            return Err(syntax(line, "expected edge line `e <u> <v>`"));
        }
        let u = vertex(line, fields[1], n_left)?;
        let v = vertex(line, fields[2], n_right)?;
        if !seen.insert((u, v)) {
            return Err(Error::DuplicateEdge((u + 1, v + 1)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(syntax(last_line, format!("header announces {m} edges, found {}", edges.len())));
    }
    BipartiteGraph::new(n_left, n_right, edges)
}

pub fn serialize_bipartite(g: &BipartiteGraph) -> String {
    let mut out = format!("p bis {} {} {}\n", g.n_left(), g.n_right(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_coloured(text: &str) -> Result<ColouredGraph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    if header.len() != 5 || header[0] != "p" || header[1] != "col" {
        return Err(syntax(line, "expected header `p col <n> <m> <q>`"));
    }
    let n = number(line, header[2])?;
    let m = number(line, header[3])?;
    let q = number(line, header[4])?;

    let mut colours: Vec<Option<u32>> = vec![None; n];
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    let mut last_line = line;
    for (line, fields) in lines {
        last_line = line;
        if fields.len() != 3 {
            return Err(syntax(line, "expected `v <index> <colour>` or `e <a> <b>`"));
        }
        match fields[0] {
            "v" => {
                let v = vertex(line, fields[1], n)?;
                let c = number(line, fields[2])?;
                if c == 0 || c > q {
                    return Err(syntax(line, format!("colour {c} outside 1..={q}")));
                }
                if colours[v].replace(c as u32).is_some() {
                    return Err(syntax(line, format!("vertex {} coloured twice", v + 1)));
                }
            }
            "e" => {
                let a = vertex(line, fields[1], n)?;
                let b = vertex(line, fields[2], n)?;
                if a == b {
                    return Err(Error::SelfLoop(a + 1));
                }
                if !seen.insert((a.min(b), a.max(b))) {
                    return Err(Error::DuplicateEdge((a.min(b) + 1, a.max(b) + 1)));
                }
                edges.push((a, b));
            }
            other => return Err(syntax(line, format!("unknown line type {other:?}"))),
        }
    }
    if edges.len() != m {
        return Err(syntax(last_line, format!("header announces {m} edges, found {}", edges.len())));
    }
    let colours = colours
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| syntax(last_line, format!("vertex {} has no colour", v + 1))))
        .collect::<Result<Vec<_>>>()?;
    ColouredGraph::new(colours, edges)
}

pub fn serialize_coloured(g: &ColouredGraph) -> String {
    let edges = g.edges();
    let mut out = format!("p col {} {} {}\n", g.n(), edges.len(), g.max_colour());
    for (v, c) in g.colours().iter().enumerate() {
        writeln!(out, "v {} {}", v + 1, c).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "e {} {}", a + 1, b + 1).unwrap();
    }
    out
}
