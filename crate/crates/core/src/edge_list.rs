//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! `1 <= u < v <= n`. Blank lines are ignored.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(
            line_no,
            format!("expected two integers, found {} fields", toks.len()),
        ));
    }
    let num = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("'{t}' is not a nonnegative integer")))
    };
    Ok((num(toks[0])?, num(toks[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_no, header) = lines.next().ok_or_else(|| parse_err(1, "missing header 'n m'"))?;
    let (n, m) = two_numbers(header_no, header)?;
    if n == 0 {
        return Err(parse_err(header_no, "graph needs at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        let (u, v) = two_numbers(line_no, line)?;
        if edges.len() == m {
            return Err(parse_err(line_no, format!("more than the declared {m} edges")));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        if u > v {
            return Err(parse_err(line_no, format!("edge '{u} {v}' must be written with u < v")));
        }
        if u == 0 || v > n {
            return Err(parse_err(line_no, format!("edge '{u} {v}' outside 1..={n}")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(line_no, format!("duplicate edge '{u} {v}'")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

/// Renders `g` in the format read by [`parse_edge_list`], edges sorted.
pub fn format_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
