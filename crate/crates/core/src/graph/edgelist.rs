//! Plain edge-list text: a header line `n m`, then `m` lines `u v`.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn format(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list: missing 'n m' header".into()))?;
    let (n, m) = parse_pair(header, "header")?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line, "edge")?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "edge list: header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, &edges)
}

fn parse_pair(line: &str, what: &str) -> Result<(usize, usize)> {
    let fields: Vec<_> = line.split_whitespace().collect();
    let bad = || Error::Parse(format!("edge list: malformed {what} line '{line}'"));
    match fields[..] {
        [a, b] => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
        _ => Err(bad()),
    }
}
