//! graph6 encoding of undirected graphs.
//!
//! The order is written as one byte `n + 63` for `n <= 62`, or as `~`
//! followed by three 6-bit bytes for `n <= 258047`. The upper triangle of the
//! adjacency matrix is then packed column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`) into 6-bit groups, each offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 258_047;

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= MAX_ORDER,
        "graph6 supports at most {MAX_ORDER} vertices"
    );
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
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| Error::Parse(format!("graph6: {msg}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, ..] => return Err(bad("orders above 258047 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated order"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad(&format!(
            "expected {} data bytes for order {n}, got {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = (body[body.len() - 1] - 63) & ((1 << (6 - nbits % 6)) - 1);
        if pad != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}
