//! Named graph families.

use std::fmt;
use std::str::FromStr;

use super::{join, stevanovic, CliqueCover, Graph};
use crate::error::{Error, Result};

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// `P_n`, vertices in path order. Requires `n >= 1`.
pub fn path(n: usize) -> Result<Graph> {
    check(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.link(i - 1, i);
    }
    Ok(g)
}

/// `C_n`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    check(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    let mut g = path(n)?;
    g.link(n - 1, 0);
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.link(u, v);
        }
    }
    g
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

/// `nK_2`: edges `(2i, 2i+1)`.
pub fn n_k2(n: usize) -> Graph {
    let mut g = Graph::empty(2 * n);
    for i in 0..n {
        g.link(2 * i, 2 * i + 1);
    }
    g
}

/// `F_n = K_1 + nK_2`; vertex 0 is the hub.
pub fn friendship(n: usize) -> Result<Graph> {
    check(n >= 1, || format!("friendship needs n >= 1, got {n}"))?;
    Ok(join(&complete(1), &n_k2(n)))
}

/// `B_n`: `n` four-cycles sharing the edge `{0, 1}`. Page `i` adds
/// `2 + 2i` (adjacent to 0) and `3 + 2i` (adjacent to 1), joined to each other.
pub fn book(n: usize) -> Result<Graph> {
    check(n >= 1, || format!("book needs n >= 1, got {n}"))?;
    let mut g = Graph::empty(2 + 2 * n);
    g.link(0, 1);
    for i in 0..n {
        let (a, b) = (2 + 2 * i, 3 + 2 * i);
        g.link(0, a);
        g.link(1, b);
        g.link(a, b);
    }
    Ok(g)
}

/// `S_{k,n-k} = K_k + (n-k)K_1`. Requires `n > k >= 1`.
pub fn k_star(k: usize, n: usize) -> Result<Graph> {
    check(k >= 1 && n > k, || {
        format!("k_star needs n > k >= 1, got k={k}, n={n}")
    })?;
    Ok(join(&complete(k), &Graph::empty(n - k)))
}

/// The cover of `P_m` used for `H_m`: pairs `{0,1},{2,3},...` for even `m`,
/// `{0},{1,2},{3,4},...` for odd `m`.
pub fn h_cover(m: usize) -> Vec<Vec<usize>> {
    let mut parts = Vec::new();
    let mut start = 0;
    if m % 2 == 1 {
        parts.push(vec![0]);
        start = 1;
    }
    while start < m {
        parts.push(vec![start, start + 1]);
        start += 2;
    }
    parts
}

/// `H_m = C{P_m}` under [`h_cover`]; `H_0` is the null graph.
pub fn h_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return Ok(Graph::null());
    }
    let p = path(m)?;
    let cover = CliqueCover::validate(&p, &h_cover(m))?;
    stevanovic(&p, &cover)
}

/// Edges of `P_m` joining consecutive parts of the `H_m` cover.
pub fn h_connectors(m: usize) -> Vec<(usize, usize)> {
    let parts = h_cover(m);
    parts
        .windows(2)
        .map(|w| (*w[0].last().unwrap(), w[1][0]))
        .collect()
}

/// A family name with parameters, as written `name(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    NK2(usize),
    Friendship(usize),
    Book(usize),
    KStar(usize, usize),
    HGraph(usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => Ok(complete(n)),
            Family::Empty(n) => Ok(empty(n)),
            Family::NK2(n) => Ok(n_k2(n)),
            Family::Friendship(n) => friendship(n),
            Family::Book(n) => book(n),
            Family::KStar(k, n) => k_star(k, n),
            Family::HGraph(m) => h_graph(m),
        }
    }

    pub fn from_name_args(name: &str, args: &[usize]) -> Result<Self> {
        let arity = |want: usize| {
            if args.len() == want {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "family '{name}' takes {want} argument(s), got {}",
                    args.len()
                )))
            }
        };
        let fam = match name {
            "path" => arity(1).map(|_| Family::Path(args[0])),
            "cycle" => arity(1).map(|_| Family::Cycle(args[0])),
            "complete" => arity(1).map(|_| Family::Complete(args[0])),
            "empty" => arity(1).map(|_| Family::Empty(args[0])),
            "n_k2" => arity(1).map(|_| Family::NK2(args[0])),
            "friendship" => arity(1).map(|_| Family::Friendship(args[0])),
            "book" => arity(1).map(|_| Family::Book(args[0])),
            "k_star" => arity(2).map(|_| Family::KStar(args[0], args[1])),
            "h_graph" => arity(1).map(|_| Family::HGraph(args[0])),
            _ => Err(Error::Parse(format!("unknown family '{name}'"))),
        }?;
        Ok(fam)
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name(a, b, ...)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed family '{s}', expected name(args)"));
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let args = inner
            .split(',')
            .filter(|a| !a.trim().is_empty())
            .map(|a| a.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Family::from_name_args(s[..open].trim(), &args)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path({n})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::Empty(n) => write!(f, "empty({n})"),
            Family::NK2(n) => write!(f, "n_k2({n})"),
            Family::Friendship(n) => write!(f, "friendship({n})"),
            Family::Book(n) => write!(f, "book({n})"),
            Family::KStar(k, n) => write!(f, "k_star({k}, {n})"),
            Family::HGraph(m) => write!(f, "h_graph({m})"),
        }
    }
}
