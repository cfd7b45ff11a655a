use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// A partition of a graph's vertex set into cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    parts: Vec<Vec<usize>>,
}

impl CliqueCover {
    /// Checks that `parts` are nonempty, pairwise disjoint, cover every
    /// vertex of `g` and each induce a complete subgraph.
    pub fn validate(g: &Graph, parts: &[Vec<usize>]) -> Result<Self> {
        let mut seen = VertexSet::new();
        let mut normalized = Vec::with_capacity(parts.len());
        for part in parts {
            if part.is_empty() {
                return Err(Error::InvalidCover("empty part".into()));
            }
            let mut set = VertexSet::new();
            for &v in part {
                g.check_vertex(v)?;
                if seen.contains(v) {
                    return Err(Error::InvalidCover(format!(
                        "vertex {v} appears in more than one part"
                    )));
                }
                seen.insert(v);
                set.insert(v);
            }
            if !g.is_clique(&set) {
                return Err(Error::InvalidCover(format!("{part:?} is not a clique")));
            }
            normalized.push(set.iter().collect());
        }
        if let Some(missing) = (0..g.order()).find(|&v| !seen.contains(v)) {
            return Err(Error::InvalidCover(format!(
                "vertex {missing} is not covered"
            )));
        }
        Ok(Self { parts: normalized })
    }

    /// One part per vertex, in vertex order.
    pub fn singletons(g: &Graph) -> Self {
        Self {
            parts: (0..g.order()).map(|v| vec![v]).collect(),
        }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Clique orders `n_1, ..., n_k` in part order.
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// Parses `"0,1;2;3,4"`: parts separated by `;`, vertices by `,`.
    pub fn parse_parts(s: &str) -> Result<Vec<Vec<usize>>> {
        s.split(';')
            .map(|part| {
                part.split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad vertex '{v}' in cover '{s}'")))
                    })
                    .collect()
            })
            .collect()
    }

    /// Every partition of `V(g)` into cliques.
    pub fn all_partitions(g: &Graph) -> Vec<Self> {
        fn rec(g: &Graph, v: usize, parts: &mut Vec<Vec<usize>>, out: &mut Vec<CliqueCover>) {
            if v == g.order() {
                out.push(CliqueCover {
                    parts: parts.clone(),
                });
                return;
            }
            for i in 0..parts.len() {
                if parts[i].iter().all(|&u| g.has_edge(u, v)) {
                    parts[i].push(v);
                    rec(g, v + 1, parts, out);
                    parts[i].pop();
                }
            }
            parts.push(vec![v]);
            rec(g, v + 1, parts, out);
            parts.pop();
        }
        let mut out = Vec::new();
        rec(g, 0, &mut Vec::new(), &mut out);
        out
    }
}
