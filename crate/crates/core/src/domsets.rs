//! Dominating-set enumeration and the irrelevant-edge machinery.
//!
//! [`brute_force_polynomial`] is the ground truth every closed form in this
//! crate is checked against: it walks all `2^n` vertex subsets.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::poly::DominationPolynomial;

pub const DEFAULT_LIMIT: usize = 24;

/// Orders above this are refused whatever the configured limit.
pub const HARD_LIMIT: usize = 48;

/// Configuration for subset enumeration.
#[derive(Clone, Copy, Debug)]
pub struct BruteForce {
    pub limit: usize,
    pub parallel: bool,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self {
            limit: DEFAULT_LIMIT,
            parallel: true,
        }
    }
}

impl BruteForce {
    pub fn with_limit(limit: usize) -> Self {
        Self {
            limit,
            ..Self::default()
        }
    }

    fn check_order(&self, g: &Graph) -> Result<()> {
        let limit = self.limit.min(HARD_LIMIT);
        if g.order() > limit {
            return Err(Error::LimitExceeded {
                what: "dominating-set enumeration",
                order: g.order(),
                limit,
            });
        }
        Ok(())
    }

    /// `d(G, i)` for `i = 0..=n` as machine integers.
    pub fn counts(&self, g: &Graph) -> Result<Vec<u64>> {
        self.check_order(g)?;
        let n = g.order();
        let closed: Vec<u64> = (0..n)
            .map(|v| g.closed_neighborhood(v).low_word())
            .collect();
        let full = (1u64 << n) - 1;

        // A subset mask is split as (hi << lo_bits) | lo; the covered set is
        // the union of two precomputed tables.
        let lo_bits = n / 2;
        let cover_table = |offset: usize, bits: usize| -> Vec<u64> {
            let mut table = vec![0u64; 1 << bits];
            for mask in 1..table.len() {
                let low = mask.trailing_zeros() as usize;
                table[mask] = table[mask & (mask - 1)] | closed[offset + low];
            }
            table
        };
        let lo_cover = cover_table(0, lo_bits);
        let hi_cover = cover_table(lo_bits, n - lo_bits);
        let lo_pop: Vec<u8> = (0..lo_cover.len()).map(|m| m.count_ones() as u8).collect();

        let count_hi = |hi: usize, acc: &mut Vec<u64>| {
            let base = hi.count_ones() as usize;
            let covered = hi_cover[hi];
            for (lo, &c) in lo_cover.iter().enumerate() {
                if covered | c == full {
                    acc[base + lo_pop[lo] as usize] += 1;
                }
            }
        };

        let counts = if self.parallel && n >= 12 {
            (0..hi_cover.len())
                .into_par_iter()
                .fold(
                    || vec![0u64; n + 1],
                    |mut acc, hi| {
                        count_hi(hi, &mut acc);
                        acc
                    },
                )
                .reduce(
                    || vec![0u64; n + 1],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                )
        } else {
            let mut acc = vec![0u64; n + 1];
            for hi in 0..hi_cover.len() {
                count_hi(hi, &mut acc);
            }
            acc
        };
        Ok(counts)
    }

    pub fn polynomial(&self, g: &Graph) -> Result<DominationPolynomial> {
        let counts = self.counts(g)?;
        Ok(DominationPolynomial::from_coeffs(
            counts.into_iter().map(BigInt::from).collect(),
        ))
    }

    /// `γ(G)`; the null graph gets 0.
    pub fn domination_number(&self, g: &Graph) -> Result<usize> {
        let counts = self.counts(g)?;
        Ok(counts.iter().position(|&c| c != 0).unwrap_or(0))
    }
}

/// `D(G, x)` by exhaustive enumeration, capped at [`DEFAULT_LIMIT`] vertices.
pub fn brute_force_polynomial(g: &Graph) -> Result<DominationPolynomial> {
    BruteForce::default().polynomial(g)
}

pub fn domination_number(g: &Graph) -> Result<usize> {
    BruteForce::default().domination_number(g)
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    if let Some(max) = s.max_element() {
        g.check_vertex(max)?;
    }
    let mut covered = VertexSet::new();
    for v in s.iter() {
        covered.union_with(&g.closed_neighborhood(v));
    }
    Ok(VertexSet::full(g.order()).is_subset(&covered))
}

/// True iff some neighbor `u` of `v` has `N[u] ⊆ N[v]`.
pub fn is_domination_covered(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let nv = g.closed_neighborhood(v);
    Ok(g.neighbors(v)
        .iter()
        .any(|u| g.closed_neighborhood(u).is_subset(&nv)))
}

/// Slow form: every dominating set of `G - v` contains a neighbor of `v`.
pub fn is_domination_covered_by_definition(g: &Graph, v: usize, limit: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let rest = g.remove_vertex(v)?;
    if rest.order() > limit.min(HARD_LIMIT) {
        return Err(Error::LimitExceeded {
            what: "definitional domination-covered check",
            order: rest.order(),
            limit,
        });
    }
    let nbrs: u64 = g
        .neighbors(v)
        .iter()
        .map(|u| if u > v { u - 1 } else { u })
        .fold(0, |m, u| m | 1 << u);
    let closed: Vec<u64> = (0..rest.order())
        .map(|w| rest.closed_neighborhood(w).low_word())
        .collect();
    let full = VertexSet::full(rest.order()).low_word();
    for mask in 0u64..(1u64 << rest.order()) {
        if mask & nbrs != 0 {
            continue;
        }
        let mut covered = 0;
        let mut m = mask;
        while m != 0 {
            covered |= closed[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        if covered == full {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Edges `{u, v}` with both endpoints domination-covered in `G - e`, in
/// lexicographic order.
pub fn irrelevant_edges(g: &Graph) -> Vec<Edge> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| edge_is_irrelevant(g, u, v))
        .collect()
}

fn edge_is_irrelevant(g: &Graph, u: usize, v: usize) -> bool {
    let h = g.delete_edge(u, v).expect("edge taken from g");
    is_domination_covered(&h, u).unwrap() && is_domination_covered(&h, v).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub deleted: Vec<Edge>,
    pub final_graph: Graph,
}

impl ReductionTrace {
    /// Replays the deletions from `start`.
    pub fn replay(&self, start: &Graph) -> Result<Graph> {
        self.deleted
            .iter()
            .try_fold(start.clone(), |g, &(u, v)| g.delete_edge(u, v))
    }
}

/// Deletes the lexicographically smallest irrelevant edge until none is
/// left. Irrelevance is recomputed after every deletion.
pub fn reduce_irrelevant(g: &Graph) -> ReductionTrace {
    let mut current = g.clone();
    let mut deleted = Vec::new();
    while let Some((u, v)) = current
        .edges()
        .into_iter()
        .find(|&(u, v)| edge_is_irrelevant(&current, u, v))
    {
        current = current.delete_edge(u, v).unwrap();
        deleted.push((u, v));
    }
    ReductionTrace {
        deleted,
        final_graph: current,
    }
}
