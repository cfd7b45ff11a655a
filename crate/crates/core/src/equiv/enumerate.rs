use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_form_with_limit, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};

pub const DEFAULT_ENUM_LIMIT: usize = 8;

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "graph enumeration",
            order: n,
            limit,
        });
    }
    Ok(())
}

/// One representative per isomorphism class of order-`n` graphs, in
/// canonical labeling, sorted by canonical form.
///
/// Order `k` is grown from order `k - 1` by adding a vertex with every
/// possible neighborhood and deduplicating by canonical form.
pub fn enumerate_graphs(n: usize, limit: usize) -> Result<Vec<(CanonicalForm, Graph)>> {
    check_limit(n, limit)?;
    let mut level: BTreeSet<CanonicalForm> =
        BTreeSet::from([canonical_form_with_limit(&Graph::null(), limit)?]);
    for k in 1..=n {
        let parents: Vec<Graph> = level.iter().map(CanonicalForm::to_graph).collect();
        level = parents
            .par_iter()
            .map(|parent| -> Result<BTreeSet<CanonicalForm>> {
                let mut out = BTreeSet::new();
                for nbrs in 0u64..(1 << (k - 1)) {
                    let mut g = disjoint_union(parent, &Graph::empty(1));
                    for u in 0..k - 1 {
                        if nbrs >> u & 1 == 1 {
                            g.link(u, k - 1);
                        }
                    }
                    out.insert(canonical_form_with_limit(&g, limit)?);
                }
                Ok(out)
            })
            .try_reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                Ok(a)
            })?;
    }
    Ok(level
        .into_iter()
        .map(|form| {
            let g = form.to_graph();
            (form, g)
        })
        .collect())
}

/// Deduplicates all `2^(n(n-1)/2)` labeled graphs on `n` vertices.
/// Slow; used to cross-check [`enumerate_graphs`].
pub fn enumerate_labeled_dedup(n: usize, limit: usize) -> Result<Vec<CanonicalForm>> {
    check_limit(n, limit)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let forms = (0u64..(1 << pairs.len()))
        .into_par_iter()
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            canonical_form_with_limit(&Graph::new(n, &edges).unwrap(), limit)
        })
        .collect::<Result<BTreeSet<_>>>()?;
    Ok(forms.into_iter().collect())
}
