//! Canonical labeling for small graphs.
//!
//! Search tree over individualize-and-refine: colors start from degrees, are
//! refined to an equitable partition, and the first non-singleton cell is
//! split by individualizing each of its vertices in turn. Every discrete
//! leaf yields a labeling; the key is the smallest upper-triangle adjacency
//! bitstring among the leaves. Cells made of pairwise twins are split on
//! their first vertex only, since any permutation of such a cell is an
//! automorphism.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};

pub const DEFAULT_CANON_LIMIT: usize = 10;

/// Isomorphism-class key: two graphs get the same form iff they are
/// isomorphic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    order: usize,
    /// Upper triangle in graph6 column order, packed MSB first.
    key: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn key(&self) -> &[u8] {
        &self.key
    }

    /// The graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let mut g = Graph::empty(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.key[k / 8] & (0x80 >> (k % 8)) != 0 {
                    g.link(i, j);
                }
                k += 1;
            }
        }
        g
    }

    pub fn graph6(&self) -> String {
        graph6::encode(&self.to_graph())
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.order, &self.key).cmp(&(other.order, &other.key))
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

/// Canonical form with the default order limit.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    let n = g.order();
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "canonical labeling",
            order: n,
            limit,
        });
    }
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut search = Search {
        adj: &adj,
        best: None,
    };
    let colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    search.descend(colors);
    Ok(CanonicalForm {
        order: n,
        key: search.best.unwrap_or_default(),
    })
}

struct Search<'a> {
    adj: &'a [Vec<bool>],
    best: Option<Vec<u8>>,
}

impl Search<'_> {
    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Replaces colors by the rank of (color, sorted neighbor colors) until
    /// the partition is equitable.
    fn refine(&self, colors: &mut [u32]) {
        let n = self.n();
        let mut classes = count_classes(colors);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<u32> = (0..n)
                        .filter(|&u| self.adj[v][u])
                        .map(|u| colors[u])
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
            distinct.sort();
            distinct.dedup();
            for v in 0..n {
                colors[v] = distinct.binary_search(&&sigs[v]).unwrap() as u32;
            }
            if distinct.len() == classes {
                return;
            }
            classes = distinct.len();
        }
    }

    fn descend(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        let n = self.n();
        if count_classes(&colors) == n {
            self.leaf(&colors);
            return;
        }
        // first non-singleton cell in color order
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let branches = if self.all_twins(&cell) {
            &cell[..1]
        } else {
            &cell[..]
        };
        for &v in branches {
            let child = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c + u32::from(w != v))
                .collect();
            self.descend(child);
        }
    }

    fn all_twins(&self, cell: &[usize]) -> bool {
        cell.iter().enumerate().all(|(i, &a)| {
            cell[i + 1..].iter().all(|&b| {
                (0..self.n()).all(|w| w == a || w == b || self.adj[a][w] == self.adj[b][w])
            })
        })
    }

    fn leaf(&mut self, colors: &[u32]) {
        let n = self.n();
        let mut at = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            at[c as usize] = v;
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let mut key = vec![0u8; nbits.div_ceil(8)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.adj[at[i]][at[j]] {
                    key[k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        if self.best.as_ref().is_none_or(|b| key < *b) {
            self.best = Some(key);
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::{complete, cycle, empty, path};
    use crate::graph::{stevanovic, CliqueCover};
    use crate::testutil::random_graph;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    /// Minimum over all n! labelings; independent of the search tree.
    fn brute_canonical(g: &Graph) -> Vec<u8> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.order())
            .into_iter()
            .map(|p| graph6::encode(&g.permute(&p)).into_bytes())
            .min()
            .unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = StdRng::seed_from_u64(7);
        for seed in 0..30 {
            let g = random_graph(2 + seed as usize % 8, 0.45, seed);
            let form = canonical_form(&g).unwrap();
            for _ in 0..50 {
                let mut perm: Vec<usize> = (0..g.order()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.permute(&perm)).unwrap(), form);
            }
        }
    }

    #[test]
    fn distinguishes_examples() {
        assert_ne!(
            canonical_form(&complete(3)).unwrap(),
            canonical_form(&path(3).unwrap()).unwrap()
        );
        let p5 = path(5).unwrap();
        let c1 = CliqueCover::validate(&p5, &[vec![0, 1], vec![2], vec![3, 4]]).unwrap();
        let c2 = CliqueCover::validate(&p5, &[vec![0], vec![1, 2], vec![3, 4]]).unwrap();
        let g1 = stevanovic(&p5, &c1).unwrap();
        let g2 = stevanovic(&p5, &c2).unwrap();
        assert_eq!(g1.order(), 11);
        assert_ne!(
            canonical_form_with_limit(&g1, 11).unwrap(),
            canonical_form_with_limit(&g2, 11).unwrap()
        );
        // C6 vs two triangles: same degree sequence, not isomorphic
        let two_k3 = crate::graph::disjoint_union(&complete(3), &complete(3));
        assert_ne!(
            canonical_form(&cycle(6).unwrap()).unwrap(),
            canonical_form(&two_k3).unwrap()
        );
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        for seed in 0..20 {
            let g = random_graph(6, 0.5, seed);
            let form = canonical_form(&g).unwrap();
            assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
            assert_eq!(form.to_graph().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn equal_forms_iff_isomorphic_brute() {
        // on order 5, compare against minimum over all 120 labelings
        for seed in 0..25 {
            let a = random_graph(5, 0.5, seed);
            let b = random_graph(5, 0.5, seed + 500);
            let same_form = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
            assert_eq!(same_form, brute_canonical(&a) == brute_canonical(&b));
        }
    }

    #[test]
    fn symmetric_graphs_and_limit() {
        assert_eq!(canonical_form(&empty(10)).unwrap().to_graph(), empty(10));
        assert_eq!(
            canonical_form(&complete(10)).unwrap().to_graph(),
            complete(10)
        );
        assert!(canonical_form(&empty(11)).is_err());
        assert!(canonical_form_with_limit(&empty(11), 11).is_ok());
        assert_eq!(canonical_form(&Graph::null()).unwrap().order(), 0);
    }
}
