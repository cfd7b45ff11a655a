//! Test-only oracles, independent of the bitmask enumeration.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::graph::Graph;
use crate::poly::DominationPolynomial;

/// Counts dominating sets by checking every vertex of every subset against
/// an adjacency matrix.
pub fn naive_polynomial(g: &Graph) -> DominationPolynomial {
    let n = g.order();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u64..(1 << n) {
        let chosen: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let dominated = (0..n).all(|v| chosen[v] || (0..n).any(|u| chosen[u] && adj[u][v]));
        if dominated {
            counts[chosen.iter().filter(|&&c| c).count()] += 1;
        }
    }
    DominationPolynomial::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}
