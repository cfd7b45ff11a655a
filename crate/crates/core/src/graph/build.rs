//! Binary graph operations and the clique cover product.
//!
//! Labeling is fixed for every operation: the vertices of the left operand
//! keep their labels, and each appended copy occupies the next contiguous
//! block of labels.

use super::{CliqueCover, Graph, VertexSet};
use crate::error::{Error, Result};

/// Appends a copy of `h` to `g`, returning the label offset of the copy.
fn append(g: &mut Graph, h: &Graph) -> usize {
    let offset = g.n;
    g.n += h.n;
    g.adj.resize(g.n, VertexSet::new());
    for (u, v) in h.edges() {
        g.link(offset + u, offset + v);
    }
    offset
}

/// Vertex-disjoint union; `h`'s labels are shifted by `|g|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let mut out = g.clone();
    append(&mut out, h);
    out
}

/// `g + h`: disjoint union plus every edge between `V(g)` and `V(h)`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = g.clone();
    let offset = append(&mut out, h);
    for u in 0..g.n {
        for v in 0..h.n {
            out.link(u, offset + v);
        }
    }
    out
}

/// `g ∘ h`: copy `i` of `h` is fully joined to vertex `i` of `g`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 {
        return Err(Error::InvalidParameter(
            "corona requires a nonempty left operand".into(),
        ));
    }
    let mut out = g.clone();
    for i in 0..g.n {
        let offset = append(&mut out, h);
        for v in 0..h.n {
            out.link(i, offset + v);
        }
    }
    Ok(out)
}

/// `G^C ⋆ H^U`: one fresh copy of `h` per part of `cover`, with every vertex
/// of the part joined to every vertex of `u` inside that copy.
///
/// The cover must have been validated against `g`.
pub fn clique_cover_product(
    g: &Graph,
    cover: &CliqueCover,
    h: &Graph,
    u: &[usize],
) -> Result<Graph> {
    // re-check; a cover validated for a different graph is a caller error
    let cover = CliqueCover::validate(g, cover.parts())?;
    for &w in u {
        h.check_vertex(w)?;
    }
    let attach: VertexSet = u.iter().copied().collect();
    let mut out = g.clone();
    for part in cover.parts() {
        let offset = append(&mut out, h);
        for &c in part {
            for w in attach.iter() {
                out.link(c, offset + w);
            }
        }
    }
    Ok(out)
}

/// `C{G}`: two new non-adjacent vertices per part, each joined to the part.
pub fn stevanovic(g: &Graph, cover: &CliqueCover) -> Result<Graph> {
    clique_cover_product(g, cover, &Graph::empty(2), &[0, 1])
}

/// `G/u`: the neighbors of `u` become a clique, then `u` is deleted and
/// higher labels shift down by one.
pub fn contract_vertex(g: &Graph, u: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    let mut h = g.clone();
    let nbrs: Vec<usize> = g.neighbors(u).iter().collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            h.link(a, b);
        }
    }
    h.remove_vertex(u)
}
