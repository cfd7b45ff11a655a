//! D-equivalence: isomorphism classes, exhaustive enumeration, and checks of
//! the equivalence-class results for friendship graphs, coronas with `K_1`,
//! the `H_n` family and clique cover products.

mod canon;
mod enumerate;

pub use canon::{canonical_form, canonical_form_with_limit, CanonicalForm, DEFAULT_CANON_LIMIT};
pub use enumerate::{enumerate_graphs, enumerate_labeled_dedup, DEFAULT_ENUM_LIMIT};

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::domsets::{BruteForce, DEFAULT_LIMIT};
use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::{
    clique_cover_product, contract_vertex, corona, family, graph6, join, CliqueCover, Graph,
};
use crate::poly::DominationPolynomial;

/// Order caps for the three expensive procedures.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub brute_force: usize,
    pub canonical: usize,
    pub enumeration: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            brute_force: DEFAULT_LIMIT,
            canonical: DEFAULT_CANON_LIMIT,
            enumeration: DEFAULT_ENUM_LIMIT,
        }
    }
}

impl Limits {
    fn brute(&self) -> BruteForce {
        BruteForce::with_limit(self.brute_force)
    }

    fn canon(&self, g: &Graph) -> Result<CanonicalForm> {
        canonical_form_with_limit(g, self.canonical)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMember {
    pub form: CanonicalForm,
    pub graph: Graph,
}

/// All order-`n` graphs (up to isomorphism) sharing one domination
/// polynomial. Members are sorted by canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub polynomial: DominationPolynomial,
    pub order: usize,
    pub members: Vec<ClassMember>,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    order: usize,
    polynomial: String,
    size: usize,
    members: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    extra: Option<&'a serde_json::Value>,
}

impl EquivalenceReport {
    pub fn forms(&self) -> BTreeSet<CanonicalForm> {
        self.members.iter().map(|m| m.form.clone()).collect()
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.members.iter().any(|m| &m.form == form)
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }

    fn doc<'a>(&self, extra: Option<&'a serde_json::Value>) -> ReportDoc<'a> {
        ReportDoc {
            order: self.order,
            polynomial: self.polynomial.to_string(),
            size: self.members.len(),
            members: self
                .members
                .iter()
                .map(|m| graph6::encode(&m.graph))
                .collect(),
            extra,
        }
    }

    /// `{"order", "polynomial", "size", "members": [graph6...]}`
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.doc(None)).expect("report serializes")
    }

    pub(crate) fn to_json_with(&self, extra: &serde_json::Value) -> String {
        serde_json::to_string_pretty(&self.doc(Some(extra))).expect("report serializes")
    }
}

pub fn d_equivalent(g: &Graph, h: &Graph, limits: &Limits) -> Result<bool> {
    let bf = limits.brute();
    Ok(bf.polynomial(g)? == bf.polynomial(h)?)
}

/// Every order-`n` isomorphism class whose polynomial equals `target`.
pub fn equivalence_class(
    target: &DominationPolynomial,
    n: usize,
    limits: &Limits,
) -> Result<EquivalenceReport> {
    if n > limits.brute_force {
        return Err(Error::LimitExceeded {
            what: "dominating-set enumeration",
            order: n,
            limit: limits.brute_force,
        });
    }
    let bf = limits.brute();
    let graphs = enumerate_graphs(n, limits.enumeration.min(limits.canonical))?;
    let members = graphs
        .into_par_iter()
        .map(|(form, graph)| {
            Ok((bf.polynomial(&graph)? == *target).then_some(ClassMember { form, graph }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(EquivalenceReport {
        polynomial: target.clone(),
        order: n,
        members,
    })
}

/// The class of `g` among all graphs of the same order.
pub fn class_of(g: &Graph, limits: &Limits) -> Result<EquivalenceReport> {
    let d = limits.brute().polynomial(g)?;
    equivalence_class(&d, g.order(), limits)
}

#[derive(Clone, Debug)]
pub struct FriendshipCheck {
    pub holds: bool,
    pub report: EquivalenceReport,
    /// Canonical forms of `(G ∘ K_1) + K_1` over all order-`n` graphs `G`.
    pub constructed: BTreeSet<CanonicalForm>,
    /// Canonical form of `B_n / v`.
    pub book_witness: CanonicalForm,
}

/// Compares the class of `D(F_n)` at order `2n + 1` with the set
/// `{(G ∘ K_1) + K_1 : |G| = n}`.
pub fn verify_friendship_class(n: usize, limits: &Limits) -> Result<FriendshipCheck> {
    let target = formulas::d_friendship(n)?;
    let report = equivalence_class(&target, 2 * n + 1, limits)?;
    let k1 = family::complete(1);
    let constructed = enumerate_graphs(n, limits.enumeration)?
        .into_iter()
        .map(|(_, g)| limits.canon(&join(&corona(&g, &k1)?, &k1)))
        .collect::<Result<BTreeSet<_>>>()?;
    let book_witness = limits.canon(&contract_vertex(&family::book(n)?, 1)?)?;
    Ok(FriendshipCheck {
        holds: report.forms() == constructed,
        report,
        constructed,
        book_witness,
    })
}

#[derive(Clone, Debug)]
pub struct CoronaK1Check {
    pub holds: bool,
    /// Order-`2n` graphs with `D = x^n (x+2)^n`.
    pub matching: BTreeSet<CanonicalForm>,
    /// Canonical forms of `H ∘ K_1` over all order-`n` graphs `H`.
    pub coronas: BTreeSet<CanonicalForm>,
}

/// Over all order-`2n` graphs: `D(G) = x^n (x+2)^n` iff `G ≅ H ∘ K_1` with
/// `|H| = n`.
pub fn verify_corona_k1(n: usize, limits: &Limits) -> Result<CoronaK1Check> {
    if n == 0 {
        return Err(Error::InvalidParameter("corona-k1 needs n >= 1".into()));
    }
    let target = DominationPolynomial::from_i64s(&[0, 2, 1]).pow(n as u32);
    let matching = equivalence_class(&target, 2 * n, limits)?.forms();
    let k1 = family::complete(1);
    let coronas = enumerate_graphs(n, limits.enumeration)?
        .into_iter()
        .map(|(_, h)| limits.canon(&corona(&h, &k1)?))
        .collect::<Result<BTreeSet<_>>>()?;
    Ok(CoronaK1Check {
        holds: matching == coronas,
        matching,
        coronas,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeRecord {
    pub product: DominationPolynomial,
    pub factor_product: DominationPolynomial,
}

impl ProbeRecord {
    pub fn equal(&self) -> bool {
        self.product == self.factor_product
    }
}

/// Enumerates `G^C ⋆ H^U` as a whole and compares with `∏ D(H*)`.
pub fn probe_general_u(
    g: &Graph,
    cover: &CliqueCover,
    h: &Graph,
    u: &[usize],
    limits: &Limits,
) -> Result<ProbeRecord> {
    let bf = limits.brute();
    let whole = clique_cover_product(g, cover, h, u)?;
    Ok(ProbeRecord {
        product: bf.polynomial(&whole)?,
        factor_product: formulas::d_clique_cover_product_factors(cover, h, u, &bf)?,
    })
}

type EdgeSets = Vec<Vec<(usize, usize)>>;

/// Result of the `H_{2n}` edge-variant sweep.
#[derive(Clone, Debug, Default)]
pub struct VariantCheck {
    pub holds: bool,
    pub deletion_sets: usize,
    pub addition_sets: usize,
    /// Edge sets whose deletion or addition changed the polynomial.
    pub failures: EdgeSets,
}

/// Pairs the addition variant may connect in `H_{2n}`: non-adjacent pairs
/// of two degree-4 vertices, or a degree-3 and a degree-4 vertex.
pub fn h_addition_candidates(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| {
            let mut d = [g.degree(u), g.degree(v)];
            d.sort_unstable();
            !g.has_edge(u, v) && (d == [4, 4] || d == [3, 4])
        })
        .collect()
}

/// Every subset of the connector edges of `H_{2n}` may be deleted without
/// changing the polynomial; for `n <= 3` every subset of
/// [`h_addition_candidates`] may be added as well.
pub fn verify_h_variants(n: usize, limits: &Limits) -> Result<VariantCheck> {
    let g = family::h_graph(2 * n)?;
    let bf = limits.brute();
    if g.order() > limits.brute_force {
        return Err(Error::LimitExceeded {
            what: "dominating-set enumeration",
            order: g.order(),
            limit: limits.brute_force,
        });
    }
    let expected = formulas::d_h_even(n)?;

    let sweep = |edges: &[(usize, usize)], delete: bool| -> Result<(usize, EdgeSets)> {
        let subsets = 1usize << edges.len();
        let failures = (0..subsets)
            .into_par_iter()
            .map(|mask| {
                let chosen: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let variant = chosen.iter().try_fold(g.clone(), |acc, &(a, b)| {
                    if delete {
                        acc.delete_edge(a, b)
                    } else {
                        acc.add_edge(a, b)
                    }
                })?;
                Ok((bf.polynomial(&variant)? != expected).then_some(chosen))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok((subsets, failures))
    };

    let (deletion_sets, mut failures) = sweep(&family::h_connectors(2 * n), true)?;
    let mut addition_sets = 0;
    if n <= 3 {
        let (count, more) = sweep(&h_addition_candidates(&g), false)?;
        addition_sets = count;
        failures.extend(more);
    }
    Ok(VariantCheck {
        holds: failures.is_empty(),
        deletion_sets,
        addition_sets,
        failures,
    })
}
