//! Closed-form domination polynomials for joins, coronas, clique cover
//! products and the named families built from them.

use rayon::prelude::*;

use crate::domsets::BruteForce;
use crate::error::{Error, Result};
use crate::graph::{clique_cover_product, family, CliqueCover, Graph};
use crate::poly::DominationPolynomial as Poly;

/// Orders `n_1, ..., n_k` of the cliques of a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSizeProfile(Vec<usize>);

impl CliqueSizeProfile {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidParameter("clique sizes must be >= 1".into()));
        }
        Ok(Self(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }
}

impl From<&CliqueCover> for CliqueSizeProfile {
    fn from(cover: &CliqueCover) -> Self {
        Self(cover.sizes())
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{what} must be >= 1")))
    } else {
        Ok(())
    }
}

fn check_order(d: &Poly, n: usize, what: &str) -> Result<()> {
    match d.degree() {
        Some(deg) if deg > n => Err(Error::InvalidParameter(format!(
            "{what} has degree {deg} but the graph has order {n}"
        ))),
        _ => Ok(()),
    }
}

fn u32_of(n: usize) -> u32 {
    u32::try_from(n).expect("exponent fits in u32")
}

/// `(1+x)^n - 1`
pub fn d_complete(n: usize) -> Result<Poly> {
    positive(n, "order of K_n")?;
    Ok(&Poly::binomial_power(n) - &Poly::one())
}

/// `D(G+H) = ((1+x)^{n1} - 1)((1+x)^{n2} - 1) + D(G) + D(H)`
pub fn d_join(dg: &Poly, dh: &Poly, n1: usize, n2: usize) -> Result<Poly> {
    positive(n1, "order of the left join operand")?;
    positive(n2, "order of the right join operand")?;
    check_order(dg, n1, "left polynomial")?;
    check_order(dh, n2, "right polynomial")?;
    let cross = &d_complete(n1)? * &d_complete(n2)?;
    Ok(&(&cross + dg) + dh)
}

/// `D(G∘H) = (x(1+x)^m + D(H))^n` for `|H| = m`, `|G| = n`.
pub fn d_corona(dh: &Poly, m: usize, n: usize) -> Result<Poly> {
    positive(m, "order of H")?;
    positive(n, "order of G")?;
    check_order(dh, m, "polynomial of H")?;
    let factor = &Poly::binomial_power(m).shift(1) + dh;
    Ok(factor.pow(u32_of(n)))
}

/// `D(G^C ⋆ H) = ∏_i [((1+x)^{n_i} - 1)(1+x)^h + D(H)]` with `U = V(H)`.
///
/// An empty profile (null `G`) gives the empty product 1.
pub fn d_clique_cover_product(profile: &CliqueSizeProfile, dh: &Poly, h: usize) -> Result<Poly> {
    positive(h, "order of H")?;
    check_order(dh, h, "polynomial of H")?;
    let h_part = Poly::binomial_power(h);
    profile
        .sizes()
        .iter()
        .map(|&ni| Ok(&(&d_complete(ni)? * &h_part) + dh))
        .product()
}

/// `D(S_{k,n-k}) = (1+x)^{n-k}((1+x)^k - 1) + x^{n-k}`
pub fn d_kstar(k: usize, n: usize) -> Result<Poly> {
    if k == 0 || n <= k {
        return Err(Error::InvalidParameter(format!(
            "k-star needs n > k >= 1, got k={k}, n={n}"
        )));
    }
    let outer = n - k;
    Ok(&(&Poly::binomial_power(outer) * &d_complete(k)?) + &Poly::monomial(1, outer))
}

/// `D(F_n) = (2x + x^2)^n + x(1+x)^{2n}`
pub fn d_friendship(n: usize) -> Result<Poly> {
    positive(n, "blade count")?;
    let blades = Poly::from_i64s(&[0, 2, 1]).pow(u32_of(n));
    Ok(&blades + &Poly::binomial_power(2 * n).shift(1))
}

/// `D(K_1 + P_3) = x^4 + 4x^3 + 6x^2 + 2x`, the block of `H_{2n}`.
fn h_block() -> Poly {
    Poly::from_i64s(&[0, 2, 6, 4, 1])
}

/// `D(H_{2n}) = (x^4 + 4x^3 + 6x^2 + 2x)^n` for `n >= 1`.
pub fn d_h_even(n: usize) -> Result<Poly> {
    positive(n, "block count")?;
    Ok(h_block().pow(u32_of(n)))
}

/// `D(H_{2n+1}) = (x^3 + 3x^2 + x)(x^4 + 4x^3 + 6x^2 + 2x)^n` for `n >= 0`;
/// `H_1` is the star on three vertices.
pub fn d_h_odd(n: usize) -> Result<Poly> {
    Ok(&Poly::from_i64s(&[0, 1, 3, 1]) * &h_block().pow(u32_of(n)))
}

/// The subgraph `H*` for one part: `K_{size}` followed by a copy of `h`, with
/// every clique vertex joined to every vertex of `u`.
pub fn attached_factor(size: usize, h: &Graph, u: &[usize]) -> Result<Graph> {
    positive(size, "clique size")?;
    let k = family::complete(size);
    let all: Vec<usize> = (0..size).collect();
    let cover = CliqueCover::validate(&k, &[all])?;
    clique_cover_product(&k, &cover, h, u)
}

/// `∏_i D(H*_i)` for arbitrary `U ⊆ V(H)`, each factor by enumeration.
pub fn d_clique_cover_product_factors(
    cover: &CliqueCover,
    h: &Graph,
    u: &[usize],
    bf: &BruteForce,
) -> Result<Poly> {
    let factors = cover
        .sizes()
        .par_iter()
        .map(|&ni| bf.polynomial(&attached_factor(ni, h, u)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(factors.into_iter().product())
}
