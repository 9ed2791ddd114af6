//! Direct, Cartesian and strong products and their complementary variants.
//!
//! All products index vertex `(u, v)` as `u·|V(h)| + v`, so the strong
//! product is literally the union of the direct and Cartesian edge sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::reseminant::{build_reseminant, DuplicationVector};
use crate::verify::{is_minimal_prime_graph, is_solvable_prime_graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Direct,
    Cartesian,
    Strong,
    /// `complement(complement(g) × complement(h))`
    ComplementaryDirect,
    /// `complement(complement(g) □ complement(h))`
    ComplementaryCartesian,
}

impl ProductKind {
    pub const ALL: [ProductKind; 5] = [
        ProductKind::Direct,
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::ComplementaryDirect,
        ProductKind::ComplementaryCartesian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Direct => "direct",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::ComplementaryDirect => "cdirect",
            ProductKind::ComplementaryCartesian => "ccartesian",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownProductKind(s.to_string()))
    }
}

fn product_with(g: &Graph, h: &Graph, adjacent: impl Fn(usize, usize, usize, usize) -> bool) -> Result<Graph> {
    let (a, b) = (g.n(), h.n());
    let n = a * b;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let mut out = Graph::empty(n)?;
    for x in 0..n {
        for y in x + 1..n {
            if adjacent(x / b, x % b, y / b, y % b) {
                out.add_edge(x, y);
            }
        }
    }
    Ok(out)
}

/// `(u,v) ~ (u',v')` iff `u ~ u'` and `v ~ v'`.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product_with(g, h, |u, v, u2, v2| g.has_edge(u, u2) && h.has_edge(v, v2))
}

/// `(u,v) ~ (u',v')` iff `u = u'` and `v ~ v'`, or `v = v'` and `u ~ u'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product_with(g, h, |u, v, u2, v2| (u == u2 && h.has_edge(v, v2)) || (v == v2 && g.has_edge(u, u2)))
}

/// Union of the direct and Cartesian edge sets.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product_with(g, h, |u, v, u2, v2| {
        (u == u2 || g.has_edge(u, u2)) && (v == v2 || h.has_edge(v, v2))
    })
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph> {
    match kind {
        ProductKind::Direct => direct_product(g, h),
        ProductKind::Cartesian => cartesian_product(g, h),
        ProductKind::Strong => strong_product(g, h),
        ProductKind::ComplementaryDirect => Ok(direct_product(&g.complement(), &h.complement())?.complement()),
        ProductKind::ComplementaryCartesian => {
            Ok(cartesian_product(&g.complement(), &h.complement())?.complement())
        }
    }
}

/// Left-associated product of a nonempty list of factors.
pub fn iterated_product(kind: ProductKind, gs: &[Graph]) -> Result<Graph> {
    let (first, rest) = gs.split_first().ok_or(Error::Precondition("at least one factor required"))?;
    rest.iter().try_fold(first.clone(), |acc, g| product(kind, &acc, g))
}

/// `t`-fold complementary direct power of `g`, left-associated.
pub fn iterated_complementary_direct(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::Precondition("at least one factor required"));
    }
    iterated_product(ProductKind::ComplementaryDirect, &vec![g.clone(); t])
}

/// Executable form of "complementary products of solvable prime graphs are
/// solvable prime graphs".
pub fn check_product_preservation(kind: ProductKind, gs: &[Graph]) -> Result<bool> {
    if !matches!(kind, ProductKind::ComplementaryDirect | ProductKind::ComplementaryCartesian) {
        return Err(Error::NotComplementary(kind.to_string()));
    }
    if !gs.iter().all(is_solvable_prime_graph) {
        return Err(Error::NotSolvable);
    }
    Ok(is_solvable_prime_graph(&iterated_product(kind, gs)?))
}

/// The diagonal `{(u,u)}` of `g × g`, in ascending order; it induces a copy of `g`.
pub fn diagonal_embedding_witness(g: &Graph) -> Vec<usize> {
    (0..g.n()).map(|u| u * g.n() + u).collect()
}

/// An explicit isomorphism from `K_{m+1} ⊠ g` onto the graph obtained by
/// duplicating every vertex of `g` exactly `m` times.
///
/// `(0, j)` goes to `j`; `(i, j)` for `i >= 1` goes to the `i`-th copy of `j`,
/// which [`build_reseminant`] places at `n + j·m + (i − 1)`.
pub fn strong_duplication_iso(g: &Graph, m: usize) -> Result<Permutation> {
    let n = g.n();
    let total = (m + 1) * n;
    if total > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: total, max: MAX_VERTICES });
    }
    if !is_minimal_prime_graph(g) {
        return Err(Error::NotMinimal);
    }
    let strong = strong_product(&Graph::complete(m + 1)?, g)?;
    let dup = build_reseminant(g, &DuplicationVector(vec![m; n]))?;
    let images = (0..total)
        .map(|x| {
            let (i, j) = (x / n, x % n);
            if i == 0 {
                j
            } else {
                n + j * m + (i - 1)
            }
        })
        .collect();
    let psi = Permutation::from_images(images)?;
    if !strong.is_isomorphism_to(&dup, &psi) {
        return Err(Error::Precondition("duplication map failed to preserve edges"));
    }
    Ok(psi)
}
