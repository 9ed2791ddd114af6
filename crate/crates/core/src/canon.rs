//! Colour refinement, canonical labelling and isomorphism testing.
//!
//! The canonical form is found by individualisation-refinement: refine to an
//! equitable partition, individualise each vertex of the first non-singleton
//! cell in turn, recurse, and keep the lexicographically largest graph6 string
//! over all discrete leaves. Transposition-twins in a target cell give
//! identical subtrees, so only one of each is expanded.

use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::perm::Permutation;

/// Largest graph accepted by [`canonical_form`].
pub const CANON_LIMIT: usize = 64;

/// Certificate of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// graph6 bytes of the canonically relabelled graph.
    pub cert: Vec<u8>,
    /// Relabelling taking the source graph to the certificate graph.
    pub perm: Permutation,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        graph6::decode(std::str::from_utf8(&self.cert).expect("ASCII")).expect("valid certificate")
    }
}

/// Refines `colors` to the coarsest equitable partition below it.
///
/// Colours follow the "number of vertices in smaller cells" convention, so a
/// cell's colour is also its first position in the final ordering, and the
/// result is invariant under relabelling of the input.
pub fn refine(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut colors = rank(colors);
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&keys);
        // cells only ever split, so an unchanged ranking means stability
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut counts: BTreeMap<&K, usize> = BTreeMap::new();
    for k in keys {
        *counts.entry(k).or_default() += 1;
    }
    let mut start = BTreeMap::new();
    let mut acc = 0;
    for (k, c) in counts {
        start.insert(k, acc);
        acc += c;
    }
    keys.iter().map(|k| start[k]).collect()
}

fn is_discrete(colors: &[usize]) -> bool {
    let mut seen = vec![false; colors.len()];
    colors.iter().all(|&c| !std::mem::replace(&mut seen[c], true))
}

/// `(u v)` is an automorphism.
fn transposition_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighbors(u);
    let mut nv = g.neighbors(v);
    nu.remove(v);
    nv.remove(u);
    nu == nv
}

struct Best {
    cert: Vec<u8>,
    perm: Permutation,
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Best>) {
    let colors = refine(g, &colors);
    if is_discrete(&colors) {
        let perm = Permutation::from_images(colors).expect("discrete colouring is a bijection");
        let cert = graph6::encode(&g.relabel(&perm)).into_bytes();
        if best.as_ref().is_none_or(|b| cert > b.cert) {
            *best = Some(Best { cert, perm });
        }
        return;
    }
    // first non-singleton cell, i.e. the smallest colour held by >1 vertex
    let mut size = vec![0usize; colors.len()];
    for &c in &colors {
        size[c] += 1;
    }
    let target = (0..colors.len()).find(|&c| size[c] > 1).expect("non-discrete");
    let cell: Vec<usize> = (0..g.n()).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&t| transposition_twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next = colors.clone();
        for &u in &cell {
            if u != v {
                next[u] = target + 1;
            }
        }
        search(g, next, best);
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.n() > CANON_LIMIT {
        return Err(Error::TooManyVertices { n: g.n(), max: CANON_LIMIT });
    }
    let mut best = None;
    search(g, vec![0; g.n()], &mut best);
    let b = best.expect("search visits at least one leaf");
    Ok(CanonicalForm { cert: b.cert, perm: b.perm })
}

/// An isomorphism `a -> b` if one exists.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<Option<Permutation>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let (mut da, mut db) = (a.degree_sequence(), b.degree_sequence());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    let ca = canonical_form(a)?;
    let cb = canonical_form(b)?;
    if ca.cert != cb.cert {
        return Ok(None);
    }
    let witness = cb.perm.inverse().compose(&ca.perm);
    debug_assert!(a.is_isomorphism_to(b, &witness));
    Ok(Some(witness))
}

/// Cells of a colouring, in colour order.
pub fn cells(colors: &[usize]) -> Vec<VertexSet> {
    let mut by: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        by.entry(c).or_default().insert(v);
    }
    by.into_values().collect()
}
