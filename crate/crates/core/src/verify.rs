//! The defining predicates: triangle-free / 3-colourable complements, solvable
//! prime graphs, and minimal prime graphs with certificates.

use serde::{Deserialize, Serialize};

use crate::coloring::{find_3_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn is_triangle_free(g: &Graph) -> bool {
    g.find_triangle().is_none()
}

/// A graph whose complement is triangle-free and 3-colourable.
pub fn is_solvable_prime_graph(g: &Graph) -> bool {
    let h = g.complement();
    is_triangle_free(&h) && find_3_coloring(&h).is_some()
}

/// Certificate attached to a [`MinimalityReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A triangle, in the complement of the graph in question.
    Triangle([usize; 3]),
    /// A proper 3-colouring of that complement.
    Coloring(Coloring),
}

/// Why a graph is not a minimal prime graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// The complement has a triangle (witness: the triangle).
    ComplementHasTriangle,
    /// The complement has no 3-colouring.
    ComplementNotThreeColorable,
    TooFewVertices,
    Disconnected,
    /// Deleting `failing_edge` keeps the complement triangle-free and
    /// 3-colourable (witness: a 3-colouring of the enlarged complement).
    EdgeRemovable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub is_solvable: bool,
    pub is_minimal: bool,
    pub failure_kind: Option<FailureKind>,
    pub failing_edge: Option<(usize, usize)>,
    pub witness: Option<Witness>,
}

/// What deleting one edge of `g` does to its complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeDeletion {
    /// The complement gains this triangle through the new edge.
    CreatesTriangle([usize; 3]),
    /// The complement stays triangle-free but loses 3-colourability.
    BreaksColorability,
    /// The complement stays triangle-free and 3-colourable.
    Removable(Coloring),
}

/// Effect of adding the non-edge `{u, v}` to a triangle-free graph `h`.
///
/// `hint` is a 3-colouring of `h`; if it already separates `u` and `v` it
/// certifies colourability without a search.
fn add_to_complement(h: &Graph, u: usize, v: usize, hint: Option<&Coloring>) -> EdgeDeletion {
    if let Some(w) = (h.neighbors(u) & h.neighbors(v)).first() {
        let mut t = [u, v, w];
        t.sort_unstable();
        return EdgeDeletion::CreatesTriangle(t);
    }
    if let Some(c) = hint.filter(|c| c.colors[u] != c.colors[v]) {
        return EdgeDeletion::Removable(Coloring { colors: c.colors.clone(), palette: 3 });
    }
    let mut h2 = h.clone();
    h2.add_edge(u, v);
    match find_3_coloring(&h2) {
        Some(c) => EdgeDeletion::Removable(c),
        None => EdgeDeletion::BreaksColorability,
    }
}

/// Deletes the edge `{u, v}` of `g` and reports what happens to the
/// complement. Assumes the complement of `g` is triangle-free; otherwise the
/// reported triangle may be pre-existing rather than created.
pub fn edge_deletion_effect(g: &Graph, u: usize, v: usize) -> Result<EdgeDeletion> {
    if !g.has_edge(u, v) {
        return Err(Error::Precondition("edge not present in graph"));
    }
    let h = g.complement();
    Ok(add_to_complement(&h, u, v, None))
}

/// Full minimal-prime-graph check with certificates.
///
/// Minimal means: connected, at least two vertices, solvable, and every edge
/// is needed, i.e. deleting it makes the complement contain a triangle or lose
/// 3-colourability (at least one of the two; the properties need not both
/// fail). Edges are tried in sorted order and the first removable one is
/// reported.
pub fn check_minimal_prime_graph(g: &Graph) -> MinimalityReport {
    let h = g.complement();
    let fail = |is_solvable, kind, edge, witness| MinimalityReport {
        is_solvable,
        is_minimal: false,
        failure_kind: Some(kind),
        failing_edge: edge,
        witness,
    };
    if let Some(t) = h.find_triangle() {
        return fail(false, FailureKind::ComplementHasTriangle, None, Some(Witness::Triangle(t)));
    }
    let Some(base) = find_3_coloring(&h) else {
        return fail(false, FailureKind::ComplementNotThreeColorable, None, None);
    };
    if g.n() < 2 {
        return fail(true, FailureKind::TooFewVertices, None, None);
    }
    if !g.is_connected() {
        return fail(true, FailureKind::Disconnected, None, None);
    }
    for (u, v) in g.edges() {
        if let EdgeDeletion::Removable(c) = add_to_complement(&h, u, v, Some(&base)) {
            return fail(true, FailureKind::EdgeRemovable, Some((u, v)), Some(Witness::Coloring(c)));
        }
    }
    MinimalityReport { is_solvable: true, is_minimal: true, failure_kind: None, failing_edge: None, witness: None }
}

pub fn is_minimal_prime_graph(g: &Graph) -> bool {
    check_minimal_prime_graph(g).is_minimal
}

/// Non-edges of a triangle-free 3-colourable `h` whose addition keeps it so.
pub fn addable_edges(h: &Graph) -> Result<Vec<(usize, usize)>> {
    if !is_triangle_free(h) {
        return Err(Error::Precondition("graph must be triangle-free"));
    }
    let base = find_3_coloring(h).ok_or(Error::Precondition("graph must be 3-colorable"))?;
    Ok(h.complement()
        .edges()
        .filter(|&(u, v)| matches!(add_to_complement(h, u, v, Some(&base)), EdgeDeletion::Removable(_)))
        .collect())
}
