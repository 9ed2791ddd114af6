//! Growing a minimal prime graph by one vertex: generation sites, the two
//! necessary conditions on them, clique generation, and site classification.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::cliques::{all_cliques, is_maximal_clique};
use crate::coloring::{three_coloring_avoiding, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::is_minimal_prime_graph;

/// Largest graph [`enumerate_generation_sites`] will scan.
pub const SITE_LIMIT: usize = 20;

/// Adds vertex `n` adjacent to exactly `u`.
pub fn attach_vertex(g: &Graph, u: &VertexSet) -> Result<Graph> {
    g.check_set(u)?;
    let n = g.n();
    let mut out = Graph::empty(n + 1)?;
    for (a, b) in g.edges() {
        out.add_edge(a, b);
    }
    for v in u {
        out.add_edge(n, v);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationSite {
    pub site: Vec<usize>,
    /// `V \ site`.
    pub complement_set: Vec<usize>,
    pub generated: Graph,
}

fn require_minimal(g: &Graph) -> Result<()> {
    if is_minimal_prime_graph(g) {
        Ok(())
    } else {
        Err(Error::NotMinimal)
    }
}

/// True iff attaching a vertex at `u` gives a minimal prime graph.
/// `g` must itself be minimal.
pub fn is_generation_site(g: &Graph, u: &VertexSet) -> Result<bool> {
    require_minimal(g)?;
    Ok(is_minimal_prime_graph(&attach_vertex(g, u)?))
}

/// All generation sites of a minimal prime graph, sorted by site.
///
/// The complement `K = V \ U` of any site is a clique of `g` (the new vertex
/// would otherwise close a triangle in the complement), so the scan runs over
/// cliques instead of all `2^n` subsets.
pub fn enumerate_generation_sites(g: &Graph) -> Result<Vec<GenerationSite>> {
    if g.n() > SITE_LIMIT {
        return Err(Error::TooManyVertices { n: g.n(), max: SITE_LIMIT });
    }
    require_minimal(g)?;
    let all = g.vertices();
    let mut sites = Vec::new();
    for k in all_cliques(g) {
        let u = all - k;
        let generated = attach_vertex(g, &u)?;
        if is_minimal_prime_graph(&generated) {
            sites.push(GenerationSite { site: u.to_vec(), complement_set: k.to_vec(), generated });
        }
    }
    sites.sort_by(|a, b| a.site.cmp(&b.site));
    Ok(sites)
}

/// A 3-colouring of the complement of `g` using at most two colours on `k`.
///
/// Colours are interchangeable, so it suffices to search for one in which `k`
/// avoids a single fixed colour.
pub fn two_colored_clique_coloring(g: &Graph, k: &VertexSet) -> Option<Coloring> {
    three_coloring_avoiding(&g.complement(), k, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaChecks {
    /// Some 3-colouring of the complement colours `K` with at most two colours.
    pub two_colorable_complement_k: bool,
    /// `K` is a clique of `g`.
    pub k_is_clique: bool,
}

/// The two necessary conditions every generation site satisfies, for `K = V \ u`.
pub fn lemma_checks(g: &Graph, u: &VertexSet) -> Result<LemmaChecks> {
    g.check_set(u)?;
    let k = g.vertices() - *u;
    Ok(LemmaChecks {
        two_colorable_complement_k: two_colored_clique_coloring(g, &k).is_some(),
        k_is_clique: g.is_clique(&k),
    })
}

/// Attaches a vertex adjacent to everything outside the maximal clique `k`.
///
/// When `g` is a minimal prime graph and some 3-colouring of its complement
/// puts at most two colours on `k`, the result is again minimal.
pub fn clique_generate(g: &Graph, k: &VertexSet) -> Result<Graph> {
    g.check_set(k)?;
    if !is_maximal_clique(g, k) {
        return Err(Error::NotMaximalClique);
    }
    if two_colored_clique_coloring(g, k).is_none() {
        return Err(Error::NoTwoColoredClique);
    }
    attach_vertex(g, &(g.vertices() - *k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SiteKind {
    VertexDuplication,
    CliqueGeneration,
    Both,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteClassification {
    /// `U = N[v]` for some vertex `v`.
    pub is_vertex_duplication: bool,
    /// `K = V \ U` is a maximal clique, two-coloured by some 3-colouring of the complement.
    pub is_clique_generation: bool,
    pub kind: SiteKind,
    /// The smallest `v` with `U = N[v]`, if any.
    pub twin_of: Option<usize>,
}

fn classify_unchecked(g: &Graph, u: &VertexSet) -> SiteClassification {
    let twin_of = (0..g.n()).find(|&v| g.closed_neighbors(v) == *u);
    let k = g.vertices() - *u;
    let cg = is_maximal_clique(g, &k) && two_colored_clique_coloring(g, &k).is_some();
    let vd = twin_of.is_some();
    let kind = match (vd, cg) {
        (true, true) => SiteKind::Both,
        (true, false) => SiteKind::VertexDuplication,
        (false, true) => SiteKind::CliqueGeneration,
        (false, false) => SiteKind::Other,
    };
    SiteClassification { is_vertex_duplication: vd, is_clique_generation: cg, kind, twin_of }
}

/// Classifies a generation site by the generation methods it satisfies.
pub fn classify_site(g: &Graph, u: &VertexSet) -> Result<SiteClassification> {
    if !is_generation_site(g, u)? {
        return Err(Error::NotGenerationSite);
    }
    Ok(classify_unchecked(g, u))
}

/// Sites with their classifications, for census output.
pub fn site_census(g: &Graph) -> Result<Vec<(GenerationSite, SiteClassification)>> {
    let sites = enumerate_generation_sites(g)?;
    Ok(sites
        .into_iter()
        .map(|s| {
            let u: VertexSet = s.site.iter().copied().collect();
            let c = classify_unchecked(g, &u);
            (s, c)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::cycle(5).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn attach_examples() {
        let g = attach_vertex(&c5(), &set(&[0, 1, 4])).unwrap();
        assert_eq!(g, crate::reseminant::duplicate_vertex(&c5(), 0).unwrap());
        let iso = attach_vertex(&c5(), &VertexSet::new()).unwrap();
        assert_eq!((iso.n(), iso.degree(5)), (6, 0));
        assert!(attach_vertex(&c5(), &set(&[5])).is_err());
    }

    #[test]
    fn c5_sites() {
        assert!(is_generation_site(&c5(), &set(&[0, 1, 4])).unwrap());
        assert!(!is_generation_site(&c5(), &VertexSet::new()).unwrap());
        let lc = lemma_checks(&c5(), &set(&[0, 1])).unwrap();
        assert!(!lc.k_is_clique);
        assert!(!is_generation_site(&c5(), &set(&[0, 1])).unwrap());
        assert!(matches!(is_generation_site(&Graph::path(4).unwrap(), &VertexSet::new()), Err(Error::NotMinimal)));
    }

    #[test]
    fn c5_clique_generation_is_duplication() {
        let g = clique_generate(&c5(), &set(&[3, 4])).unwrap();
        assert_eq!(g.neighbors(5).to_vec(), vec![0, 1, 2]);
        assert_eq!(g.neighbors(5) | VertexSet::singleton(5), g.closed_neighbors(1));
        assert!(is_minimal_prime_graph(&g));
        assert!(matches!(clique_generate(&c5(), &set(&[3])), Err(Error::NotMaximalClique)));
    }

    #[test]
    fn c5_classify() {
        let c = classify_site(&c5(), &set(&[0, 1, 4])).unwrap();
        assert_eq!(c.kind, SiteKind::Both);
        assert_eq!(c.twin_of, Some(0));
        assert!(matches!(classify_site(&c5(), &set(&[0, 1])), Err(Error::NotGenerationSite)));
    }
}
