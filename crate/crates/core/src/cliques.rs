use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Every clique of `g`, the empty set included, in lexicographic order of
/// their sorted member lists.
pub fn all_cliques(g: &Graph) -> Vec<VertexSet> {
    fn extend(g: &Graph, clique: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(clique);
        for v in &cand {
            let mut next = clique;
            next.insert(v);
            let above: VertexSet = (v + 1..g.n()).collect();
            extend(g, next, cand & g.neighbors(v) & above, out);
        }
    }
    let mut out = Vec::new();
    extend(g, VertexSet::new(), g.vertices(), &mut out);
    out
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting, sorted.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn bk(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (p & g.neighbors(u)).len()).unwrap();
        for v in &(p - g.neighbors(pivot)) {
            let mut r2 = r;
            r2.insert(v);
            bk(g, r2, p & g.neighbors(v), x & g.neighbors(v), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    bk(g, VertexSet::new(), g.vertices(), VertexSet::new(), &mut out);
    out.sort_by_key(|s| s.to_vec());
    out
}

/// A clique no outside vertex is adjacent to all of.
pub fn is_maximal_clique(g: &Graph, s: &VertexSet) -> bool {
    if !g.is_clique(s) {
        return false;
    }
    let common = s.iter().fold(g.vertices(), |acc, v| acc & g.neighbors(v));
    (common - *s).is_empty()
}
