//! Exact vertex colouring: a k-colourability decision by backtracking with
//! forward checking, and branch-and-bound chromatic numbers on top of it.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex limit for [`chromatic_number`].
pub const CHROMATIC_LIMIT: usize = 32;

/// A vertex colouring with colours `0..palette`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let palette = colors.iter().max().map_or(0, |&m| m + 1);
        Coloring { colors, palette }
    }

    /// One colour per vertex, all below `palette`, no monochromatic edge.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.palette)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Number of distinct colours appearing on `s`.
    pub fn colors_on(&self, s: &VertexSet) -> usize {
        let mut used = 0u64;
        for v in s {
            used |= 1 << self.colors[v];
        }
        used.count_ones() as usize
    }
}

struct Search<'a> {
    g: &'a Graph,
    domain: Vec<u64>,
    color: Vec<usize>,
    uncolored: VertexSet,
    /// Colours are interchangeable (no per-vertex restrictions), so a vertex
    /// never needs a colour more than one above the largest used so far.
    symmetric: bool,
}

impl Search<'_> {
    /// Smallest domain first; ties by most uncoloured neighbours, then index.
    fn pick(&self) -> usize {
        self.uncolored
            .iter()
            .min_by_key(|&v| {
                let d = self.domain[v].count_ones();
                let back = (self.g.neighbors(v) & self.uncolored).len();
                (d, usize::MAX - back, v)
            })
            .expect("called with uncoloured vertices")
    }

    fn run(&mut self, used: usize) -> bool {
        if self.uncolored.is_empty() {
            return true;
        }
        let v = self.pick();
        let mut dom = self.domain[v];
        if self.symmetric && used < 64 {
            dom &= (1u64 << (used + 1)) - 1;
        }
        self.uncolored.remove(v);
        let nbrs = self.g.neighbors(v) & self.uncolored;
        let mut touched = Vec::new();
        while dom != 0 {
            let c = dom.trailing_zeros() as usize;
            dom &= dom - 1;
            let bit = 1u64 << c;
            self.color[v] = c;
            touched.clear();
            let mut wiped = false;
            for u in &nbrs {
                if self.domain[u] & bit != 0 {
                    self.domain[u] &= !bit;
                    touched.push(u);
                    if self.domain[u] == 0 {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped && self.run(used.max(c + 1)) {
                return true;
            }
            for &u in &touched {
                self.domain[u] |= bit;
            }
        }
        self.uncolored.insert(v);
        self.color[v] = usize::MAX;
        false
    }
}

fn search(g: &Graph, k: usize, forbidden: &[(VertexSet, usize)]) -> Option<Coloring> {
    assert!(k <= 64, "palette limited to 64 colours");
    let n = g.n();
    if n == 0 {
        return Some(Coloring { colors: Vec::new(), palette: 0 });
    }
    if k == 0 {
        return None;
    }
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut domain = vec![all; n];
    for (set, c) in forbidden {
        for v in set {
            domain[v] &= !(1u64 << c);
        }
    }
    if domain.contains(&0) {
        return None;
    }
    let mut s = Search {
        g,
        domain,
        color: vec![usize::MAX; n],
        uncolored: g.vertices(),
        symmetric: forbidden.is_empty(),
    };
    s.run(0).then(|| Coloring::new(s.color))
}

/// A proper colouring with at most `k` colours, if one exists. Deterministic.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    search(g, k, &[])
}

pub fn find_3_coloring(g: &Graph) -> Option<Coloring> {
    k_coloring(g, 3)
}

/// A proper 3-colouring in which no vertex of `set` receives `color`.
pub fn three_coloring_avoiding(g: &Graph, set: &VertexSet, color: usize) -> Option<Coloring> {
    let c = search(g, 3, &[(*set, color)])?;
    // report the full palette of three even if fewer colours were needed
    Some(Coloring { palette: 3, ..c })
}

/// Greedy clique: repeatedly add the candidate with most neighbours among the
/// remaining candidates; best over all start vertices.
pub fn greedy_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::new();
    for start in 0..g.n() {
        let mut clique = VertexSet::singleton(start);
        let mut cand = g.neighbors(start);
        while !cand.is_empty() {
            let v = cand.iter().max_by_key(|&u| ((g.neighbors(u) & cand).len(), usize::MAX - u)).unwrap();
            clique.insert(v);
            cand &= g.neighbors(v);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// DSATUR greedy colouring; an upper bound on the chromatic number.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut left = g.vertices();
    while !left.is_empty() {
        let sat = |v: usize| {
            let mut seen = 0u128;
            for u in &g.neighbors(v) {
                if color[u] != usize::MAX {
                    seen |= 1 << color[u].min(127);
                }
            }
            seen
        };
        let v = left
            .iter()
            .max_by_key(|&v| (sat(v).count_ones(), (g.neighbors(v) & left).len(), usize::MAX - v))
            .unwrap();
        let seen = sat(v);
        color[v] = (!seen).trailing_zeros() as usize;
        left.remove(v);
    }
    Coloring::new(color)
}

/// Exact chromatic number for graphs up to [`CHROMATIC_LIMIT`] vertices.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with_limit(g, CHROMATIC_LIMIT).map(|(k, _)| k)
}

/// Exact chromatic number plus an optimal colouring.
///
/// Lower bound from a greedy clique, upper bound from DSATUR; palettes in
/// between are decided exactly, smallest first.
pub fn chromatic_number_with_limit(g: &Graph, limit: usize) -> Result<(usize, Coloring)> {
    if g.n() > limit.min(64) {
        return Err(Error::TooManyVertices { n: g.n(), max: limit.min(64) });
    }
    let upper = greedy_coloring(g);
    let lower = greedy_clique(g).len();
    for k in lower..upper.palette {
        if let Some(c) = k_coloring(g, k) {
            return Ok((k, c));
        }
    }
    Ok((upper.palette, upper))
}
