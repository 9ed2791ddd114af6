//! The immutable graph value type and its set-algebra primitives.

use serde::{Deserialize, Serialize};

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::scalar::Scalar;

/// Simple undirected graph on `0..n` with one bitset row per vertex.
///
/// Rows are symmetric, loop-free and clear above `n`; every constructor
/// maintains this, and no public method mutates a graph in place.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Edge-list interchange form: `{"n": 5, "edges": [[0,1], ...]}` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    /// Normalises orientation and order, drops duplicates.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(EdgeList { n, edges: out })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![VertexSet::new(); n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        make_graph(&EdgeList::new(n, edges.iter().copied())?)
    }

    /// Builds a graph from neighbourhood rows; rows are symmetrised and
    /// masked, loops dropped. Crate-internal because callers must already
    /// hold a consistent adjacency.
    pub(crate) fn from_rows(n: usize, mut adj: Vec<VertexSet>) -> Self {
        debug_assert_eq!(adj.len(), n);
        let mask = VertexSet::full(n);
        for (v, row) in adj.iter_mut().enumerate() {
            *row &= mask;
            row.remove(v);
        }
        let g = Graph { n, adj };
        debug_assert!(g.is_symmetric());
        g
    }

    fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| self.adj[u].iter().all(|v| self.adj[v].contains(u)))
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = VertexSet::full(n);
        Ok(Graph::from_rows(n, vec![full; n]))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = if n >= 3 { (0..n).map(|i| (i, (i + 1) % n)).collect() } else { Vec::new() };
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> EdgeList {
        EdgeList { n: self.n, edges: self.edges().collect() }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match (*s - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Graph::from_rows(self.n, self.adj.iter().map(|&row| full - row).collect())
    }

    /// Copy with the edge `{u, v}` added (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let mut g = self.clone();
        g.add_edge(u, v);
        Ok(g)
    }

    /// Copy with the edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.remove_edge(u, v);
        Ok(g)
    }

    /// Removes `v`; vertices above it shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Subgraph induced on `vertices`; position `i` in the slice becomes vertex `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = VertexSet::new();
        for &v in vertices {
            self.check_vertex(v)?;
            if seen.contains(v) {
                return Err(Error::RepeatedVertex(v));
            }
            seen.insert(v);
        }
        let m = vertices.len();
        let mut g = Graph::empty(m)?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced on a vertex set, in ascending vertex order.
    pub fn induced_on_set(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        self.induced_subgraph(&s.to_vec())
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in &frontier {
                    next |= self.adj[v];
                }
                frontier = next - comp;
                comp |= next;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    /// True iff the graph has at most one component (so vacuously for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `Some(k)` iff every vertex has degree `k`. The empty graph has no degree.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// Two-colouring by BFS layers.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None::<bool>; self.n];
        for comp in self.components() {
            let s = comp.first().unwrap();
            side[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Triangles counted by neighbourhood intersections, each once.
    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|(u, v)| {
                let above: VertexSet = (v + 1..self.n).collect();
                (self.adj[u] & self.adj[v] & above).len()
            })
            .sum()
    }

    /// Triangle count through `tr(A³)/6`; the cross-check path.
    pub fn triangle_count_by_trace(&self) -> usize {
        let a = self.adjacency_matrix::<i64>();
        ((&(&a * &a) * &a).trace() / 6) as usize
    }

    /// First triangle in lexicographic order, if any.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        self.edges().find_map(|(u, v)| {
            let common = self.adj[u] & self.adj[v];
            common.iter().find(|&w| w > v).map(|w| [u, v, w])
        })
    }

    pub fn adjacency_matrix<T: Scalar>(&self) -> Matrix<T> {
        Matrix::from_fn(self.n, |i, j| if self.has_edge(i, j) { T::one() } else { T::zero() })
    }

    /// `σ·g`: vertex `v` of `self` becomes vertex `σ(v)`.
    pub fn relabel(&self, sigma: &Permutation) -> Graph {
        assert_eq!(sigma.len(), self.n, "permutation size must match graph order");
        let mut rows = vec![VertexSet::new(); self.n];
        for u in 0..self.n {
            rows[sigma.apply(u)] = self.adj[u].iter().map(|v| sigma.apply(v)).collect();
        }
        Graph::from_rows(self.n, rows)
    }

    /// True iff `sigma` maps edges onto edges.
    pub fn is_automorphism(&self, sigma: &Permutation) -> bool {
        sigma.len() == self.n && self.relabel(sigma) == *self
    }

    /// True iff `sigma: self -> other` is an isomorphism.
    pub fn is_isomorphism_to(&self, other: &Graph, sigma: &Permutation) -> bool {
        self.n == other.n && sigma.len() == self.n && self.relabel(sigma) == *other
    }

    /// True iff every pair in `s` is adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| (*s - VertexSet::singleton(v)).is_subset(&self.adj[v]))
    }
}

pub fn make_graph(edges: &EdgeList) -> Result<Graph> {
    let n = edges.n;
    let mut g = Graph::empty(n)?;
    for &(u, v) in &edges.edges {
        if u == v {
            return Err(Error::Loop(u));
        }
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        g.add_edge(u, v);
    }
    Ok(g)
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.edge_list().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let el = EdgeList::deserialize(d)?;
        make_graph(&el).map_err(serde::de::Error::custom)
    }
}
