//! Vertex duplication, true-twin partitions, base graphs, and the linear
//! model of duplication over the 5-cycle.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::RationalMatrix;

/// Adds vertex `n` adjacent to exactly `N[v]`, making it a true twin of `v`.
pub fn duplicate_vertex(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    crate::generation::attach_vertex(g, &g.closed_neighbors(v))
}

/// Partition of the vertices into classes of equal closed neighbourhood,
/// ordered by smallest member; members ascend within each class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPartition {
    pub classes: Vec<Vec<usize>>,
}

impl TwinPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of every vertex.
    pub fn class_index(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                idx[v] = i;
            }
        }
        idx
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let mut classes: Vec<(VertexSet, Vec<usize>)> = Vec::new();
    for v in 0..g.n() {
        let key = g.closed_neighbors(v);
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(v),
            None => classes.push((key, vec![v])),
        }
    }
    TwinPartition { classes: classes.into_iter().map(|(_, m)| m).collect() }
}

/// Quotient by true twins: the subgraph induced on each class's smallest member.
pub fn base_graph(g: &Graph) -> Graph {
    g.induced_subgraph(&twin_partition(g).representatives())
        .expect("representatives are distinct vertices")
}

pub fn is_base_graph(g: &Graph) -> bool {
    twin_partition(g).len() == g.n()
}

/// Duplication multiplicities, one per base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DuplicationVector(pub Vec<usize>);

impl DuplicationVector {
    pub fn base_n(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl std::str::FromStr for DuplicationVector {
    type Err = String;

    /// Comma-separated naturals, e.g. `1,0,0,0,0`.
    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(DuplicationVector)
    }
}

/// `Adjacency(base) + Identity`: row `i` lists the classes whose duplication
/// raises the degree of class `i` by one.
pub fn duplication_matrix<T: Scalar>(base: &Graph) -> Matrix<T> {
    &base.adjacency_matrix::<T>() + &Matrix::identity(base.n())
}

/// Duplicates base vertex `i` exactly `w[i]` times, in ascending `i`.
///
/// The result keeps the base on `0..n`; the copies of vertex `i` follow, in
/// blocks: copies of 0 first, then copies of 1, and so on.
pub fn build_reseminant(base: &Graph, w: &DuplicationVector) -> Result<Graph> {
    if w.base_n() != base.n() {
        return Err(Error::LengthMismatch { expected: base.n(), got: w.base_n() });
    }
    let total = base.n() + w.total();
    if total > crate::bitset::MAX_VERTICES {
        return Err(Error::TooManyVertices { n: total, max: crate::bitset::MAX_VERTICES });
    }
    let mut g = base.clone();
    for (i, &times) in w.0.iter().enumerate() {
        for _ in 0..times {
            g = duplicate_vertex(&g, i)?;
        }
    }
    Ok(g)
}

/// Per-class degrees predicted by the linear model: `(A + I)·w + deg(base)`.
pub fn class_degree_vector(base: &Graph, w: &DuplicationVector) -> Result<Vec<usize>> {
    if w.base_n() != base.n() {
        return Err(Error::LengthMismatch { expected: base.n(), got: w.base_n() });
    }
    let a = duplication_matrix::<i64>(base);
    let wi: Vec<i64> = w.0.iter().map(|&x| x as i64).collect();
    Ok(a.mul_vec(&wi).into_iter().enumerate().map(|(i, d)| d as usize + base.degree(i)).collect())
}

fn c5() -> Graph {
    Graph::cycle(5).expect("C5")
}

fn require_c5(w: &DuplicationVector) -> Result<()> {
    if w.base_n() == 5 {
        Ok(())
    } else {
        Err(Error::NotC5Model)
    }
}

/// `v = A·w + 2·1` over the 5-cycle.
pub fn degree_vector(w: &DuplicationVector) -> Result<Vec<usize>> {
    require_c5(w)?;
    class_degree_vector(&c5(), w)
}

/// Solves `A·w = v − 2·1` exactly over the 5-cycle model. `A` has
/// determinant 3, so the solution is unique but need not be integral.
pub fn multiplicities_for_degrees(v: &[i64]) -> Result<Vec<Rational64>> {
    if v.len() != 5 {
        return Err(Error::NotC5Model);
    }
    let a: RationalMatrix = duplication_matrix(&c5());
    let rhs: Vec<Rational64> = v.iter().map(|&d| Rational64::from_integer(d - 2)).collect();
    Ok(a.solve(&rhs).expect("duplication matrix of C5 is nonsingular"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityVerdict {
    pub regular: bool,
    /// Common degree `k = 2 + 3h` when regular.
    pub k: Option<usize>,
    /// Common multiplicity `h` when regular.
    pub h: Option<usize>,
    /// Vertex count of the built graph (`5 + 5h` when regular).
    pub n: usize,
}

/// Regular iff `w` is constant `h` (including `h = 0`, the 5-cycle itself).
pub fn regular_reseminant_verdict(w: &DuplicationVector) -> Result<RegularityVerdict> {
    let v = degree_vector(w)?;
    let n = 5 + w.total();
    if v.windows(2).all(|p| p[0] == p[1]) {
        let h = w.0[0];
        debug_assert!(w.is_constant() && v[0] == 2 + 3 * h && n == 5 + 5 * h);
        Ok(RegularityVerdict { regular: true, k: Some(v[0]), h: Some(h), n })
    } else {
        Ok(RegularityVerdict { regular: false, k: None, h: None, n })
    }
}
