//! The circulant family `G(n,k)`: vertices `0..n`, with `i ~ j` whenever the
//! cyclic difference lies in `{k, ..., 2k-1}` (in either direction).
//!
//! For `n >= 5`, `n ≡ 0, 5 (mod 6)` and `k = ⌊(n+2)/6⌋` the graph is
//! triangle-free, `2k`-regular and 3-colourable by three repeating blocks of
//! length `k`; its complement is a minimal prime graph with no true twins.

use serde::{Deserialize, Serialize};

use crate::coloring::{chromatic_number, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{check_minimal_prime_graph, is_minimal_prime_graph, MinimalityReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantSpec {
    pub n: usize,
    pub k: usize,
}

impl CirculantSpec {
    /// Arbitrary parameters; `n >= 1`, `k >= 1`.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 || n > crate::bitset::MAX_VERTICES {
            return Err(Error::InvalidCirculant { n, k });
        }
        Ok(CirculantSpec { n, k })
    }

    /// The family member on `n` vertices, `k = ⌊(n+2)/6⌋`.
    pub fn family(n: usize) -> Result<Self> {
        let spec = CirculantSpec::new(n, ((n + 2) / 6).max(1))?;
        if !spec.in_family() {
            return Err(Error::OutsideFamily { n, k: spec.k });
        }
        Ok(spec)
    }

    pub fn in_family(&self) -> bool {
        self.n >= 5 && matches!(self.n % 6, 0 | 5) && self.k == (self.n + 2) / 6
    }

    pub fn differences(&self) -> std::ops::Range<usize> {
        self.k..2 * self.k
    }

    fn require_family(&self) -> Result<()> {
        if self.in_family() {
            Ok(())
        } else {
            Err(Error::OutsideFamily { n: self.n, k: self.k })
        }
    }

    /// Offsets `m` for which adding `{0, m}` to `G(n,k)` must close a
    /// triangle: `1 <= m < k` and `2k <= m <= 3k`.
    pub fn closing_offsets(&self) -> Vec<usize> {
        (1..self.k).chain(2 * self.k..=3 * self.k).filter(|&m| m < self.n).collect()
    }
}

pub fn g_circulant(spec: CirculantSpec) -> Graph {
    let CirculantSpec { n, .. } = spec;
    let diffs = spec.differences();
    let mut g = Graph::empty(n).expect("order checked by CirculantSpec");
    for i in 0..n {
        for j in i + 1..n {
            let d = j - i;
            if diffs.contains(&d) || diffs.contains(&(n - d)) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Blocks of length `k` coloured 0, 1, 2, 0, 1, 2 (the last block one
/// vertex short when `n = 6k - 1`).
pub fn block_coloring(spec: CirculantSpec) -> Result<Coloring> {
    spec.require_family()?;
    Ok(Coloring { colors: (0..spec.n).map(|v| (v / spec.k) % 3).collect(), palette: 3 })
}

/// Minimality report for the complement of a family member.
pub fn family_mpg_check(spec: CirculantSpec) -> Result<MinimalityReport> {
    spec.require_family()?;
    Ok(check_minimal_prime_graph(&g_circulant(spec).complement()))
}

/// Optional check: the family member has chromatic number exactly 3.
pub fn has_chromatic_number_three(spec: CirculantSpec) -> Result<bool> {
    spec.require_family()?;
    Ok(chromatic_number(&g_circulant(spec))? == 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperBaseReport {
    pub is_super_base: bool,
    /// `(v, minimal)` for each single-vertex deletion.
    pub deletions: Vec<(usize, bool)>,
}

/// A minimal prime graph is super-base when deleting any single vertex never
/// leaves a minimal prime graph, so it cannot be generated from one.
pub fn is_super_base(g: &Graph) -> Result<SuperBaseReport> {
    if !is_minimal_prime_graph(g) {
        return Err(Error::NotMinimal);
    }
    let deletions: Vec<(usize, bool)> =
        (0..g.n()).map(|v| (v, is_minimal_prime_graph(&g.delete_vertex(v).expect("in range")))).collect();
    Ok(SuperBaseReport { is_super_base: deletions.iter().all(|&(_, m)| !m), deletions })
}
