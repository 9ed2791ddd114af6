//! Automorphism groups of small graphs and their decomposition along the
//! true-twin partition.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::canon::refine;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::reseminant::{base_graph, build_reseminant, twin_partition, DuplicationVector};

pub const AUT_LIMIT: usize = 16;

/// Largest group [`aut_group`] will list.
pub const AUT_ORDER_LIMIT: usize = 1 << 22;

/// Every automorphism of `g`, each exactly once, in lexicographic order of
/// image sequences.
pub fn aut_group(g: &Graph) -> Result<Vec<Permutation>> {
    aut_group_with_limit(g, AUT_LIMIT)
}

pub fn aut_group_with_limit(g: &Graph, limit: usize) -> Result<Vec<Permutation>> {
    let n = g.n();
    if n > limit {
        return Err(Error::TooManyVertices { n, max: limit });
    }
    let colors = refine(g, &vec![0; n]);
    let mut search = AutSearch { g, colors: &colors, images: vec![usize::MAX; n], used: vec![false; n], out: Vec::new() };
    search.extend(0)?;
    Ok(search.out)
}

struct AutSearch<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    images: Vec<usize>,
    used: Vec<bool>,
    out: Vec<Permutation>,
}

impl AutSearch<'_> {
    fn extend(&mut self, v: usize) -> Result<()> {
        let n = self.g.n();
        if v == n {
            if self.out.len() == AUT_ORDER_LIMIT {
                return Err(Error::GroupTooLarge { max: AUT_ORDER_LIMIT });
            }
            self.out.push(Permutation::from_images(self.images.clone())?);
            return Ok(());
        }
        for u in 0..n {
            if self.used[u] || self.colors[u] != self.colors[v] {
                continue;
            }
            let consistent = (0..v).all(|w| self.g.has_edge(v, w) == self.g.has_edge(u, self.images[w]));
            if !consistent {
                continue;
            }
            self.images[v] = u;
            self.used[u] = true;
            self.extend(v + 1)?;
            self.used[u] = false;
        }
        self.images[v] = usize::MAX;
        Ok(())
    }
}

/// Checks closure, identity and inverses on an explicit list.
pub fn is_group(perms: &[Permutation]) -> bool {
    let Some(first) = perms.first() else {
        return false;
    };
    let set: HashSet<&Permutation> = perms.iter().collect();
    set.len() == perms.len()
        && set.contains(&Permutation::identity(first.len()))
        && perms.iter().all(|p| p.len() == first.len() && set.contains(&p.inverse()))
        && perms.iter().all(|a| perms.iter().all(|b| set.contains(&a.compose(b))))
}

/// Whether `sub` is closed under conjugation by every element of `group`.
pub fn is_normal_in(sub: &[Permutation], group: &[Permutation]) -> bool {
    let set: HashSet<&Permutation> = sub.iter().collect();
    group.iter().all(|g| {
        let inv = g.inverse();
        sub.iter().all(|h| set.contains(&g.compose(h).compose(&inv)))
    })
}

/// The automorphisms fixing every true-twin class setwise.
pub fn twin_kernel(g: &Graph, auts: &[Permutation]) -> Result<Vec<Permutation>> {
    let class = twin_partition(g).class_index(g.n());
    let kernel: Vec<Permutation> =
        auts.iter().filter(|s| (0..g.n()).all(|v| class[s.apply(v)] == class[v])).cloned().collect();
    if !is_normal_in(&kernel, auts) {
        return Err(Error::Precondition("twin kernel is not normal in the given automorphisms"));
    }
    Ok(kernel)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutReport {
    pub order: usize,
    pub kernel_order: usize,
    pub quotient_order: usize,
    pub twin_class_sizes: Vec<usize>,
    pub kernel_matches_twin_product: bool,
    pub quotient_embeds_in_base_aut: bool,
    pub base_aut_order: usize,
    /// Induced permutations of the base graph, one per coset of the kernel.
    pub quotient_elements: Vec<Permutation>,
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Computes Aut(g), the twin kernel H, and checks that `Aut(g)/H` embeds in
/// the automorphism group of the base graph.
pub fn decompose_aut(g: &Graph) -> Result<AutReport> {
    let auts = aut_group(g)?;
    let kernel = twin_kernel(g, &auts)?;
    let partition = twin_partition(g);
    let class = partition.class_index(g.n());
    let reps = partition.representatives();
    let base = base_graph(g);
    let base_auts = aut_group(&base)?;

    let induced: BTreeSet<Vec<usize>> =
        auts.iter().map(|s| reps.iter().map(|&r| class[s.apply(r)]).collect()).collect();
    let quotient_elements = induced.into_iter().map(Permutation::from_images).collect::<Result<Vec<_>>>()?;
    let quotient_order = auts.len() / kernel.len();
    let sizes = partition.sizes();
    Ok(AutReport {
        order: auts.len(),
        kernel_order: kernel.len(),
        quotient_order,
        kernel_matches_twin_product: kernel.len() == sizes.iter().map(|&h| factorial(h)).product::<usize>(),
        quotient_embeds_in_base_aut: quotient_elements.len() == quotient_order
            && auts.len() % kernel.len() == 0
            && quotient_elements.iter().all(|p| base.is_automorphism(p))
            && base_auts.len() % quotient_order == 0,
        twin_class_sizes: sizes,
        base_aut_order: base_auts.len(),
        quotient_elements,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum C5QuotientKind {
    /// Quotient is all of D5.
    D5,
    /// Quotient is trivial; the kernel is the whole group.
    KernelOnly,
    /// Quotient is generated by one reflection.
    Z2,
}

impl C5QuotientKind {
    pub fn order(self) -> usize {
        match self {
            C5QuotientKind::D5 => 10,
            C5QuotientKind::KernelOnly => 1,
            C5QuotientKind::Z2 => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5AutClassification {
    pub predicted: C5QuotientKind,
    pub measured_quotient_order: usize,
    /// Whether some induced base permutation is a reflection of the 5-cycle.
    pub measured_has_reflection: bool,
    pub agrees: bool,
}

/// The reflection `i ↦ 2a − i (mod 5)` of the 5-cycle, if one preserves `w`.
pub fn preserving_reflection(w: &[usize]) -> Option<usize> {
    (0..5).find(|&a| (0..5).all(|i| w[i] == w[(2 * a + 5 - i) % 5]))
}

fn is_reflection(p: &Permutation) -> bool {
    !p.is_identity() && p.compose(p).is_identity()
}

/// Predicts the quotient of Aut(G) by its twin kernel from `w` alone and
/// compares it with the measured decomposition.
pub fn classify_c5_reseminant_aut(w: &DuplicationVector) -> Result<C5AutClassification> {
    if w.base_n() != 5 {
        return Err(Error::NotC5Model);
    }
    let predicted = if w.is_constant() {
        C5QuotientKind::D5
    } else if preserving_reflection(&w.0).is_some() {
        C5QuotientKind::Z2
    } else {
        C5QuotientKind::KernelOnly
    };
    let g = build_reseminant(&Graph::cycle(5)?, w)?;
    let report = decompose_aut(&g)?;
    let measured_has_reflection = report.quotient_elements.iter().any(is_reflection);
    let agrees = report.quotient_order == predicted.order()
        && measured_has_reflection == (predicted != C5QuotientKind::KernelOnly);
    Ok(C5AutClassification {
        predicted,
        measured_quotient_order: report.quotient_order,
        measured_has_reflection,
        agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_dihedral() {
        let auts = aut_group(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(auts.len(), 10);
        assert!(is_group(&auts));
        let r = decompose_aut(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!((r.kernel_order, r.quotient_order), (1, 10));
    }

    #[test]
    fn small_groups() {
        assert_eq!(aut_group(&Graph::complete(4).unwrap()).unwrap().len(), 24);
        assert_eq!(aut_group(&Graph::path(4).unwrap()).unwrap().len(), 2);
        assert_eq!(aut_group(&Graph::empty(0).unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn limits() {
        assert!(matches!(aut_group(&Graph::cycle(17).unwrap()), Err(Error::TooManyVertices { .. })));
        assert!(matches!(aut_group(&Graph::empty(16).unwrap()), Err(Error::GroupTooLarge { .. })));
    }

    #[test]
    fn one_duplicate() {
        let g = build_reseminant(&Graph::cycle(5).unwrap(), &"1,0,0,0,0".parse().unwrap()).unwrap();
        let r = decompose_aut(&g).unwrap();
        assert_eq!((r.order, r.kernel_order, r.quotient_order), (4, 2, 2));
        assert!(r.kernel_matches_twin_product && r.quotient_embeds_in_base_aut);
    }

    #[test]
    fn reflections() {
        assert_eq!(preserving_reflection(&[1, 0, 0, 0, 0]), Some(0));
        assert_eq!(preserving_reflection(&[1, 2, 0, 0, 0]), None);
        assert_eq!(preserving_reflection(&[0, 1, 1, 0, 0]), Some(4));
    }
}
