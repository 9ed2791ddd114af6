//! Brute-force oracles. Deliberately naive and independent of the library's
//! search code; only `Graph` accessors are shared.
#![allow(dead_code)]

use mpg_core::{Graph, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn complement_adj(a: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    (0..n).map(|u| (0..n).map(|v| u != v && !a[u][v]).collect()).collect()
}

/// Tries all `3^n` assignments.
pub fn brute_three_colorable(a: &[Vec<bool>]) -> bool {
    let n = a.len();
    let total = 3usize.pow(n as u32);
    (0..total).any(|mut code| {
        let mut c = vec![0; n];
        for x in c.iter_mut() {
            *x = code % 3;
            code /= 3;
        }
        (0..n).all(|u| (u + 1..n).all(|v| !a[u][v] || c[u] != c[v]))
    })
}

pub fn brute_triangles(a: &[Vec<bool>]) -> usize {
    let n = a.len();
    let mut t = 0;
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if a[x][y] && a[y][z] && a[x][z] {
                    t += 1;
                }
            }
        }
    }
    t
}

pub fn brute_connected(a: &[Vec<bool>]) -> bool {
    let n = a.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if a[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn brute_solvable(a: &[Vec<bool>]) -> bool {
    let c = complement_adj(a);
    brute_triangles(&c) == 0 && brute_three_colorable(&c)
}

/// Minimal prime graph straight from the definition.
pub fn brute_minimal(a: &[Vec<bool>]) -> bool {
    let n = a.len();
    if n < 2 || !brute_connected(a) || !brute_solvable(a) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if a[u][v] {
                let mut b = a.to_vec();
                b[u][v] = false;
                b[v][u] = false;
                if brute_solvable(&b) {
                    return false;
                }
            }
        }
    }
    true
}

/// All permutations of `0..n` in lexicographic order (Heap-free, via next_permutation).
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Streams every permutation through `f` without materializing the list.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        f(&p);
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

pub fn brute_automorphism_count(g: &Graph) -> usize {
    let a = adjacency(g);
    let n = g.n();
    let mut count = 0;
    for_each_permutation(n, |p| {
        if (0..n).all(|u| (u + 1..n).all(|v| a[u][v] == a[p[u]][p[v]])) {
            count += 1;
        }
    });
    count
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (a, b) = (adjacency(g), adjacency(h));
    let n = g.n();
    let mut found = false;
    for_each_permutation(n, |p| {
        found |= !found && (0..n).all(|u| (u + 1..n).all(|v| a[u][v] == b[p[u]][p[v]]));
    });
    found
}

pub fn from_adjacency(a: &[Vec<bool>]) -> Graph {
    let n = a.len();
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| a[u][v]).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// Every graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}
