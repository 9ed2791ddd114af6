mod common;

use common::*;
use mpg_core::catalog::{builtin_fixtures, fixture};
use mpg_core::cliques::{all_cliques, is_maximal_clique, maximal_cliques};
use mpg_core::generation::*;
use mpg_core::verify::{check_minimal_prime_graph, is_minimal_prime_graph};
use mpg_core::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

#[test]
fn c5_census_matches_subset_brute_force() {
    let c5 = Graph::cycle(5).unwrap();
    let a = adjacency(&c5);
    let mut brute = Vec::new();
    for mask in 0u32..32 {
        let u: Vec<usize> = (0..5).filter(|i| mask >> i & 1 == 1).collect();
        let mut b: Vec<Vec<bool>> = a.iter().map(|row| row.iter().copied().chain([false]).collect()).collect();
        b.push(vec![false; 6]);
        for &x in &u {
            b[x][5] = true;
            b[5][x] = true;
        }
        if brute_minimal(&b) {
            brute.push(u);
        }
    }
    let mut closed: Vec<Vec<usize>> = (0..5).map(|v| c5.closed_neighbors(v).to_vec()).collect();
    closed.sort();
    brute.sort();
    assert_eq!(brute, closed);
    let sites: Vec<Vec<usize>> = enumerate_generation_sites(&c5).unwrap().into_iter().map(|s| s.site).collect();
    assert_eq!(sites, brute);
}

#[test]
fn census_matches_subset_scan_on_small_fixtures() {
    for name in ["FIG2_6", "FIG1_8", "FIG5_9"] {
        let g = fixture(name).unwrap().graph;
        let n = g.n();
        let mut brute = Vec::new();
        for mask in 0u64..1 << n {
            let u: VertexSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if is_minimal_prime_graph(&attach_vertex(&g, &u).unwrap()) {
                brute.push(u.to_vec());
            }
        }
        brute.sort();
        let sites: Vec<Vec<usize>> = enumerate_generation_sites(&g).unwrap().into_iter().map(|s| s.site).collect();
        assert_eq!(sites, brute, "{name}");
    }
}

#[test]
fn necessity_flags_hold_on_every_site() {
    for entry in builtin_fixtures() {
        if entry.graph.n() > SITE_LIMIT {
            continue;
        }
        for site in enumerate_generation_sites(&entry.graph).unwrap() {
            let u = set(&site.site);
            let flags = lemma_checks(&entry.graph, &u).unwrap();
            assert!(flags.k_is_clique && flags.two_colorable_complement_k, "{} {:?}", entry.name, site.site);
        }
    }
}

#[test]
fn clique_generation_is_sufficient() {
    for entry in builtin_fixtures() {
        let g = &entry.graph;
        for k in maximal_cliques(g) {
            match clique_generate(g, &k) {
                Ok(out) => assert!(check_minimal_prime_graph(&out).is_minimal, "{} {:?}", entry.name, k),
                Err(mpg_core::Error::NoTwoColoredClique) => assert!(two_colored_clique_coloring(g, &k).is_none()),
                Err(e) => panic!("{}: {e}", entry.name),
            }
        }
        assert!(matches!(clique_generate(g, &VertexSet::new()), Err(mpg_core::Error::NotMaximalClique)));
    }
}

#[test]
fn closed_neighbourhoods_are_sites() {
    for entry in builtin_fixtures() {
        let g = &entry.graph;
        for v in 0..g.n() {
            let u = g.closed_neighbors(v);
            assert!(is_generation_site(g, &u).unwrap(), "{} v={v}", entry.name);
            let c = classify_site(g, &u).unwrap();
            assert!(c.is_vertex_duplication);
            assert_eq!(g.closed_neighbors(c.twin_of.unwrap()), u);
        }
    }
}

#[test]
fn fig5_site_is_clique_generation_only() {
    let g = fixture("FIG5_9").unwrap().graph;
    let u = set(&[1, 2, 3, 5, 7, 8]);
    let c = classify_site(&g, &u).unwrap();
    assert_eq!(c.kind, SiteKind::CliqueGeneration);
    assert!(is_maximal_clique(&g, &set(&[0, 4, 6])));
    assert_eq!(attach_vertex(&g, &u).unwrap(), fixture("FIG5_10").unwrap().graph);
}

#[test]
fn fig6_site_is_duplication_only() {
    let g = fixture("FIG6_15").unwrap().graph;
    let full = set(&[0, 1, 2, 4, 6, 7, 9, 10, 12, 13, 14]);
    let without_14 = set(&[0, 1, 2, 4, 6, 7, 9, 10, 12, 13]);
    assert!(is_generation_site(&g, &full).unwrap());
    assert!(!is_generation_site(&g, &without_14).unwrap());
    let c = classify_site(&g, &full).unwrap();
    assert_eq!((c.kind, c.twin_of), (SiteKind::VertexDuplication, Some(4)));
    assert!(!is_maximal_clique(&g, &set(&[3, 5, 8, 11])));
    assert_eq!(attach_vertex(&g, &full).unwrap(), fixture("FIG6_16").unwrap().graph);
}

#[test]
fn clique_listings_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..200 {
        let n = rng.gen_range(0..=9);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let cliques = all_cliques(&g);
        let mut brute = 0;
        for mask in 0u32..1 << n {
            let s: VertexSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if g.is_clique(&s) {
                brute += 1;
                assert!(cliques.contains(&s));
                assert_eq!(is_maximal_clique(&g, &s), maximal_cliques(&g).contains(&s));
            }
        }
        assert_eq!(cliques.len(), brute);
    }
}
