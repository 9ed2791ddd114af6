use mpg_core::circulant::*;
use mpg_core::perm::Permutation;
use mpg_core::reseminant::is_base_graph;
use mpg_core::verify::is_triangle_free;

fn regime(max: usize) -> impl Iterator<Item = usize> {
    (5..=max).filter(|n| n % 6 == 0 || n % 6 == 5)
}

#[test]
fn family_structure() {
    for n in regime(30) {
        let spec = CirculantSpec::family(n).unwrap();
        let g = g_circulant(spec);
        assert_eq!(g.regular_degree(), Some(2 * spec.k), "n={n}");
        assert!(is_triangle_free(&g));
        let c = block_coloring(spec).unwrap();
        assert!(c.is_proper(&g) && c.palette == 3);
        assert!(is_base_graph(&g.complement()));
        // G(6,1) is the bipartite 6-cycle
        assert_eq!(has_chromatic_number_three(spec).unwrap(), n != 6, "n={n}");
    }
}

#[test]
fn family_complements_are_minimal_except_six() {
    for n in regime(30) {
        let r = family_mpg_check(CirculantSpec::family(n).unwrap()).unwrap();
        assert!(r.is_solvable);
        assert_eq!(r.is_minimal, n != 6, "n={n}");
    }
}

#[test]
fn closing_offsets_make_triangles() {
    for n in regime(60) {
        let spec = CirculantSpec::family(n).unwrap();
        let g = g_circulant(spec);
        for m in spec.closing_offsets() {
            let m = m % n;
            if m == 0 || g.has_edge(0, m) {
                continue;
            }
            let h = g.with_edge(0, m).unwrap();
            let closes = !is_triangle_free(&h);
            // at k = 1 the offset 3k has no common neighbour with 0
            assert_eq!(closes, !(spec.k == 1 && m == 3 && n == 6), "n={n} m={m}");
        }
    }
}

#[test]
fn rotation_is_an_automorphism() {
    for (n, k) in [(5, 1), (11, 2), (12, 2), (13, 2), (20, 3), (40, 7)] {
        let g = g_circulant(CirculantSpec::new(n, k).unwrap());
        let rot = Permutation::from_images((0..n).map(|v| (v + 1) % n).collect()).unwrap();
        assert!(g.is_automorphism(&rot));
    }
}

#[test]
fn broader_triangle_free_regime() {
    for k in 1usize..=4 {
        for n in 6 * k - 2..=40 {
            if [3, 7, 9].contains(&n) {
                continue;
            }
            let g = g_circulant(CirculantSpec::new(n, k).unwrap());
            assert!(is_triangle_free(&g), "n={n} k={k}");
            assert_eq!(g.regular_degree(), Some(2 * k), "n={n} k={k}");
        }
    }
}

#[test]
fn super_base_members() {
    for n in [5, 11, 12] {
        let g = g_circulant(CirculantSpec::family(n).unwrap()).complement();
        let r = is_super_base(&g).unwrap();
        assert!(r.is_super_base, "n={n}");
        assert_eq!(r.deletions.len(), n);
    }
}
