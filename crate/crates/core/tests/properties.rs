use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use strongpow::corpus::corpus;
use strongpow::graph::{
    graph_isomorphic, strong_power_graph, strong_power_graph_by_definition, Graph,
};
use strongpow::group::{euler_phi, is_prime, make_cyclic, make_direct_product};
use strongpow::linalg::IntMatrix;
use strongpow::permanent::{permanent_expansion, permanent_ryser};
use strongpow::spectral::{
    adjacency, closed_form_spectrum, laplacian, spanning_tree_count_formula,
    spanning_tree_count_from_spectrum, spanning_tree_count_kirchhoff,
};
use strongpow::structure::{
    beineke_patterns, contains_induced, is_line_graph, line_graph_construct, root_graph_search,
};

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Induced containment by trying every vertex subset and every bijection.
fn contains_induced_naive(host: &Graph, pattern: &Graph) -> bool {
    let (n, k) = (host.n(), pattern.n());
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .any(|s| {
            let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            graph_isomorphic(&host.induced_subgraph(&verts).unwrap(), pattern).unwrap()
        })
}

#[test]
fn lagrange_and_generators_on_corpus() {
    for e in corpus(|_| true).unwrap() {
        let n = e.group.order();
        for x in 0..n {
            assert_eq!(n % e.group.element_order(x), 0, "{}", e.spec);
        }
        let gens = e.group.generators();
        if e.group.is_cyclic() {
            assert_eq!(gens.len() as u64, euler_phi(n as u64), "{}", e.spec);
        } else {
            assert!(gens.is_empty(), "{}", e.spec);
        }
    }
}

#[test]
fn products_of_cyclic_groups() {
    for a in 1..=12usize {
        for b in 1..=12usize {
            let g =
                make_direct_product(&make_cyclic(a).unwrap(), &make_cyclic(b).unwrap()).unwrap();
            assert_eq!(g.is_cyclic(), a.gcd(&b) == 1, "Z{a} x Z{b}");
        }
    }
}

#[test]
fn cyclic_construction_matches_definition() {
    for n in (1..=64).chain([97, 100, 128, 210]) {
        let g = make_cyclic(n).unwrap();
        assert_eq!(
            strong_power_graph(&g),
            strong_power_graph_by_definition(&g),
            "zn:{n}"
        );
    }
}

#[test]
fn trace_and_tree_counts() {
    for n in 1..=40 {
        let g = strong_power_graph(&make_cyclic(n).unwrap());
        let s = closed_form_spectrum(n, true);
        assert_eq!(s.order(), n);
        assert_eq!(s.trace(), BigInt::from(2 * g.edge_count()), "zn:{n}");
        if n >= 2 {
            let f = spanning_tree_count_formula(n, true);
            assert_eq!(f, spanning_tree_count_kirchhoff(&g).unwrap(), "zn:{n}");
            assert_eq!(f, spanning_tree_count_from_spectrum(&s).unwrap(), "zn:{n}");
        }
    }
}

#[test]
fn zero_rows_annihilate_permanents() {
    for p in (2..=19u64).filter(|&p| is_prime(p)) {
        let g = strong_power_graph(&make_cyclic(p as usize).unwrap());
        assert_eq!(
            permanent_ryser(&adjacency(&g)).unwrap(),
            BigInt::from(0),
            "zn:{p}"
        );
        assert_eq!(
            permanent_ryser(&laplacian(&g)).unwrap(),
            BigInt::from(0),
            "zn:{p}"
        );
    }
}

#[test]
fn recognizer_matches_root_search_on_small_graphs() {
    for n in 1..=5usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0u64..1 << pairs {
            let g = graph_from_mask(n, mask);
            let line = is_line_graph(&g).unwrap();
            let root = root_graph_search(&g, 12).unwrap();
            assert_eq!(line, root.is_some(), "n={n} mask={mask:b}");
            if let Some(r) = root {
                assert!(graph_isomorphic(&line_graph_construct(&r), &g).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ryser_matches_expansion(n in 0usize..=7, seed in prop::collection::vec(-5i64..=5, 49)) {
        let m = IntMatrix::from_fn(n, |i, j| BigInt::from(seed[i * 7 + j]));
        prop_assert_eq!(permanent_ryser(&m).unwrap(), permanent_expansion(&m).unwrap());
    }

    #[test]
    fn recognizer_matches_root_search_on_six_vertices(mask in 0u64..1 << 15) {
        let g = graph_from_mask(6, mask);
        prop_assert_eq!(is_line_graph(&g).unwrap(), root_graph_search(&g, 12).unwrap().is_some());
    }

    #[test]
    fn induced_search_matches_naive(mask in 0u64..1 << 21, which in 0usize..9) {
        let host = graph_from_mask(7, mask);
        let patterns = beineke_patterns();
        let pattern = &patterns.patterns()[which];
        prop_assert_eq!(contains_induced(&host, pattern).unwrap(), contains_induced_naive(&host, pattern));
    }

    #[test]
    fn line_graph_of_random_graph_is_recognized(mask in 0u64..1 << 15) {
        let root = graph_from_mask(6, mask);
        let l = line_graph_construct(&root);
        prop_assert_eq!(l.n(), root.edge_count());
        if l.n() <= 40 {
            prop_assert!(is_line_graph(&l).unwrap());
        }
    }
}
