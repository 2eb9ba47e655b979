use num_bigint::BigInt;
use proptest::prelude::*;

use spectral_glue::charpoly::{charpoly, minor_charpoly};
use spectral_glue::gluing::{glue_bridge, glue_interface};
use spectral_glue::graph::{euler_characteristic, flip_orientation};
use spectral_glue::io::{graph_to_json, matrix_to_json, parse_graph, parse_matrix, parse_poly, poly_to_json};
use spectral_glue::laplacian::{even_laplacian, odd_laplacian, row_sums};
use spectral_glue::random;
use spectral_glue::spectral::{even_spectrum, odd_spectrum, spanning_tree_count, spanning_tree_count_cofactor};
use spectral_glue::spectral_gluing::{bridge_charpoly, euler_ratio, multi_bridge_charpoly, vertex_interface_charpoly};
use spectral_glue::{BridgeSpec, Edge, IntPoly, OrientedGraph};

/// Simple graphs on up to `max_n` vertices with arbitrary orientations.
fn graph(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(0u8..3, pairs)).prop_map(|(n, pick)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    match pick[k] {
                        1 => edges.push(Edge::new(u, v)),
                        2 => edges.push(Edge::new(v, u)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            OrientedGraph::new(n, edges).unwrap()
        })
    })
}

fn sorted_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_documents_round_trip(g in graph(7)) {
        let text = graph_to_json(&g, None).to_string();
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn laplacian_documents_round_trip(g in graph(6)) {
        let l = odd_laplacian(&g);
        prop_assert_eq!(parse_matrix(&matrix_to_json(&l).to_string()).unwrap(), l);
        let p = charpoly(&even_laplacian(&g)).unwrap();
        prop_assert_eq!(parse_poly(&poly_to_json(&p).to_string()).unwrap(), p);
    }

    #[test]
    fn even_laplacian_is_psd_with_zero_row_sums(g in graph(7)) {
        let l = even_laplacian(&g);
        prop_assert!(l.is_symmetric());
        prop_assert!(row_sums(&l).iter().all(|s| *s == BigInt::from(0)));
        let s = even_spectrum(&g, 1e-12).unwrap();
        prop_assert!(s.eigenvalues.iter().all(|&x| x > -1e-9));
    }

    #[test]
    fn spectrum_roots_charpoly(g in graph(6)) {
        let p = charpoly(&even_laplacian(&g)).unwrap();
        let scale = p.max_abs_coeff().max(1.0);
        for &x in &even_spectrum(&g, 1e-12).unwrap().eigenvalues {
            prop_assert!(p.eval_f64(x).abs() / scale < 1e-6, "p({}) = {}", x, p.eval_f64(x));
        }
    }

    #[test]
    fn spectra_ignore_orientation(g in graph(6), seed in any::<u64>()) {
        let flips = random::random_flips(&mut random::rng(seed), g.n_edges());
        let h = flip_orientation(&g, &flips).unwrap();
        prop_assert_eq!(even_laplacian(&g), even_laplacian(&h));
        let (a, b) = (odd_spectrum(&g, 1e-12).unwrap(), odd_spectrum(&h, 1e-12).unwrap());
        prop_assert!(sorted_close(&a.eigenvalues, &b.eigenvalues, 1e-9));
    }

    #[test]
    fn even_and_odd_charpolys_differ_by_euler_power(g in graph(6)) {
        let r = euler_ratio(&g).unwrap();
        prop_assert_eq!(r.exponent, euler_characteristic(&g));
    }

    #[test]
    fn tree_counts_agree(g in graph(7), v in 0usize..7) {
        let v = v % g.n_vertices();
        prop_assert_eq!(spanning_tree_count(&g).unwrap(), spanning_tree_count_cofactor(&g, v).unwrap());
    }

    #[test]
    fn vertex_gluing_formula(g1 in graph(5), g2 in graph(5), a in 0usize..5, b in 0usize..5) {
        let (a, b) = (a % g1.n_vertices(), b % g2.n_vertices());
        let (l1, l2) = (even_laplacian(&g1), even_laplacian(&g2));
        let formula = vertex_interface_charpoly(
            &charpoly(&l1).unwrap(), &minor_charpoly(&l1, a).unwrap(),
            &charpoly(&l2).unwrap(), &minor_charpoly(&l2, b).unwrap(),
        );
        let iface = spectral_glue::InterfaceSpec::vertices(vec![a], vec![b]);
        let glued = glue_interface(&g1, &g2, &iface).unwrap().graph;
        prop_assert_eq!(formula, charpoly(&even_laplacian(&glued)).unwrap());
    }

    #[test]
    fn bridge_formula(g1 in graph(5), g2 in graph(5), a in 0usize..5, b in 0usize..5) {
        let (a, b) = (a % g1.n_vertices(), b % g2.n_vertices());
        let (l1, l2) = (even_laplacian(&g1), even_laplacian(&g2));
        let formula = bridge_charpoly(
            &charpoly(&l1).unwrap(), &minor_charpoly(&l1, a).unwrap(),
            &charpoly(&l2).unwrap(), &minor_charpoly(&l2, b).unwrap(),
        );
        let bridges = BridgeSpec::new(vec![(a, b)]);
        let glued = glue_bridge(&g1, &g2, &bridges).unwrap().graph;
        let direct = charpoly(&even_laplacian(&glued)).unwrap();
        prop_assert_eq!(&formula, &direct);
        prop_assert_eq!(multi_bridge_charpoly(&g1, &g2, &bridges).unwrap(), direct);
    }

    #[test]
    fn polynomial_ring_laws(a in prop::collection::vec(-50i64..50, 0..6),
                            b in prop::collection::vec(-50i64..50, 0..6),
                            x in -5i64..5) {
        let (p, q) = (IntPoly::from_i64(&a), IntPoly::from_i64(&b));
        let x = BigInt::from(x);
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        if !q.is_zero() {
            let prod = &p * &q;
            prop_assert_eq!(prod.div_exact(&q).unwrap(), p);
        }
    }
}
