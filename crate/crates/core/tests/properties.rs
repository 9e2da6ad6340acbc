mod common;

use common::*;
use hypcert_core::arrangements::{contracted_singularities, pairwise_nodes, total_class};
use hypcert_core::canonical::canonical_form;
use hypcert_core::contraction::{
    contract, feasible_l_range, lift_certificate, verify_certificate, ContractionCertificate,
};
use hypcert_core::graph::WeightedMultigraph;
use hypcert_core::search::{brute_force_oracle, decide_contractible};
use hypcert_core::surfaces::{adjunction_genus, intersect, DivClass, Surface};
use proptest::prelude::*;

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig::with_cases(n)
}

fn arb_class_on() -> impl Strategy<Value = (Surface, [DivClass; 3], i64, i64)> {
    let k = -20i64..=20;
    prop_oneof![
        (k.clone(), k.clone(), k.clone()).prop_map(|(a, b, c)| {
            (Surface::P2, [DivClass::degree(a), DivClass::degree(b), DivClass::degree(c)], a, b)
        }),
        (0..=12u32, prop::array::uniform6(k.clone()), k.clone(), k)
            .prop_map(|(n, c, s, t)| {
                (
                    Surface::Hirzebruch { n },
                    [
                        DivClass::bidegree(c[0], c[1]),
                        DivClass::bidegree(c[2], c[3]),
                        DivClass::bidegree(c[4], c[5]),
                    ],
                    s,
                    t,
                )
            }),
    ]
}

proptest! {
    #![proptest_config(cases(1000))]

    #[test]
    fn contract_conserves_weight_and_removes_the_pair((g, v, w) in arb_graph_with_edge(6, 6, 3)) {
        let h = contract(&g, &v, &w).unwrap();
        prop_assert_eq!(h.vertex_count() + 1, g.vertex_count());
        prop_assert_eq!(h.total_weight(), g.total_weight());
        let m = g.multiplicity(&v, &w).unwrap() as u64;
        prop_assert_eq!(h.total_multiplicity() + m, g.total_multiplicity());
        prop_assert_eq!(h.weight(&v).unwrap(), g.weight(&v).unwrap() + g.weight(&w).unwrap());
        for x in g.vertices().iter().filter(|x| **x != v && **x != w) {
            prop_assert_eq!(
                h.multiplicity(&v, x).unwrap(),
                g.multiplicity(&v, x).unwrap() + g.multiplicity(&w, x).unwrap()
            );
        }
    }

    #[test]
    fn feasible_range_matches_definition((g, v, w) in arb_graph_with_edge(5, 6, 4)) {
        let range = feasible_l_range(&g, &v, &w).unwrap();
        let m = g.multiplicity(&v, &w).unwrap() as i64;
        let literal: Vec<i64> = (-2..m + 3).filter(|&l| admissible_by_definition(&g, &v, &w, l)).collect();
        prop_assert_eq!(range.values(), literal);
    }

    #[test]
    fn contraction_keeps_graphs_multipartite(g in arb_multipartite(5, 3), pick in any::<prop::sample::Index>()) {
        prop_assert!(g.multipartite_partition().is_some());
        let edges: Vec<_> = g.edges().map(|(u, v, _)| (u.clone(), v.clone())).collect();
        let (v, w) = &edges[pick.index(edges.len())];
        let h = contract(&g, v, w).unwrap();
        prop_assert!(h.multipartite_partition().is_some());
    }

    #[test]
    fn lifted_certificates_verify((cert, big, emb) in arb_augmented()) {
        let lifted = lift_certificate(&cert, &big, &emb).unwrap();
        prop_assert_eq!(&lifted.initial, &big);
        prop_assert!(verify_certificate(&lifted).unwrap());
    }

    #[test]
    fn dual_graph_genus_identity(arr in arb_arrangement()) {
        let x = arr.surface();
        prop_assert_eq!(
            adjunction_genus(x, total_class(&arr)).unwrap(),
            pairwise_nodes(&arr).unwrap() - (arr.len() as i64 - 1)
        );
        prop_assert_eq!(
            contracted_singularities(&arr).unwrap(),
            pairwise_nodes(&arr).unwrap() - (arr.len() as i64 - 1)
        );
    }

    #[test]
    fn intersection_is_symmetric_and_bilinear((x, [c, d, e], s, t) in arb_class_on()) {
        prop_assert_eq!(intersect(x, c, d).unwrap(), intersect(x, d, c).unwrap());
        let combo = c.scale(s).checked_add(d.scale(t)).unwrap();
        prop_assert_eq!(
            intersect(x, combo, e).unwrap(),
            s * intersect(x, c, e).unwrap() + t * intersect(x, d, e).unwrap()
        );
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(7, 5, 3), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        // cheap deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&relabeling(&g, &perm)).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_form_separates_non_isomorphic(a in arb_graph(4, 2, 2), b in arb_graph(4, 2, 2)) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, isomorphic(&a, &b));
    }

    #[test]
    fn chern_data_is_consistent((x, [c, _, _], _, _) in arb_class_on()) {
        let chern = hypcert_core::surfaces::double_cover_chern(x, c).unwrap();
        prop_assert!(chern.noether_consistent());
    }
}

proptest! {
    #![proptest_config(cases(300))]

    #[test]
    fn search_agrees_with_oracle_on_five_vertices(g in arb_graph(5, 5, 2)) {
        let decision = decide_contractible(&g).unwrap();
        prop_assert_eq!(decision.is_contractible(), brute_force_oracle(&g).unwrap());
        if let Some(cert) = decision.certificate() {
            prop_assert!(verify_certificate(cert).unwrap());
            prop_assert_eq!(&cert.initial, &g);
        }
    }

    #[test]
    fn graphs_and_certificates_round_trip_through_json(g in arb_graph(6, 6, 3)) {
        let text = serde_json::to_string(&g).unwrap();
        let back: WeightedMultigraph = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(canonical_form(&back).unwrap(), canonical_form(&g).unwrap());
        prop_assert_eq!(&back, &g);
        if let Some(cert) = decide_contractible(&g).unwrap().certificate() {
            let text = serde_json::to_string(cert).unwrap();
            let back: ContractionCertificate = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, cert);
        }
    }
}
