use edgeideal::classify::{audit_chain, is_vertex_decomposable, replay_vd_witness};
use edgeideal::genfun::{genfun_oracle, BettiPolynomial};
use edgeideal::graph::io;
use edgeideal::random::{random_complex, random_graph};
use edgeideal::{betti_table_graph, BettiOptions, FieldSpec, Graph, SimplicialComplex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(seed: u64, n: usize, p: f64) -> Graph {
    random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
}

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::GF2),
        Just(FieldSpec::GF3),
        Just(FieldSpec::Q)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_formats_round_trip(seed: u64, n in 0usize..12, p in 0.0f64..1.0) {
        let g = graph(seed, n, p);
        prop_assert_eq!(io::parse_graph6(&io::to_graph6(&g)).unwrap(), g.clone());
        let text = io::to_edge_list(&g);
        prop_assert_eq!(io::to_edge_list(&io::parse_edge_list(&text).unwrap()), text);
        prop_assert_eq!(io::parse_json(&io::to_json(&g)).unwrap(), g);
    }

    #[test]
    fn independence_is_clique_of_complement(seed: u64, n in 1usize..10, p in 0.0f64..1.0) {
        let g = graph(seed, n, p);
        prop_assert_eq!(
            SimplicialComplex::independence_complex(&g).unwrap(),
            SimplicialComplex::clique_complex(&g.complement()).unwrap()
        );
    }

    #[test]
    fn betti_table_shape(seed: u64, n in 1usize..10, p in 0.05f64..0.9, f in field()) {
        let g = graph(seed, n, p);
        let t = betti_table_graph(&g, f, &BettiOptions::sequential()).unwrap();
        prop_assert_eq!(t.get(0, 0), 1);
        prop_assert_eq!(t.get(1, 2) as usize, g.edge_count());
        let mut alt = 0i64;
        for ((i, j), b) in t.entries() {
            // generators are quadrics, so row i lives in degrees i+1..=2i
            prop_assert!(i == 0 && j == 0 || (i < j && j <= 2 * i));
            alt += if i % 2 == 0 { b as i64 } else { -(b as i64) };
        }
        if g.edge_count() > 0 {
            prop_assert_eq!(alt, 0);
        }
    }

    #[test]
    fn folding_and_workers_agree(seed: u64, n in 8usize..12, p in 0.1f64..0.7) {
        let g = graph(seed, n, p);
        let base = betti_table_graph(&g, FieldSpec::GF2, &BettiOptions::sequential()).unwrap();
        let opts = BettiOptions { fold_reduce: true, workers: 3, ..BettiOptions::default() };
        prop_assert_eq!(betti_table_graph(&g, FieldSpec::GF2, &opts).unwrap(), base);
    }

    #[test]
    fn genfun_is_multiplicative(s1: u64, s2: u64, n in 1usize..6, m in 1usize..6) {
        let (g, h) = (graph(s1, n, 0.5), graph(s2, m, 0.5));
        let opts = BettiOptions::sequential();
        let both = genfun_oracle(&Graph::disjoint_union(&g, &h), FieldSpec::GF2, &opts).unwrap();
        let prod = &genfun_oracle(&g, FieldSpec::GF2, &opts).unwrap()
            * &genfun_oracle(&h, FieldSpec::GF2, &opts).unwrap();
        prop_assert_eq!(both, prod);
    }

    #[test]
    fn chordality_certificates_verify(seed: u64, n in 0usize..12, p in 0.0f64..1.0) {
        let g = graph(seed, n, p);
        prop_assert!(g.chordality().verify(&g));
    }

    #[test]
    fn classifier_chain_is_consistent(seed: u64, ground in 1usize..8, facets in 1usize..7) {
        let c = random_complex(&mut ChaCha8Rng::seed_from_u64(seed), ground, facets);
        let vd = is_vertex_decomposable(&c);
        if let Some(w) = &vd.witness {
            prop_assert!(replay_vd_witness(&c, w));
        }
        let report = audit_chain(&c, &[FieldSpec::GF2, FieldSpec::Q], 12);
        prop_assert!(report.violations.is_empty(), "{:?}", report.violations);
    }
}

#[test]
fn polynomial_json_round_trip() {
    let g = Graph::complete_bipartite(3, 4);
    let p = genfun_oracle(&g, FieldSpec::Q, &BettiOptions::sequential()).unwrap();
    let text = p.to_json_value().to_string();
    assert_eq!(BettiPolynomial::from_json(&text).unwrap(), p);
}
