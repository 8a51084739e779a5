//! Randomized round-trip invariants for the file formats.

use hrg_cli::{edgelist, graph6};
use hrg_core::Graph;
use proptest::prelude::*;

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, edges).expect("generated edges are valid")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn graph6_round_trip_short_form(g in arbitrary_graph(62)) {
        let text = graph6::encode(&g).unwrap();
        prop_assert!(!text.contains(' '));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_long_form(n in 63usize..=90) {
        let g = Graph::cycle(n).unwrap();
        let text = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arbitrary_graph(20)) {
        prop_assert_eq!(edgelist::parse(&edgelist::write(&g)).unwrap(), g);
    }
}
