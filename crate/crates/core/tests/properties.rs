//! Invariant suites: randomized structural properties plus deterministic
//! corpus sweeps for the theorem-level guarantees.

mod common;

use common::*;
use hrg_core::{
    analyze_hrg, bound_profile, index_lower_bound, intertwine_check, is_strongly_regular,
    quotient_matrix, rooted_coarsest_partition, verify_cam, Distance, Graph,
};
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

fn arbitrary_circulant() -> impl Strategy<Value = Graph> {
    (3usize..=12).prop_flat_map(|n| {
        let half = n / 2;
        (1u32..(1 << half)).prop_map(move |mask| {
            let connections: Vec<usize> =
                (1..=half).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
            circulant(n, &connections)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn complement_is_an_involution(g in arbitrary_graph(9)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn refinement_fixpoint_is_equitable(g in arbitrary_graph(9)) {
        for root in 0..g.order() {
            let p = rooted_coarsest_partition(&g, root);
            prop_assert!(quotient_matrix(&g, &p).is_ok());
        }
    }

    #[test]
    fn product_diameter_adds(a in arbitrary_graph(6), b in arbitrary_graph(6)) {
        prop_assume!(a.is_connected() && b.is_connected());
        let (da, db) = (a.distances().diameter(), b.distances().diameter());
        let (Distance::Finite(da), Distance::Finite(db)) = (da, db) else {
            unreachable!("connected graphs have finite diameter")
        };
        let product = a.cartesian_product(&b);
        prop_assert_eq!(product.distances().diameter(), Distance::Finite(da + db));
    }

    /// Circulants are vertex-transitive, so every root yields the same
    /// canonical quotient; this pins the canonical-labeling contract.
    #[test]
    fn canonical_quotients_agree_on_circulants(g in arbitrary_circulant()) {
        let reference = quotient_matrix(&g, &rooted_coarsest_partition(&g, 0)).unwrap();
        for root in 1..g.order() {
            let cam = quotient_matrix(&g, &rooted_coarsest_partition(&g, root)).unwrap();
            prop_assert!(cam.same_quotient(&reference));
        }
    }

    #[test]
    fn emitted_cams_are_well_formed(g in arbitrary_circulant()) {
        let Ok(report) = analyze_hrg(&g) else { return Ok(()); };
        let Some(cam) = report.cam.as_ref() else { return Ok(()); };
        let k = g.valency().expect("circulants are regular") as u64;
        let m = cam.size();

        // Column sums equal the valency.
        for j in 0..m {
            let sum: u64 = (0..m).map(|i| cam.entry(i, j)).sum();
            prop_assert_eq!(sum, k, "column {}", j);
        }
        // Size balance: edges between cells counted from both sides agree.
        for i in 0..m {
            for j in 0..m {
                prop_assert_eq!(
                    cam.cell_sizes()[i] as u64 * cam.entry(j, i),
                    cam.cell_sizes()[j] as u64 * cam.entry(i, j)
                );
            }
        }
        // s_sets partition the cell indices, starting with the root cell.
        let s_sets = cam.s_sets();
        let mut all: Vec<usize> = s_sets.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..m).collect::<Vec<_>>());
        prop_assert_eq!(&s_sets[0], &vec![0usize]);

        // The canonical partitions realize the CAM at every root.
        prop_assert!(verify_cam(&g, cam, &report.partitions).unwrap().holds());
    }

    #[test]
    fn complement_preserves_high_regularity(g in arbitrary_circulant()) {
        let co = g.complement();
        let a = analyze_hrg(&g).map(|r| r.is_hrg).unwrap_or(false);
        let b = analyze_hrg(&co).map(|r| r.is_hrg).unwrap_or(false);
        prop_assert_eq!(a, b);
        if a && g.is_connected() && co.is_connected() {
            let ia = analyze_hrg(&g).unwrap().index;
            let ib = analyze_hrg(&co).unwrap().index;
            prop_assert_eq!(ia, ib, "indices of a graph and its complement");
        }
    }

    #[test]
    fn index_bounds_hold(g in arbitrary_circulant()) {
        prop_assume!(g.is_connected());
        let report = analyze_hrg(&g).unwrap();
        prop_assume!(report.is_hrg);
        let index = report.index.unwrap();
        let diam = g.distances().diameter().finite().unwrap() as usize;
        let lower = index_lower_bound(&g).unwrap();
        prop_assert!(index > diam);
        prop_assert!(lower <= index);
        prop_assert!(lower > diam);
    }

}

/// Connected regular graphs of diameter above 2 always have complements of
/// diameter exactly 2.
#[test]
fn deep_regular_graphs_have_shallow_complements() {
    let mut exercised = 0;
    for n in 6..=14usize {
        let half = n / 2;
        for mask in 1u32..(1 << half) {
            let connections: Vec<usize> =
                (1..=half).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
            let g = circulant(n, &connections);
            if !g.is_connected() {
                continue;
            }
            if !matches!(g.distances().diameter(), Distance::Finite(d) if d > 2) {
                continue;
            }
            assert_eq!(
                g.complement().distances().diameter(),
                Distance::Finite(2),
                "circulant({n}, {connections:?})"
            );
            exercised += 1;
        }
    }
    assert!(exercised >= 10, "only {exercised} deep circulants found");
}

/// Index 3 characterizes the strongly regular members of the corpus.
#[test]
fn index_3_iff_strongly_regular() {
    let mut corpus: Vec<Graph> = vec![
        Graph::cycle(5).unwrap(),
        Graph::cycle(6).unwrap(),
        Graph::cycle(7).unwrap(),
        petersen(),
        torus(3, 3),
        torus(2, 3),
        torus(2, 4),
        circulant(6, &[1, 3]), // K(3,3)
        complete(5),
        Graph::cycle(7).unwrap().complement(),
        torus(2, 5),
    ];
    for n in 4..=8usize {
        let half = n / 2;
        for mask in 1u32..(1 << half) {
            let connections: Vec<usize> =
                (1..=half).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
            corpus.push(circulant(n, &connections));
        }
    }
    let mut srg_seen = 0;
    for g in corpus {
        if !g.is_connected() {
            continue;
        }
        let report = analyze_hrg(&g).unwrap();
        if !report.is_hrg {
            continue;
        }
        let srg = is_strongly_regular(&g).unwrap().is_some();
        assert_eq!(report.index == Some(3), srg, "order {}", g.order());
        srg_seen += usize::from(srg);
    }
    assert!(srg_seen >= 4, "corpus must exercise the SRG side");
}

/// Cartesian products of highly-regular graphs stay highly regular.
#[test]
fn products_of_hrgs_are_hrg() {
    let factors: Vec<Graph> = vec![
        Graph::cycle(3).unwrap(),
        Graph::cycle(5).unwrap(),
        torus(2, 3),
        petersen(),
        complete(4),
    ];
    for a in &factors {
        for b in &factors {
            let product = a.cartesian_product(b);
            let report = analyze_hrg(&product).unwrap();
            assert!(
                report.is_hrg,
                "product of orders {} and {}",
                a.order(),
                b.order()
            );
        }
    }
}

/// The intertwining identity holds exactly at every root of every connected
/// highly-regular corpus member, and the bound chains never trip their
/// internal checks.
#[test]
fn intertwining_and_bounds_over_corpus() {
    let corpus: Vec<Graph> = vec![
        Graph::cycle(5).unwrap(),
        Graph::cycle(8).unwrap(),
        torus(2, 3),
        torus(3, 4),
        torus(2, 5),
        petersen(),
        complete(6),
        torus(2, 4),
    ];
    for g in corpus {
        let report = analyze_hrg(&g).unwrap();
        assert!(report.is_hrg);
        for root in 0..g.order() {
            assert!(intertwine_check(&g, &report, root).unwrap());
        }
        let bounds = bound_profile(&g, &report).unwrap();
        assert_eq!(bounds.b_max.len(), g.distances().diameter().finite().unwrap() as usize);
    }
}
