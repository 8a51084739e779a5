//! Worked examples with independently derived expectations: brute-force
//! isomorphism oracles for the small identifications and hand-derived data
//! for the named graphs.

mod common;

use common::*;
use hrg_core::{
    analyze_hrg, distance_relations, index_lower_bound, is_distance_regular, is_strongly_regular,
    relation_graph, verify_scheme, Distance, Graph,
};

#[test]
fn edge_list_square_is_the_4_cycle() {
    let g = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert!(brute_force_isomorphic(&g, &Graph::cycle(4).unwrap()));
    assert!(brute_force_isomorphic(&g, &torus(2, 2)));
}

#[test]
fn complement_of_prism_is_the_6_cycle() {
    let prism = torus(2, 3);
    assert!(brute_force_isomorphic(
        &prism.complement(),
        &Graph::cycle(6).unwrap()
    ));
}

#[test]
fn torus33_is_self_complementary() {
    let t33 = torus(3, 3);
    assert!(brute_force_isomorphic(&t33, &t33.complement()));
    assert!(is_distance_regular(&t33).unwrap().is_some());
}

#[test]
fn torus24_is_the_cube() {
    // Q3: vertices are bit triples, edges at Hamming distance one.
    let cube = Graph::from_edge_list(
        8,
        (0..8usize).flat_map(|i| (0..8).filter(move |&j| (i ^ j).count_ones() == 1 && i < j).map(move |j| (i, j))),
    )
    .unwrap();
    assert!(brute_force_isomorphic(&torus(2, 4), &cube));
    assert!(is_distance_regular(&cube).unwrap().is_some());
}

#[test]
fn pentagram_is_again_a_5_cycle() {
    let c5 = Graph::cycle(5).unwrap();
    let s = verify_scheme(distance_relations(&c5).unwrap()).unwrap();
    let pentagram = relation_graph(&s, 2).unwrap();
    assert!(brute_force_isomorphic(&pentagram, &c5));
}

#[test]
fn prism_layer_degree_sets() {
    // In T(2,3) the open neighborhood induces degrees {1, 1, 0}: the two
    // triangle mates are adjacent, the across vertex is isolated.
    let prism = torus(2, 3);
    let dist = prism.distances();
    for v in 0..prism.order() {
        let seq = prism.induced_degree_sequence(dist.layer(v, 1)).unwrap();
        assert_eq!(seq, vec![0, 1, 1]);
        let mut distinct = seq.clone();
        distinct.dedup();
        assert_eq!(distinct.len(), 2);
    }
    // Degree-set sizes 2 and 1 push the bound past diam + 1 = 3.
    assert_eq!(index_lower_bound(&prism).unwrap(), 4);
    let report = analyze_hrg(&prism).unwrap();
    assert_eq!(report.index, Some(4));
    assert!(is_distance_regular(&prism).unwrap().is_none());
}

#[test]
fn torus55_neighborhood_is_independent() {
    let g = torus(5, 5);
    let dist = g.distances();
    for v in [0, 7, 24] {
        assert_eq!(
            g.induced_degree_sequence(dist.layer(v, 1)).unwrap(),
            vec![0, 0, 0, 0]
        );
    }
}

#[test]
fn petersen_is_srg_with_index_3() {
    let g = petersen();
    assert_eq!(is_strongly_regular(&g).unwrap(), Some((3, 0, 1)));
    let report = analyze_hrg(&g).unwrap();
    assert_eq!(report.index, Some(3));
    assert_eq!(g.distances().diameter(), Distance::Finite(2));
}

#[test]
fn complement_of_c7_has_index_4() {
    // C7 is distance-regular with index 4; the complement keeps the index
    // but drops to diameter 2, so it cannot be distance-regular.
    let c7 = Graph::cycle(7).unwrap();
    assert_eq!(analyze_hrg(&c7).unwrap().index, Some(4));
    let g = c7.complement();
    let report = analyze_hrg(&g).unwrap();
    assert_eq!(report.index, Some(4));
    assert_eq!(g.distances().diameter(), Distance::Finite(2));
    assert!(is_distance_regular(&g).unwrap().is_none());
}

#[test]
fn c6_tridiagonal_cam_via_distance_partition() {
    // C6 is distance-regular: the distance partition at every root realizes
    // its tridiagonal CAM.
    let c6 = Graph::cycle(6).unwrap();
    let dist = c6.distances();
    let report = analyze_hrg(&c6).unwrap();
    let cam = report.cam.as_ref().unwrap();
    let partitions: Vec<hrg_core::RootedPartition> = (0..6)
        .map(|u| {
            let cells: Vec<Vec<usize>> = dist.layers(u).to_vec();
            hrg_core::RootedPartition::from_cells(6, u, cells).unwrap()
        })
        .collect();
    assert!(hrg_core::verify_cam(&c6, cam, &partitions).unwrap().holds());
}
