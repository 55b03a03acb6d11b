use artin_monodromy::artin_graph::{ArtinGraph, BitVertex, GraphJson};
use artin_monodromy::milnor_lattice::{
    gram_matrix, quotient_lattice, radical, sublattice_rank, LatticeExport,
};
use artin_monodromy::standard;
use proptest::prelude::*;

#[test]
fn gram_support_is_the_edge_set() {
    for k in 1..=5u8 {
        let g = ArtinGraph::build(k).unwrap();
        let l = gram_matrix(k).unwrap();
        assert!(l.gram.is_skew_symmetric());
        for i in 0..g.len() {
            for j in 0..g.len() {
                assert_eq!(
                    l.gram[(i, j)] != 0,
                    i != j && g.adjacent(i, j),
                    "k={k} ({i},{j})"
                );
                assert!(l.gram[(i, j)].abs() <= 1);
            }
        }
    }
}

#[test]
fn edge_counts_are_three_to_the_k_minus_two_to_the_k() {
    for k in 1..=6u8 {
        let g = ArtinGraph::build(k).unwrap();
        assert_eq!(g.edge_count(), 3usize.pow(k.into()) - 2usize.pow(k.into()));
    }
}

#[test]
fn graph_json_round_trip() {
    let g = ArtinGraph::build(4).unwrap();
    let j = g.to_json();
    let s = serde_json::to_string(&j).unwrap();
    let back: GraphJson = serde_json::from_str(&s).unwrap();
    let g2 = ArtinGraph::from_json(&back).unwrap();
    assert_eq!(g2, g);
    assert_eq!(serde_json::to_string(&g2.to_json()).unwrap(), s);
}

#[test]
fn lattice_export_round_trip_and_shape() {
    let e = LatticeExport::build(4).unwrap();
    let s = serde_json::to_string(&e).unwrap();
    let back: LatticeExport = serde_json::from_str(&s).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), s);
    assert_eq!(e.radical_basis.len(), 6);
    assert_eq!(e.class_map.len(), 16);
    assert_eq!(e.determinant.abs(), 1);
    assert_eq!(e.symplectic_basis.as_ref().map(Vec::len), Some(10));
}

#[test]
fn radical_is_saturated() {
    let l = gram_matrix(4).unwrap();
    let rad = radical(&l).unwrap();
    // saturated: the 6x6 minors of the radical basis have gcd 1, checked via
    // the Hermite form having unit pivots
    let hnf = artin_monodromy::linalg::row_hnf(&rad).unwrap();
    for row in &hnf {
        let pivot = row.iter().find(|&&x| x != 0).unwrap();
        assert_eq!(pivot.abs(), 1);
    }
}

#[test]
fn span_ranks_of_named_sets() {
    let q = quotient_lattice(&gram_matrix(4).unwrap()).unwrap();
    let idx = |vs: Vec<BitVertex>| vs.iter().map(BitVertex::index).collect::<Vec<_>>();
    assert_eq!(
        sublattice_rank(&q, &idx(standard::braid_chain())).unwrap(),
        7
    );
    assert_eq!(
        sublattice_rank(&q, &idx(standard::affine_cycle())).unwrap(),
        7
    );
    assert_eq!(
        sublattice_rank(&q, &(1..15).collect::<Vec<_>>()).unwrap(),
        9
    );
}

proptest! {
    #[test]
    fn sublattice_rank_is_monotone(mask in 1u32..(1 << 16), extra in 0usize..16) {
        let q = quotient_lattice(&gram_matrix(4).unwrap()).unwrap();
        let subset: Vec<usize> = (0..16).filter(|i| mask >> i & 1 == 1).collect();
        let mut bigger = subset.clone();
        bigger.push(extra);
        let (a, b) = (sublattice_rank(&q, &subset).unwrap(), sublattice_rank(&q, &bigger).unwrap());
        prop_assert!(a <= b && b <= 10);
    }

    #[test]
    fn vertex_text_round_trip(k in 1u8..=8, code in 0u16..256) {
        let code = code % (1 << k);
        let v = BitVertex::new(k, code).unwrap();
        prop_assert_eq!(v.to_string().parse::<BitVertex>().unwrap(), v);
        let tuple = format!("({})", v.bits().iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
        prop_assert_eq!(tuple.parse::<BitVertex>().unwrap(), v);
    }
}
