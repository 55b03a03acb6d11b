use artin_monodromy::artin_graph::ArtinGraph;
use artin_monodromy::milnor_lattice::{gram_matrix, quotient_lattice, QuotientLattice};
use artin_monodromy::symplectic_rep::{
    invariant_span_closure, preserves_form, quadratic_refinement, transvection, transvections, Sign,
};

fn setup() -> (QuotientLattice, ArtinGraph) {
    (
        quotient_lattice(&gram_matrix(4).unwrap()).unwrap(),
        ArtinGraph::build(4).unwrap(),
    )
}

#[test]
fn transvections_fix_their_own_class() {
    let (q, g) = setup();
    for sign in Sign::BOTH {
        for v in g.vertices() {
            let t = transvection(&q, v, sign).unwrap();
            let a = q.class_of(v).unwrap();
            assert_eq!(t.entries.mul_vec(a).unwrap(), a);
            assert!(preserves_form(&t.entries, &q.induced_gram).unwrap());
        }
    }
}

#[test]
fn opposite_signs_are_inverse() {
    let (q, g) = setup();
    let plus = transvections(&q, &g, Sign::Positive).unwrap();
    let minus = transvections(&q, &g, Sign::Negative).unwrap();
    for (p, m) in plus.iter().zip(&minus) {
        assert_eq!(
            p.mul(m).entries,
            artin_monodromy::linalg::Matrix::identity(10)
        );
    }
}

#[test]
fn refinement_values_and_closures() {
    let (q, g) = setup();
    let qr = quadratic_refinement(&q).unwrap();
    assert_eq!(qr.value(0), 0);
    assert_eq!(qr.values.len(), 1024);
    assert!(qr.satisfies_identity(&q));
    for sign in Sign::BOTH {
        assert_eq!(
            invariant_span_closure(&q, &g, &[vec![0; 10]], sign).unwrap(),
            0
        );
        assert_eq!(
            invariant_span_closure(&q, &g, &q.class_map, sign).unwrap(),
            10
        );
    }
}
