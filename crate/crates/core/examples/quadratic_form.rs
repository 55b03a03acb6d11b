//! Quadratic refinement, irreducibility and the chain parity check.

use artin_monodromy::artin_graph::ArtinGraph;
use artin_monodromy::milnor_lattice::{gram_matrix, quotient_lattice};
use artin_monodromy::symplectic_rep::{
    chain_parity_check, invariant_span_closure, quadratic_refinement, transvections, Sign,
};

fn main() -> artin_monodromy::Result<()> {
    let g = ArtinGraph::build(4)?;
    let q = quotient_lattice(&gram_matrix(4)?)?;
    let qr = quadratic_refinement(&q)?;
    let ones = qr.values.iter().filter(|&&v| v == 1).count();
    println!(
        "refinement on {} vectors, {ones} with value 1",
        qr.values.len()
    );
    for sign in Sign::BOTH {
        let ts = transvections(&q, &g, sign)?;
        println!(
            "{sign:?}: invariant under all generators: {}",
            ts.iter().all(|t| qr.invariant_under(t))
        );
        let dims: Vec<usize> = q
            .class_map
            .iter()
            .map(|a| invariant_span_closure(&q, &g, std::slice::from_ref(a), sign))
            .collect::<artin_monodromy::Result<_>>()?;
        println!("{sign:?}: invariant closure of each generator: {dims:?}");
    }
    let p = chain_parity_check(&q)?;
    println!(
        "a1+a3+a5+a7 nonzero: {}, <a_0111, a1+a3+a5+a7> mod 2 = {}",
        p.nonzero, p.parity
    );
    Ok(())
}
