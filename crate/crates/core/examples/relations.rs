//! Transvections for every vertex and the Artin and triangle relations.

use artin_monodromy::artin_graph::ArtinGraph;
use artin_monodromy::milnor_lattice::{gram_matrix, quotient_lattice};
use artin_monodromy::symplectic_rep::{
    conjugacy_witnesses, generator_shapes, verify_all_relations, Sign,
};

fn main() -> artin_monodromy::Result<()> {
    let g = ArtinGraph::build(4)?;
    let q = quotient_lattice(&gram_matrix(4)?)?;
    for sign in Sign::BOTH {
        let r = verify_all_relations(&q, &g, sign)?;
        println!(
            "{sign:?}: {} braid pairs, {} commuting pairs, {} triangles, {} failures",
            r.braid_pairs,
            r.commuting_pairs,
            r.triangles_checked,
            r.failures.len()
        );
    }
    for s in generator_shapes(&q, &g, Sign::Positive)? {
        println!(
            "T_{}: rank(T-I) = {}, fixed space {}, primitive direction {}",
            s.vertex,
            s.deviation_rank,
            s.fixed_space_dim,
            s.direction_content == 1
        );
    }
    for w in conjugacy_witnesses(&q, &g, Sign::Positive)? {
        let word: Vec<String> = w.word.iter().map(ToString::to_string).collect();
        println!(
            "T_{} = w T_0000 w^-1, w = [{}] verified {}",
            w.vertex,
            word.join(" "),
            w.verified
        );
    }
    Ok(())
}
