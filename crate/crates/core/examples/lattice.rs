//! The vanishing-cycle lattice, its radical and its unimodular quotient.

use artin_monodromy::milnor_lattice::{
    gram_matrix, gram_of, quotient_lattice, radical, standard_symplectic_form, sublattice_rank,
    symplectic_basis,
};

fn main() -> artin_monodromy::Result<()> {
    let l = gram_matrix(4)?;
    println!("gram rank {}", l.rank());
    let rad = radical(&l)?;
    println!("radical ({} vectors):", rad.len());
    for r in &rad {
        println!("  {r:?}");
    }
    let q = quotient_lattice(&l)?;
    println!("quotient rank {}, determinant {}", q.rank, q.determinant()?);
    for (i, c) in q.class_map.iter().enumerate() {
        println!("  a_{:04b} = {c:?}", i);
    }
    let all: Vec<usize> = (0..16).collect();
    let non_extremal: Vec<usize> = (1..15).collect();
    println!("span of all classes: {}", sublattice_rank(&q, &all)?);
    println!(
        "span of the 14 non-extremal classes: {}",
        sublattice_rank(&q, &non_extremal)?
    );
    let basis = symplectic_basis(&q)?;
    println!(
        "symplectic basis found: {}",
        gram_of(&q.induced_gram, &basis)? == standard_symplectic_form(q.rank)
    );
    Ok(())
}
