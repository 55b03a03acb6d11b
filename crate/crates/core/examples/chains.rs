//! The Br8 chain, its affine closure, and commuting partners.

use artin_monodromy::artin_graph::ArtinGraph;
use artin_monodromy::standard;

fn main() -> artin_monodromy::Result<()> {
    let g = ArtinGraph::build(4)?;
    let chain = standard::braid_chain();
    let report = g.verify_chain(&chain)?;
    println!("Br8 chain is an induced path: {}", report.is_chain);
    println!(
        "with 1001 it closes into an induced cycle: {}",
        g.verify_induced_cycle(&standard::affine_cycle())?
    );

    // a chain with a chord, to show what a violation looks like
    let bad = artin_monodromy::artin_graph::parse_vertex_list("0001,0011,0111")?;
    for v in g.verify_chain(&bad)?.violations {
        println!(
            "0001,0011,0111: {:?} between positions {} and {}",
            v.reason, v.i, v.j
        );
    }

    for v in g.vertices() {
        match g.commuting_partner_witness(&chain, v)? {
            Some(i) => println!("{v} commutes with chain position {i} ({})", chain[i - 1]),
            None => println!("{v} has no commuting partner in the chain"),
        }
    }
    let paths = g.enumerate_induced_paths(7, true);
    println!(
        "{} induced 7-paths avoid the extremal vertices",
        paths.len()
    );
    Ok(())
}
