//! Build the graph on {0,1}^k and print its basic shape.
//!
//! `cargo run --example artin_graph -- 4 [--dot]`

use artin_monodromy::artin_graph::ArtinGraph;

fn main() -> artin_monodromy::Result<()> {
    let mut args = std::env::args().skip(1);
    let k: u8 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let g = ArtinGraph::build(k)?;
    if std::env::args().any(|a| a == "--dot") {
        print!("{}", g.to_dot());
        return Ok(());
    }
    println!(
        "k = {k}: {} vertices, {} edges, {} triangles",
        g.len(),
        g.edge_count(),
        g.triangles().len()
    );
    for v in g.extremal_vertices() {
        println!("extremal {v} (degree {})", g.degree(v.index()));
    }
    for (i, v) in g.vertices().iter().enumerate() {
        let nbrs: Vec<String> = g.neighbors(i).map(|j| g.vertex(j).to_string()).collect();
        println!("{v}: {}", nbrs.join(" "));
    }
    Ok(())
}
