//! The eleven curves {a..h,u,v,w+} with each placement of u on a.

use artin_monodromy::curves::{min_genus, SearchConfig};
use artin_monodromy::standard;

fn main() -> artin_monodromy::Result<()> {
    let p = standard::eleven_curve_pattern();
    for c in standard::u_placements() {
        let cfg = SearchConfig {
            constraints: vec![c.clone()],
            ..SearchConfig::default()
        };
        let r = min_genus(&p, 5, &cfg)?;
        println!(
            "u between {} and {} on {}: genus {:?}, {} nodes, exhausted {}",
            c.from,
            c.to,
            c.curve,
            r.genus(),
            r.nodes_explored,
            r.exhausted
        );
    }
    Ok(())
}
