//! Minimal genus of the bundled curve patterns.
//!
//! `cargo run --release --example min_genus [budget]`

use artin_monodromy::curves::{min_genus_timed, surface_of, SearchConfig, Verdict};
use artin_monodromy::standard;

fn main() -> artin_monodromy::Result<()> {
    let budget: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let patterns = [
        ("A7 chain", standard::chain7_pattern()),
        ("8-cycle", standard::cycle8_pattern()),
        ("10 curves", standard::ten_curve_pattern()),
        ("11 curves", standard::eleven_curve_pattern()),
        ("12 curves", standard::twelve_curve_pattern()),
    ];
    for (name, p) in patterns {
        let t = min_genus_timed(&p, budget, &SearchConfig::default())?;
        let verdict = match &t.result.verdict {
            Verdict::Exact { genus, witness } => {
                let s = surface_of(&p, witness)?;
                format!("genus {genus} ({} boundary components)", s.boundary_count())
            }
            Verdict::Exceeds { budget } => format!("exceeds {budget}"),
        };
        println!(
            "{name:<10} f2 bound {}  {verdict}  nodes {}  {} ms",
            p.f2_genus_lower_bound(),
            t.result.nodes_explored,
            t.wall_time_ms
        );
    }
    Ok(())
}
