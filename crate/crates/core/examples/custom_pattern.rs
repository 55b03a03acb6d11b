//! Validate a pattern given as JSON and compute its genus bounds.
//!
//! `cargo run --example custom_pattern -- pattern.json`

use artin_monodromy::curves::{min_genus, CurvePattern, PatternJson, SearchConfig};

const DEFAULT: &str =
    r#"{"curves":["x","y","z","t"],"intersections":[["x","y"],["y","z"],["z","t"],["t","x"]]}"#;

fn main() -> artin_monodromy::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let json: PatternJson = serde_json::from_str(&text)?;
    let raw = CurvePattern::from_json_unchecked(&json)?;
    if let Err(issues) = raw.validate() {
        for i in issues {
            println!("{i}");
        }
        return Ok(());
    }
    println!(
        "{} curves, {} crossings, F2 bound {}",
        raw.len(),
        raw.crossing_count(),
        raw.f2_genus_lower_bound()
    );
    let r = min_genus(&raw, 10, &SearchConfig::default())?;
    println!(
        "minimal genus {:?} after {} nodes",
        r.genus(),
        r.nodes_explored
    );
    Ok(())
}
