//! A genus-5 witness for the ten curves {a..h,u,v}, printed as JSON.

use artin_monodromy::curves::{is_realizable, surface_of, SearchConfig};
use artin_monodromy::standard;

fn main() -> artin_monodromy::Result<()> {
    let p = standard::ten_curve_pattern();
    let (ok, witness) = is_realizable(&p, 5, &SearchConfig::default())?;
    println!("realizable on genus 5: {ok}");
    if let Some(w) = witness {
        let s = surface_of(&p, &w)?;
        println!(
            "neighbourhood genus {}, {} boundary components",
            s.genus(),
            s.boundary_count()
        );
        println!("{}", serde_json::to_string_pretty(&w.to_json(&p))?);
    }
    Ok(())
}
