//! Lower envelope of the registered bounds, exported as CSV, JSON and SVG.
//!
//! ```bash
//! cargo run --example lower_envelope -- /tmp/envelope.svg
//! ```

use zero_density::exponent::{default_registry, envelope, EtaInterval};
use zero_density::plot::envelope_svg;

fn main() -> zero_density::Result<()> {
    let recs = default_registry();
    let env = envelope(&recs, &EtaInterval::full())?;

    println!("winner per segment on {}:", env.interval);
    for s in &env.segments {
        let exact = if s.lo_exact && s.hi_exact {
            "exact"
        } else {
            "isolated"
        };
        println!("  [{}, {}] {:<12} {exact}", s.lo, s.hi, s.winner);
    }

    println!("\nCSV:\n{}", env.to_csv());
    println!(
        "JSON:\n{}",
        serde_json::to_string_pretty(&env.to_json()).unwrap()
    );

    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "envelope.svg".to_string());
    std::fs::write(&path, envelope_svg(&recs, &env, 400))?;
    println!("SVG written to {path}");
    Ok(())
}
