//! Re-derive every claim and print a one-line verdict for each, then
//! repeat with a corrupted table to show a failure witness.
//!
//! ```bash
//! cargo run --example verify_claims
//! ```

use zero_density::claims::{report_json, run_all, Verdict};
use zero_density::exponent::{default_registry, MuTable};
use zero_density::rational::rat;

fn main() -> zero_density::Result<()> {
    let res = run_all(&default_registry(), &MuTable::hardy_littlewood());
    for r in &res {
        println!("{}", r.summary_line());
    }

    let bad = MuTable::hardy_littlewood().with_override(rat(3, 4), rat(1, 5))?;
    let res = run_all(&default_registry(), &bad);
    println!("\nwith mu(3/4) <= 1/5 instead of 1/6:");
    for r in res
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::Fail { .. }))
    {
        println!("{}", r.summary_line());
    }
    println!(
        "\n{}",
        serde_json::to_string_pretty(&report_json(&res[..1])).unwrap()
    );
    Ok(())
}
