//! Working with exponent tables: the built-in ones, a custom CSV table and
//! the Lindelof hypothesis mode.
//!
//! ```bash
//! cargo run --example mu_tables
//! ```

use zero_density::exponent::{
    dh_break_range, max_form_bound, max_form_record, HypothesisMode, MuTable,
};
use zero_density::rational::{rat, to_exact_string};

fn main() -> zero_density::Result<()> {
    let hl = MuTable::hardy_littlewood();
    let vdc = MuTable::van_der_corput();
    println!("first Hardy-Littlewood points:");
    for p in hl.points().iter().take(5) {
        println!("  {p}");
    }
    println!("first van der Corput points:");
    for p in vdc.points().iter().take(4) {
        println!("  {p}");
    }

    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/mu_three_sixteenths.csv"
    );
    let custom = MuTable::from_csv_path(std::path::Path::new(path))?;
    println!("\nwith mu(1/2) <= 3/16 the l = 1 bound is unchanged:");
    for eta in [rat(1, 10), rat(1, 4), rat(2, 5)] {
        println!(
            "  eta = {:>4}: {} vs {}",
            to_exact_string(&eta),
            to_exact_string(&max_form_bound(1, &eta, &custom)?),
            to_exact_string(&max_form_bound(1, &eta, &hl)?),
        );
    }

    println!("\nmu(1/2) <= 1/4 - c2 and the l = 1 density-hypothesis range:");
    for c2 in [rat(1, 100), rat(1, 20), rat(1, 12)] {
        let t = MuTable::hardy_littlewood().with_override(rat(1, 2), rat(1, 4) - &c2)?;
        let r = dh_break_range(&max_form_record(1, &t)?)?;
        println!(
            "  c2 = {:>5}: {}",
            to_exact_string(&c2),
            r.range.map_or("empty".into(), |i| i.to_string())
        );
    }

    let lh = MuTable::hardy_littlewood().with_mode(HypothesisMode::Lindelof);
    println!("\nunder the Lindelof hypothesis:");
    for eta in [rat(1, 100), rat(1, 10), rat(6, 25)] {
        println!(
            "  eta = {:>6}: l = 2 bound {}",
            to_exact_string(&eta),
            to_exact_string(&max_form_bound(2, &eta, &lh)?)
        );
    }

    match MuTable::hardy_littlewood().with_override(rat(3, 4), rat(1, 2)) {
        Ok(_) => println!("\nunexpected: accepted mu(3/4) = 1/2"),
        Err(e) => println!("\nrejected as expected: {e}"),
    }
    Ok(())
}
