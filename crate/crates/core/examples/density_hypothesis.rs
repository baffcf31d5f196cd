//! Where each bound implies the density hypothesis A(sigma) <= 2, and
//! where it stops beating the trivial bound 1/eta.
//!
//! ```bash
//! cargo run --example density_hypothesis
//! ```

use zero_density::exponent::{
    default_registry, dh_break_range, max_form_record, records_for, sigma_of, trivial_from,
    BoundId, MuTable,
};

fn main() -> zero_density::Result<()> {
    let mut recs = default_registry();
    for ell in 4..=6 {
        recs.push(max_form_record(ell, &MuTable::hardy_littlewood())?);
    }
    println!("{:<16} {:<22} trivial from", "bound", "B <= 2 on eta in");
    for r in &recs {
        if r.name == "Trivial" {
            continue;
        }
        let dh = dh_break_range(r)?;
        let range = match (&dh.range, dh.exact) {
            (None, _) => "empty".to_string(),
            (Some(i), true) => i.to_string(),
            (Some(i), false) => format!("{i} (inner)"),
        };
        let triv = trivial_from(r)?.map_or("never".into(), |x| format!("eta = {x}"));
        println!("{:<16} {:<22} {triv}", r.name, range);
    }

    let l1 = &records_for(&[BoundId::MaxFormL1])[0];
    if let Some(r) = dh_break_range(l1)?.range {
        println!(
            "\nl = 1 gives A(sigma) <= 2 for sigma >= {}",
            sigma_of(&r.hi)
        );
    }
    Ok(())
}
