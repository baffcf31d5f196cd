//! Growth of |zeta(sigma + it)| on vertical lines compared with the
//! tabulated bound for mu(sigma).
//!
//! ```bash
//! cargo run --release --example growth_scan
//! ```

use zero_density::numerics::mu_scan;

fn main() -> zero_density::Result<()> {
    println!(
        "{:>5} {:>12} {:>10} {:>10}",
        "sigma", "max |zeta|", "slope", "mu bound"
    );
    for sigma in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let r = mu_scan(sigma, 2000.0, 2000)?;
        println!(
            "{sigma:>5} {:>12.4} {:>10.4} {:>10.4}",
            r.running_max.last().unwrap().1,
            r.fitted_exponent,
            r.reference_mu
        );
    }
    println!("\nslopes are indicative only; mu is a limit that desk-scale heights do not reach");
    Ok(())
}
