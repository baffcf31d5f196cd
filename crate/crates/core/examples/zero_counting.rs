//! Counting zeros on the critical line and certifying N(sigma, T) = 0.
//!
//! ```bash
//! cargo run --release --example zero_counting
//! ```

use zero_density::numerics::{
    argument_principle_count, count_zeros, empirical_n_sigma_t, riemann_siegel_z,
};

fn main() -> zero_density::Result<()> {
    let r = count_zeros(100.0, 0.05)?;
    println!("first zeros:");
    for z in r.zeros.iter().take(6) {
        println!("  {z:.6}  Z = {:+.2e}", riemann_siegel_z(*z)?);
    }

    println!(
        "\n{:>6} {:>6} {:>12} {:>12} {:>10}",
        "T", "count", "main term", "arg count", "diff"
    );
    for t in [100.0, 500.0, 1000.0, 2000.0] {
        let r = count_zeros(t, 0.05)?;
        let n = argument_principle_count(t)?;
        println!(
            "{t:>6} {:>6} {:>12.4} {:>12.4} {:>+10.4}",
            r.sign_change_count, r.rvm_main_term, n, r.discrepancy
        );
    }

    let c = empirical_n_sigma_t(0.75, 500.0)?;
    println!(
        "\nN(0.75, 500) = {} ({:?}; {} zeros on the line of {:.3})",
        c.value, c.certificate, c.on_line, c.total
    );
    Ok(())
}
