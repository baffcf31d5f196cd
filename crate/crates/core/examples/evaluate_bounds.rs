//! Evaluating the max-form density bound exactly.
//!
//! ```bash
//! cargo run --example evaluate_bounds
//! ```

use zero_density::exponent::{
    asymptotic_annotation, best_max_form, closed_form_bound, max_form_bound, montgomery_bound,
    named_bound, u_ell, v_ell, BoundId, MuTable,
};
use zero_density::rational::{rat, to_exact_string, to_f64};

fn main() -> zero_density::Result<()> {
    let hl = MuTable::hardy_littlewood();

    println!("u_l, v_l and max(4u_l, 3v_l) at eta = 1/16");
    let eta = rat(1, 16);
    for ell in 1..=3 {
        println!(
            "  l = {ell}: u = {:>6}  v = {:>6}  B <= {}",
            to_exact_string(&u_ell(ell, &eta, &hl)?),
            to_exact_string(&v_ell(ell, &eta, &hl)?),
            to_exact_string(&max_form_bound(ell, &eta, &hl)?),
        );
    }

    println!("\nclosed form 4/((l+2)(1 - 2^l eta)) agrees for l >= 2:");
    for ell in 2..=6 {
        let eta = rat(1, 1 << (ell + 2));
        println!(
            "  l = {ell}, eta = {:>5}: {} = {}",
            to_exact_string(&eta),
            to_exact_string(&max_form_bound(ell, &eta, &hl)?),
            to_exact_string(&closed_form_bound(ell, &eta)?),
        );
    }

    println!("\nbest l and the asymptotic 4 log 2 / log(1/eta):");
    for d in [8, 24, 64, 256, 4096] {
        let eta = rat(1, d);
        let (ell, b) = best_max_form(&eta, &hl, 40)?;
        println!(
            "  eta = 1/{d:<5} l = {ell:<2} B <= {:<10} (~{:.4}, asymptotic {:.4})",
            to_exact_string(&b),
            to_f64(&b),
            asymptotic_annotation(to_f64(&eta)),
        );
    }

    println!("\nthe l = 0 bound needs only mu(0) = 1/2:");
    for eta in [rat(1, 10), rat(1, 5), rat(3, 10)] {
        println!(
            "  eta = {:>5}: {}",
            to_exact_string(&eta),
            to_exact_string(&montgomery_bound(&eta)?)
        );
    }

    println!("\nnamed bounds at eta = 1/10:");
    for id in BoundId::ALL {
        println!("  {:<18} {}", id.as_str(), named_bound(id, &rat(1, 10))?);
    }
    Ok(())
}
