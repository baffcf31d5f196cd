//! Uniform bounds sup A(sigma) over sigma >= 1/2 and the prime-gap
//! exponents they give.
//!
//! ```bash
//! cargo run --example uniform_bound_and_gaps
//! ```

use zero_density::exponent::{
    envelope, prime_gap_exponent, records_for, sup_a, BoundId, EtaInterval, SupValue,
};
use zero_density::rational::rat;

fn main() -> zero_density::Result<()> {
    let families: [(&str, Vec<BoundId>); 3] = [
        ("Ingham + l = 0", vec![BoundId::Ingham, BoundId::Montgomery]),
        ("Huxley", vec![BoundId::Huxley]),
        ("Ingham alone", vec![BoundId::Ingham]),
    ];
    for (label, ids) in families {
        let env = envelope(&records_for(&ids), &EtaInterval::full())?;
        let s = sup_a(&env)?;
        match (&s.value, s.exact()) {
            (SupValue::Finite(_), Some(a)) => {
                let gap = prime_gap_exponent(a)?;
                println!(
                    "{label:<16} sup A = {a:<6} at eta = {:<5} gaps << p^({gap} + eps){}",
                    s.at.as_ref().unwrap(),
                    if s.trivial {
                        "  [trivial ceiling used]"
                    } else {
                        ""
                    }
                );
            }
            (v, _) => println!("{label:<16} sup A = {v:?}"),
        }
    }
    println!("\nA = 2 gives exponent {}", prime_gap_exponent(&rat(2, 1))?);
    Ok(())
}
