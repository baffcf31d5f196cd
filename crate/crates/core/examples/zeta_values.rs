//! zeta(s) by Euler-Maclaurin and by an alternating series, and the
//! functional-equation factor chi(s).
//!
//! ```bash
//! cargo run --example zeta_values
//! ```

use zero_density::numerics::{chi, zeta, zeta_alternating, zeta_em, ComplexPoint};

fn main() -> zero_density::Result<()> {
    let pts = [
        (2.0, 0.0),
        (0.0, 0.0),
        (-0.5, 0.0),
        (0.5, 14.134725141734693),
        (0.5, 100.0),
        (0.75, 250.0),
        (0.5, 5000.0),
    ];
    println!(
        "{:>6} {:>10}  {:>40}  {:>9} {:>6}",
        "sigma", "t", "zeta(s)", "err", "terms"
    );
    for (re, im) in pts {
        let s = ComplexPoint::new(re, im)?;
        let e = zeta_em(s, 1e-12)?;
        println!(
            "{re:>6} {im:>10}  {:>19.12e} {:>+19.12e}i  {:>9.1e} {:>6}{}",
            e.value.re,
            e.value.im,
            e.error_estimate,
            e.terms,
            if e.degraded { " degraded" } else { "" }
        );
    }

    println!("\ntwo routes agree:");
    for t in [3.0, 40.0, 250.0] {
        let s = ComplexPoint::new(0.5, t)?;
        let d = (zeta(s)? - zeta_alternating(s)?).norm();
        println!("  t = {t:>5}: |EM - alternating| = {d:.2e}");
    }

    println!("\nfunctional equation zeta(s) = chi(s) zeta(1 - s):");
    for (re, im) in [(0.3, 20.0), (0.8, 150.0)] {
        let s = ComplexPoint::new(re, im)?;
        let r = ComplexPoint::new(1.0 - re, -im)?;
        let lhs = zeta(s)?;
        let rhs = chi(s.to_complex()) * zeta(r)?;
        println!(
            "  s = {re} + {im}i: relative residual {:.2e}",
            (lhs - rhs).norm() / lhs.norm()
        );
    }
    Ok(())
}
