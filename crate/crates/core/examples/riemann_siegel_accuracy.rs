//! Accuracy of the Riemann-Siegel formula against |zeta(1/2 + it)| as
//! correction terms are added.
//!
//! ```bash
//! cargo run --release --example riemann_siegel_accuracy
//! ```

use zero_density::numerics::riemann_siegel::riemann_siegel_formula;
use zero_density::numerics::zeta::{zeta, ComplexPoint};

fn main() {
    for &t in &[
        10.0, 12.0, 15.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 100.0, 150.0, 200.0, 500.0,
        1000.0, 3000.0, 9999.0,
    ] {
        let m = zeta(ComplexPoint::new(0.5, t).unwrap()).unwrap().norm();
        let errs: Vec<String> = (1..=5)
            .map(|k| {
                format!(
                    "{:.1e}",
                    (riemann_siegel_formula(t, k).unwrap().abs() - m).abs()
                )
            })
            .collect();
        println!(
            "t={t:8.1} |zeta|={m:.6}  err by #corrections: {}",
            errs.join(" ")
        );
    }
}
