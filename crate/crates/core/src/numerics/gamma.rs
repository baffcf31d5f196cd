//! Complex log-gamma and log-sine, enough for χ(s) and θ(t).

use std::f64::consts::PI;

use num_complex::Complex64;

/// Bernoulli numbers B_2, B_4, ..., B_22.
pub(crate) const BERNOULLI: [f64; 11] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
];

/// ln Γ(z) on the principal branch (continuous off the negative real axis).
///
/// Shifts `z` right until `Re z ≥ 12`, then applies Stirling's series
/// through B_20.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < 12.0 {
        shift += z.ln();
        z += 1.0;
    }
    let half_ln_2pi = 0.5 * (2.0 * PI).ln();
    let mut s = (z - 0.5) * z.ln() - z + half_ln_2pi;
    let z2 = z * z;
    let mut zpow = z;
    for (k, b) in BERNOULLI.iter().take(10).enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        s += *b / (n * (n - 1.0) * zpow);
        zpow *= z2;
    }
    s - shift
}

/// A logarithm of sin(z), stable for large |Im z|. The branch is arbitrary;
/// only `exp` of the result is meaningful.
pub fn ln_sin(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    if z.im.abs() < 1.0 {
        return z.sin().ln();
    }
    if z.im > 0.0 {
        // sin z = (i/2)·e^{-iz}·(1 - e^{2iz})
        -i * z + (1.0 - (2.0 * i * z).exp()).ln() + (i * 0.5).ln()
    } else {
        // sin z = (-i/2)·e^{iz}·(1 - e^{-2iz})
        i * z + (1.0 - (-2.0 * i * z).exp()).ln() + (-i * 0.5).ln()
    }
}
