//! θ(t) and the Riemann–Siegel Z function on the critical line.
//!
//! `Z(t) = e^{iθ(t)} ζ(1/2 + it)` is real, with |Z(t)| = |ζ(1/2 + it)|.
//! For t ≥ [`RS_MIN_HEIGHT`] it is evaluated from the Riemann–Siegel
//! formula: the main sum over n ≤ √(t/2π) plus the remainder series
//! C_0..C_4. Below that height the asymptotic remainder is not accurate to
//! 10^-6, and Z is computed as `Re(e^{iθ} ζ(1/2+it))` from the alternating
//! series evaluator instead.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::gamma::ln_gamma;
use crate::numerics::zeta::{zeta_alternating, ComplexPoint};

/// Lowest height at which the asymptotic formulas are used.
pub const MIN_HEIGHT: f64 = 10.0;

/// Lowest height at which the Riemann–Siegel remainder series is trusted
/// to 10^-6.
pub const RS_MIN_HEIGHT: f64 = 100.0;

fn check_height(t: f64) -> Result<()> {
    if !t.is_finite() || t < MIN_HEIGHT {
        return Err(Error::domain(format!(
            "t = {t} is below {MIN_HEIGHT}; the asymptotic expansion is unreliable there"
        )));
    }
    if t > crate::numerics::zeta::MAX_HEIGHT {
        return Err(Error::domain(format!(
            "t = {t} exceeds the engine envelope"
        )));
    }
    Ok(())
}

/// θ(t) = (t/2)·log(t/2π) - t/2 - π/8 + 1/(48t) + 7/(5760t³), t ≥ 10.
pub fn riemann_siegel_theta(t: f64) -> Result<f64> {
    check_height(t)?;
    Ok(theta_series(t))
}

fn theta_series(t: f64) -> f64 {
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t * t)
}

/// θ(t) = arg Γ(1/4 + it/2) - (t/2)·log π from the complex log-gamma,
/// valid for any real t.
pub fn theta_from_gamma(t: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln()
}

/// Ψ(p) = cos(2π(p² - p - 1/16)) / cos(2πp), an entire function.
fn psi(w: Complex64) -> Complex64 {
    let tau = 2.0 * PI;
    (tau * (w * w - w - 1.0 / 16.0)).cos() / (tau * w).cos()
}

const TAYLOR_ORDER: usize = 13;
const CONTOUR_POINTS: usize = 64;
const CONTOUR_RADIUS: f64 = 0.5;

/// Derivatives Ψ^{(k)}(p), k = 0..=12, from Cauchy's integral formula on
/// a circle around p. The nodes avoid the real axis, where Ψ has
/// removable singularities.
fn psi_derivatives(p: f64) -> [f64; TAYLOR_ORDER] {
    let mut coef = [Complex64::new(0.0, 0.0); TAYLOR_ORDER];
    for j in 0..CONTOUR_POINTS {
        let phi = 2.0 * PI * (j as f64 + 0.5) / CONTOUR_POINTS as f64;
        let e = Complex64::from_polar(1.0, phi);
        let f = psi(p + CONTOUR_RADIUS * e);
        let mut rot = Complex64::new(1.0, 0.0);
        let einv = e.conj();
        for c in coef.iter_mut() {
            *c += f * rot;
            rot *= einv;
        }
    }
    let mut out = [0.0; TAYLOR_ORDER];
    let mut fact = 1.0;
    let mut rpow = 1.0;
    for (k, c) in coef.iter().enumerate() {
        if k > 0 {
            fact *= k as f64;
            rpow *= CONTOUR_RADIUS;
        }
        out[k] = (c.re / CONTOUR_POINTS as f64) * fact / rpow;
    }
    out
}

/// Remainder coefficients C_0..C_4 at fractional part `p`.
fn remainder_coefficients(p: f64) -> [f64; 5] {
    let d = psi_derivatives(p);
    let pi2 = PI * PI;
    let pi4 = pi2 * pi2;
    let pi6 = pi4 * pi2;
    let pi8 = pi4 * pi4;
    [
        d[0],
        -d[3] / (96.0 * pi2),
        d[2] / (64.0 * pi2) + d[6] / (18432.0 * pi4),
        -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi4) - d[9] / (5_308_416.0 * pi6),
        d[0] / (128.0 * pi2)
            + 19.0 * d[4] / (24576.0 * pi4)
            + 11.0 * d[8] / (5_898_240.0 * pi6)
            + d[12] / (2_038_431_744.0 * pi8),
    ]
}

/// Z(t) from the Riemann–Siegel formula with `corrections` remainder
/// terms (1..=5). Exposed for error studies; [`riemann_siegel_z`] is the
/// production entry point.
pub fn riemann_siegel_formula(t: f64, corrections: usize) -> Result<f64> {
    check_height(t)?;
    let corrections = corrections.clamp(1, 5);
    let theta = theta_series(t);
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor() as usize;
    let p = a - n as f64;
    let mut main = 0.0;
    for k in 1..=n {
        let kf = k as f64;
        main += (theta - t * kf.ln()).cos() / kf.sqrt();
    }
    main *= 2.0;
    let c = remainder_coefficients(p);
    let x = a.recip(); // (t/2π)^{-1/2}
    let mut series = 0.0;
    let mut xp = 1.0;
    for ck in c.iter().take(corrections) {
        series += ck * xp;
        xp *= x;
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 }; // (-1)^{N-1}
    Ok(main + sign * x.sqrt() * series)
}

/// Z(t) for 10 ≤ t ≤ 10^5, accurate to about 10^-6 for t ≤ 10^4.
pub fn riemann_siegel_z(t: f64) -> Result<f64> {
    check_height(t)?;
    if t >= RS_MIN_HEIGHT {
        return riemann_siegel_formula(t, 5);
    }
    let z = zeta_alternating(ComplexPoint::new(0.5, t)?)?;
    let rot = Complex64::from_polar(1.0, theta_from_gamma(t));
    Ok((rot * z).re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::zeta::zeta;

    #[test]
    fn theta_matches_log_gamma() {
        for &t in &[10.0, 20.0, 57.3, 100.0, 1234.5, 9999.0] {
            let a = riemann_siegel_theta(t).unwrap();
            let b = theta_from_gamma(t);
            assert!((a - b).abs() < 1e-8, "t = {t}: {a} vs {b}");
        }
        let th20 = riemann_siegel_theta(20.0).unwrap();
        assert!((-5.0..=5.0).contains(&th20));
        assert!(riemann_siegel_theta(100.0).unwrap() > riemann_siegel_theta(50.0).unwrap());
        assert!(riemann_siegel_theta(6.2898).is_err());
    }

    #[test]
    fn psi_derivatives_match_finite_differences() {
        let p = 0.3;
        let d = psi_derivatives(p);
        let h = 1e-5;
        let f = |x: f64| psi(Complex64::new(x, 0.0)).re;
        assert!((d[0] - f(p)).abs() < 1e-13);
        assert!((d[1] - (f(p + h) - f(p - h)) / (2.0 * h)).abs() < 1e-7);
        assert!((d[2] - (f(p + h) - 2.0 * f(p) + f(p - h)) / (h * h)).abs() < 1e-3);
    }

    #[test]
    fn z_matches_zeta_modulus() {
        for &t in &[20.0, 50.0, 100.0, 500.0] {
            let z = riemann_siegel_z(t).unwrap();
            let m = zeta(ComplexPoint::new(0.5, t).unwrap()).unwrap().norm();
            assert!((z.abs() - m).abs() < 1e-6, "t = {t}: {z} vs {m}");
        }
    }

    #[test]
    fn first_zero_sign_change() {
        let a = riemann_siegel_z(14.0).unwrap();
        let b = riemann_siegel_z(14.3).unwrap();
        assert!(a * b < 0.0);
        assert!(riemann_siegel_z(9.0).is_err());
    }
}
