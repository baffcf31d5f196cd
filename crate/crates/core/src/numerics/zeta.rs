//! ζ(s) in double precision.
//!
//! The general evaluator is Euler–Maclaurin summation with Bernoulli
//! corrections through B_20. An alternating-series evaluator (Borwein's
//! η(s) acceleration) gives an independent route at moderate heights.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::gamma::{ln_gamma, ln_sin, BERNOULLI};

/// Largest |t| the engine accepts.
pub const MAX_HEIGHT: f64 = 1e5;
/// Default absolute accuracy target for [`zeta_em`].
pub const DEFAULT_ACCURACY: f64 = 1e-10;

/// A point s = σ + it inside the engine's envelope.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexPoint {
    pub re: f64,
    pub im: f64,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::domain("s must have finite components"));
        }
        if im.abs() > MAX_HEIGHT {
            return Err(Error::domain(format!(
                "|t| = {} exceeds the engine envelope {MAX_HEIGHT}",
                im.abs()
            )));
        }
        Ok(ComplexPoint { re, im })
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaEval {
    pub value: Complex64,
    /// Bound on the Euler–Maclaurin remainder.
    pub error_estimate: f64,
    /// Truncation length N.
    pub terms: usize,
    /// Set when the requested accuracy was not reached inside the cap on N.
    pub degraded: bool,
}

/// Factorials (2k)! for k = 1..=11.
fn even_factorial(k: usize) -> f64 {
    (1..=2 * k).map(|i| i as f64).product()
}

fn em_sum(s: Complex64, n: usize) -> (Complex64, f64) {
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        let l = (k as f64).ln();
        let mag = (-s.re * l).exp();
        let (sn, cs) = (s.im * l).sin_cos();
        sum += Complex64::new(mag * cs, -mag * sn);
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = (-s * ln_n).exp(); // N^-s
    sum += n_pow * nf / (s - 1.0) + n_pow * 0.5;

    // Σ B_2k/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}
    let mut rising = s; // s(s+1)…(s+2k-2)
    let mut npow = n_pow / nf; // N^{-s-2k+1}
    for k in 1..=10usize {
        sum += BERNOULLI[k - 1] / even_factorial(k) * rising * npow;
        let a = s + (2 * k - 1) as f64;
        let b = s + (2 * k) as f64;
        rising *= a * b;
        npow /= nf * nf;
    }
    // next term, scaled by the standard remainder factor
    let next = (BERNOULLI[10] / even_factorial(11) * rising * npow).norm();
    let factor = (s + 21.0).norm() / (s.re + 21.0);
    (sum, next * factor)
}

/// ζ(s) by Euler–Maclaurin summation.
///
/// Starts at `N = max(20, ⌈|t|/2⌉ + 10)` and doubles N until the remainder
/// bound is below `target_accuracy`. If that never happens within `64·N₀`
/// the result carries `degraded = true`.
pub fn zeta_em(s: ComplexPoint, target_accuracy: f64) -> Result<ZetaEval> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole);
    }
    if s.re <= -1.0 {
        return Err(Error::domain(format!(
            "Euler-Maclaurin evaluator needs sigma > -1, got {}",
            s.re
        )));
    }
    let z = s.to_complex();
    let n0 = 20usize.max((s.im.abs() / 2.0).ceil() as usize + 10);
    let mut n = n0;
    loop {
        let (value, err) = em_sum(z, n);
        let degraded = err > target_accuracy || !value.re.is_finite() || !value.im.is_finite();
        if !degraded || n >= 64 * n0 {
            return Ok(ZetaEval {
                value,
                error_estimate: err,
                terms: n,
                degraded,
            });
        }
        n *= 2;
    }
}

/// ζ(s) at the default accuracy, as a plain complex number.
pub fn zeta(s: ComplexPoint) -> Result<Complex64> {
    zeta_em(s, DEFAULT_ACCURACY).map(|e| e.value)
}

/// χ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s), so that ζ(s) = χ(s) ζ(1-s).
pub fn chi(s: Complex64) -> Complex64 {
    let l = s * 2f64.ln() + (s - 1.0) * PI.ln() + ln_sin(s * (PI / 2.0)) + ln_gamma(1.0 - s);
    l.exp()
}

/// Largest |t| accepted by [`zeta_alternating`].
pub const ALTERNATING_MAX_HEIGHT: f64 = 300.0;

/// ζ(s) from Borwein's accelerated alternating series for η(s) =
/// (1 - 2^{1-s}) ζ(s). Independent of Euler–Maclaurin; the number of terms
/// grows linearly with |t|, so it is limited to |t| ≤ 300.
pub fn zeta_alternating(s: ComplexPoint) -> Result<Complex64> {
    if s.im.abs() > ALTERNATING_MAX_HEIGHT {
        return Err(Error::domain(format!(
            "alternating series limited to |t| <= {ALTERNATING_MAX_HEIGHT}"
        )));
    }
    let z = s.to_complex();
    let denom = 1.0 - (z * (-(2f64.ln()))).exp() * 2.0;
    if denom.norm() < 1e-12 {
        return Err(Error::domain(
            "1 - 2^{1-s} vanishes; use the Euler-Maclaurin evaluator",
        ));
    }
    if s.re <= 0.0 {
        return Err(Error::domain("alternating series needs sigma > 0"));
    }
    let t = s.im.abs();
    let rate = (3.0 + 8f64.sqrt()).ln();
    let n = ((36.0 + PI * t / 2.0 + (3.0 * (1.0 + 2.0 * t)).ln()) / rate).ceil() as usize;
    // d_k = n Σ_{i≤k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0 / n as f64;
    let mut acc = term;
    d.push(n as f64 * acc);
    for i in 1..=n {
        let fi = i as f64;
        let nf = n as f64;
        term *= 4.0 * (nf + fi - 1.0) * (nf - fi + 1.0) / ((2.0 * fi) * (2.0 * fi - 1.0));
        acc += term;
        d.push(nf * acc);
    }
    let dn = d[n];
    let mut sum = Complex64::new(0.0, 0.0);
    for (k, dk) in d.iter().take(n).enumerate() {
        let l = ((k + 1) as f64).ln();
        let mag = (-s.re * l).exp();
        let (sn, cs) = (s.im * l).sin_cos();
        let w = (dk - dn) / dn;
        let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += Complex64::new(mag * cs, -mag * sn) * (sgn * w);
    }
    Ok(-sum / denom)
}
