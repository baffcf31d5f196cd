//! Growth of |ζ(σ + it)| in t, compared with tabulated μ(σ) bounds.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::mu::MuTable;
use crate::numerics::zeta::{zeta, ComplexPoint};
use crate::rational::{to_f64, Rational};

pub const MIN_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MuScanReport {
    pub sigma: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub samples: usize,
    /// (t, max_{t' ≤ t} |ζ(σ + it')|)
    pub running_max: Vec<(f64, f64)>,
    /// Least-squares slope of log(running max) against log t over the
    /// upper half of the range.
    pub fitted_exponent: f64,
    pub note: &'static str,
    /// Best tabulated bound for μ(σ): chord interpolation of the
    /// Hardy–Littlewood points, with μ(1) = 0.
    pub reference_mu: f64,
    pub reference_label: String,
}

/// Reference bound for μ(σ). μ is convex, so the chord between adjacent
/// Hardy–Littlewood points bounds it from above.
pub fn reference_mu(sigma: f64) -> (f64, String) {
    let pts: Vec<(f64, f64, Rational)> = MuTable::hardy_littlewood()
        .points()
        .into_iter()
        .map(|p| (to_f64(&p.alpha), to_f64(&p.mu_bound), p.mu_bound))
        .chain(std::iter::once((
            1.0,
            0.0,
            Rational::from_integer(0.into()),
        )))
        .collect();
    for w in pts.windows(2) {
        let ((a0, m0, e0), (a1, m1, _)) = (&w[0], &w[1]);
        if sigma == *a0 {
            return (*m0, format!("mu({sigma}) <= {e0}"));
        }
        if sigma > *a0 && sigma < *a1 {
            let m = m0 + (m1 - m0) * (sigma - a0) / (a1 - a0);
            return (m, format!("mu({sigma}) <= {m:.6} (convexity chord)"));
        }
    }
    (0.0, format!("mu({sigma}) = 0"))
}

pub fn mu_scan(sigma: f64, t_max: f64, samples: usize) -> Result<MuScanReport> {
    if !(0.0..=1.0).contains(&sigma) {
        return Err(Error::domain(format!("sigma = {sigma} must lie in [0, 1]")));
    }
    if !(100.0..=1e4).contains(&t_max) {
        return Err(Error::domain(format!(
            "T = {t_max} must lie in [100, 10^4]"
        )));
    }
    if samples < MIN_SAMPLES {
        return Err(Error::domain(format!(
            "samples = {samples} must be at least {MIN_SAMPLES}"
        )));
    }
    let t_min = 1.0;
    let ts: Vec<f64> = (0..samples)
        .map(|i| t_min + (t_max - t_min) * (i + 1) as f64 / samples as f64)
        .collect();
    let mods: Vec<f64> = ts
        .par_iter()
        .map(|&t| Ok(zeta(ComplexPoint::new(sigma, t)?)?.norm()))
        .collect::<Result<_>>()?;
    let mut running_max = Vec::with_capacity(samples);
    let mut m = 0.0f64;
    for (t, v) in ts.iter().zip(&mods) {
        m = m.max(*v);
        running_max.push((*t, m));
    }
    let upper: Vec<(f64, f64)> = running_max
        .iter()
        .filter(|(t, _)| *t >= t_max / 2.0)
        .map(|(t, v)| (t.ln(), v.ln()))
        .collect();
    let n = upper.len() as f64;
    let mx = upper.iter().map(|p| p.0).sum::<f64>() / n;
    let my = upper.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = upper.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = upper.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    let (reference_mu, reference_label) = reference_mu(sigma);
    Ok(MuScanReport {
        sigma,
        t_min,
        t_max,
        samples,
        running_max,
        fitted_exponent: sxy / sxx,
        note: "indicative only: mu is a lim sup and is not visible at this scale",
        reference_mu,
        reference_label,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(reference_mu(0.5).0, 1.0 / 6.0);
        assert_eq!(reference_mu(0.0).0, 0.5);
        assert_eq!(reference_mu(1.0).0, 0.0);
        let (m, _) = reference_mu(0.6);
        assert!(m < 0.5 * (1.0 - 0.6) && m > 0.0);
    }

    #[test]
    fn running_max_is_monotone() {
        let r = mu_scan(0.5, 200.0, 1000).unwrap();
        assert!(r.running_max.windows(2).all(|w| w[1].1 >= w[0].1));
        assert_eq!(r.running_max.len(), 1000);
        assert!(mu_scan(0.5, 200.0, 10).is_err());
        assert!(mu_scan(1.5, 200.0, 1000).is_err());
    }
}
