//! Zero counting on the critical line.
//!
//! Zeros are located as sign changes of Z(t) on a uniform grid and refined
//! by bisection. The count is compared with the Riemann–von Mangoldt main
//! term θ(T)/π + 1, and (for certification) with the exact count
//! N(T) = θ(T)/π + 1 + S(T), where S(T) = arg ζ(1/2 + iT)/π is obtained by
//! following arg ζ continuously along the segment from 2 + iT to 1/2 + iT.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::riemann_siegel::{riemann_siegel_z, theta_from_gamma};
use crate::numerics::zeta::{zeta, ComplexPoint};

pub const GRID_START: f64 = 10.0;
pub const DEFAULT_GRID_STEP: f64 = 0.05;
pub const ZERO_ISOLATION: f64 = 1e-6;
pub const MAX_COUNT_HEIGHT: f64 = 1e4;
/// |count - main term| above this flags possibly missed zeros.
pub const DISCREPANCY_LIMIT: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroCountReport {
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "count")]
    pub sign_change_count: usize,
    #[serde(rename = "rvm")]
    pub rvm_main_term: f64,
    pub discrepancy: f64,
    #[serde(skip)]
    pub grid_step: f64,
    /// Zero ordinates, each isolated to within 10^-6.
    #[serde(skip)]
    pub zeros: Vec<f64>,
    #[serde(skip)]
    pub warning: Option<String>,
}

/// θ(T)/π + 1.
pub fn rvm_main_term(t: f64) -> f64 {
    theta_from_gamma(t) / PI + 1.0
}

/// Grid 10, 10 + h, 10 + 2h, ... below T, then T itself. Halving `h` gives
/// a superset of the points.
fn grid(t_max: f64, h: f64) -> Vec<f64> {
    let mut pts = Vec::new();
    let mut k = 0u64;
    loop {
        let t = GRID_START + k as f64 * h;
        if t >= t_max {
            break;
        }
        pts.push(t);
        k += 1;
    }
    pts.push(t_max);
    pts
}

fn bisect_zero(mut lo: f64, mut hi: f64, mut z_lo: f64) -> Result<f64> {
    while hi - lo > ZERO_ISOLATION {
        let m = 0.5 * (lo + hi);
        let zm = riemann_siegel_z(m)?;
        if zm == 0.0 {
            return Ok(m);
        }
        if (zm > 0.0) == (z_lo > 0.0) {
            lo = m;
            z_lo = zm;
        } else {
            hi = m;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Counts sign changes of Z on [10, T]. No zero has ordinate in [0, 10],
/// so this is the full N(T) when no zeros are missed.
pub fn count_zeros(t_max: f64, grid_step: f64) -> Result<ZeroCountReport> {
    if !(GRID_START..=MAX_COUNT_HEIGHT).contains(&t_max) {
        return Err(Error::domain(format!(
            "T = {t_max} must lie in [{GRID_START}, {MAX_COUNT_HEIGHT}]"
        )));
    }
    if !(grid_step > 0.0 && grid_step <= 0.1) {
        return Err(Error::domain(format!(
            "grid_step = {grid_step} must lie in (0, 0.1]"
        )));
    }
    let pts = grid(t_max, grid_step);
    let vals: Vec<f64> = pts
        .par_iter()
        .map(|&t| riemann_siegel_z(t))
        .collect::<Result<_>>()?;
    let brackets: Vec<usize> = (0..pts.len() - 1)
        .filter(|&i| vals[i] * vals[i + 1] < 0.0)
        .collect();
    let zeros: Vec<f64> = brackets
        .par_iter()
        .map(|&i| bisect_zero(pts[i], pts[i + 1], vals[i]))
        .collect::<Result<_>>()?;
    let rvm = rvm_main_term(t_max);
    let count = zeros.len();
    let discrepancy = count as f64 - rvm;
    let warning = (discrepancy.abs() > DISCREPANCY_LIMIT)
        .then(|| "possible missed zeros; decrease grid_step".to_string());
    Ok(ZeroCountReport {
        t: t_max,
        sign_change_count: count,
        rvm_main_term: rvm,
        discrepancy,
        grid_step,
        zeros,
        warning,
    })
}

/// S(T) = arg ζ(1/2 + iT)/π, with arg followed continuously from σ = 2
/// (where Re ζ > 0) to σ = 1/2.
pub fn s_of_t(t: f64) -> Result<f64> {
    let z_at = |sigma: f64| -> Result<Complex64> { zeta(ComplexPoint::new(sigma, t)?) };
    let end = z_at(0.5)?;
    if end.norm() < 1e-8 {
        return Err(Error::domain(format!(
            "T = {t} is too close to a zero ordinate for S(T)"
        )));
    }
    let mut sigma = 2.0;
    let mut prev = z_at(sigma)?;
    let mut arg = prev.arg();
    let mut h = 0.05;
    while sigma > 0.5 {
        let next_sigma = (sigma - h).max(0.5);
        let cur = z_at(next_sigma)?;
        let delta = (cur / prev).arg();
        if delta.abs() > PI / 8.0 && h > 1e-6 {
            h *= 0.5;
            continue;
        }
        arg += delta;
        prev = cur;
        sigma = next_sigma;
        if delta.abs() < PI / 32.0 {
            h = (h * 2.0).min(0.05);
        }
    }
    Ok(arg / PI)
}

/// N(T) = θ(T)/π + 1 + S(T), a real number that should be within
/// rounding of an integer.
pub fn argument_principle_count(t: f64) -> Result<f64> {
    Ok(rvm_main_term(t) + s_of_t(t)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// Every zero up to T is accounted for on the critical line.
    Certified,
    /// Some zeros were not located on the line; the value is an upper bound.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SigmaCount {
    pub sigma: f64,
    #[serde(rename = "T")]
    pub t: f64,
    /// 0 when certified, else an upper bound for N(σ, T).
    pub value: usize,
    pub certificate: Certificate,
    pub on_line: usize,
    pub total: f64,
    pub grid_step: f64,
}

/// Finest grid tried by [`empirical_n_sigma_t`].
pub const FINEST_GRID_STEP: f64 = DEFAULT_GRID_STEP / 16.0;

/// N(σ, T) for 1/2 < σ < 1 at desk scale.
///
/// Returns 0 with [`Certificate::Certified`] when the sign changes of Z up
/// to T match the argument-principle count N(T) to within 1/2, refining the
/// grid down to [`FINEST_GRID_STEP`] if needed. Otherwise returns the bound
/// (N(T) - on-line count)/2: zeros off the line come in pairs mirrored in
/// σ = 1/2, and only one of each pair has β > 1/2.
pub fn empirical_n_sigma_t(sigma: f64, t: f64) -> Result<SigmaCount> {
    if !(sigma > 0.5 && sigma < 1.0) {
        return Err(Error::domain(format!(
            "sigma = {sigma} must lie in (1/2, 1)"
        )));
    }
    let total = argument_principle_count(t)?;
    let mut step = DEFAULT_GRID_STEP;
    loop {
        let rep = count_zeros(t, step)?;
        let gap = total - rep.sign_change_count as f64;
        if gap.abs() <= 0.5 {
            return Ok(SigmaCount {
                sigma,
                t,
                value: 0,
                certificate: Certificate::Certified,
                on_line: rep.sign_change_count,
                total,
                grid_step: step,
            });
        }
        if step <= FINEST_GRID_STEP {
            return Ok(SigmaCount {
                sigma,
                t,
                value: (gap.max(0.0) / 2.0).ceil() as usize,
                certificate: Certificate::Unresolved,
                on_line: rep.sign_change_count,
                total,
                grid_step: step,
            });
        }
        step *= 0.5;
    }
}

/// `(T, N(T) / ((T/2π) log T))` for each T in [100, 10^4].
pub fn check_asymptotic(t_list: &[f64]) -> Result<Vec<(f64, f64)>> {
    t_list
        .iter()
        .map(|&t| {
            if !(100.0..=MAX_COUNT_HEIGHT).contains(&t) {
                return Err(Error::domain(format!("T = {t} must lie in [100, 10^4]")));
            }
            let rep = count_zeros(t, DEFAULT_GRID_STEP)?;
            Ok((t, rep.sign_change_count as f64 / main_asymptotic(t)))
        })
        .collect()
}

/// (T/2π)·log T.
pub fn main_asymptotic(t: f64) -> f64 {
    t / (2.0 * PI) * t.ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_heights() {
        assert_eq!(count_zeros(10.0, 0.05).unwrap().sign_change_count, 0);
        let r = count_zeros(15.0, 0.05).unwrap();
        assert_eq!(r.sign_change_count, 1);
        assert!((r.zeros[0] - 14.134_725_141_734_693).abs() < 2e-6);
        assert!(r.zeros[0] > 14.0 && r.zeros[0] < 14.3);
    }

    #[test]
    fn first_hundred() {
        let r = count_zeros(100.0, 0.05).unwrap();
        assert_eq!(r.sign_change_count, 29);
        assert!(r.discrepancy.abs() <= 2.0);
        assert!(r.warning.is_none());
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["count"], 29);
        assert_eq!(j.as_object().unwrap().len(), 4);
    }

    #[test]
    fn preconditions() {
        assert!(count_zeros(9.0, 0.05).is_err());
        assert!(count_zeros(2e4, 0.05).is_err());
        assert!(count_zeros(100.0, 0.2).is_err());
        assert!(count_zeros(100.0, 0.0).is_err());
        assert!(empirical_n_sigma_t(0.5, 100.0).is_err());
        assert!(check_asymptotic(&[50.0]).is_err());
    }

    #[test]
    fn grid_halving_is_a_superset() {
        let a = grid(30.0, 0.1);
        let b = grid(30.0, 0.05);
        assert!(a.iter().all(|x| b.contains(x)));
    }

    #[test]
    fn argument_principle_matches_known_counts() {
        let n = argument_principle_count(100.0).unwrap();
        assert!((n - 29.0).abs() < 1e-6, "{n}");
        let n = argument_principle_count(50.0).unwrap();
        assert!((n - 10.0).abs() < 1e-6, "{n}");
    }

    #[test]
    fn sigma_count_certified() {
        let c = empirical_n_sigma_t(0.75, 100.0).unwrap();
        assert_eq!(c.value, 0);
        assert_eq!(c.certificate, Certificate::Certified);
        assert_eq!(c.on_line, 29);
    }
}
