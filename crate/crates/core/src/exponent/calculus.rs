//! The u_ℓ / v_ℓ exponent calculus and the density bounds built on it.
//!
//! For ℓ ≥ 1 and α_ℓ = 1 - 2^-ℓ,
//!
//! ```text
//! u_ℓ(η) = μ(α_ℓ) / (2^-ℓ - η)
//! v_ℓ(η) = u_{ℓ-1}(2η) = μ(α_{ℓ-1}) / (2(2^-ℓ - η))
//! B(η)  ≤ max(4·u_ℓ(η), 3·v_ℓ(η))
//! ```
//!
//! All values are exact rationals. Bounds are exponents only: log-power
//! factors in T are ignored throughout.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exponent::bound::{BoundExpr, BoundRecord, EtaInterval};
use crate::exponent::mu::{alpha_ell, MuTable, ELL_CAP};
use crate::rational::{int, inv_pow2, pow2, rat, to_exact_string, Rational};

fn check_cap(ell: u32) -> Result<()> {
    if ell > ELL_CAP {
        return Err(Error::Range(format!(
            "exponent table cap exceeded: ell = {ell} > {ELL_CAP}"
        )));
    }
    Ok(())
}

fn check_below_dyadic(ell: u32, eta: &Rational) -> Result<()> {
    if eta.is_negative() {
        return Err(Error::domain(format!(
            "eta must be nonnegative, got {}",
            to_exact_string(eta)
        )));
    }
    if *eta >= inv_pow2(ell) {
        return Err(Error::domain(format!(
            "eta = {} must be < 2^-{ell} = {} (denominator 2^-ell - eta would be <= 0)",
            to_exact_string(eta),
            to_exact_string(&inv_pow2(ell))
        )));
    }
    Ok(())
}

/// `u_ℓ(η) = μ̄(α_ℓ)/(2^-ℓ - η)` for `0 ≤ η < 2^-ℓ`.
///
/// η = 0 is accepted and gives the boundary value.
pub fn u_ell(ell: u32, eta: &Rational, table: &MuTable) -> Result<Rational> {
    check_cap(ell)?;
    check_below_dyadic(ell, eta)?;
    let mu = table.mu_at(&alpha_ell(ell))?;
    Ok(mu / (inv_pow2(ell) - eta))
}

/// `v_ℓ(η) = μ̄(α_{ℓ-1})/(2(2^-ℓ - η))` for ℓ ≥ 1, `0 ≤ η < 2^-ℓ`.
pub fn v_ell(ell: u32, eta: &Rational, table: &MuTable) -> Result<Rational> {
    if ell == 0 {
        return Err(Error::domain("v_ell needs ell >= 1"));
    }
    check_cap(ell)?;
    check_below_dyadic(ell, eta)?;
    let mu = table.mu_at(&alpha_ell(ell - 1))?;
    Ok(mu / (int(2) * (inv_pow2(ell) - eta)))
}

/// Open η-range on which the max-form bound is asserted for a given ℓ:
/// `η < 2^-ℓ`, additionally `η < 1/3` when ℓ ≥ 2.
pub fn max_form_validity(ell: u32) -> EtaInterval {
    let mut hi = inv_pow2(ell);
    if ell >= 2 && hi > rat(1, 3) {
        hi = rat(1, 3);
    }
    EtaInterval::open(Rational::zero(), hi)
}

/// Note attached to ℓ = 1 results with η ≥ 1/3, where the stated
/// hypotheses of the max-form bound disagree (max vs. min of 1/3 and 2^-ℓ).
pub fn max_form_validity_note(ell: u32, eta: &Rational) -> Option<String> {
    (ell == 1 && *eta >= rat(1, 3)).then(|| {
        format!(
            "eta = {} >= 1/3: the ell = 1 range eta < 1/2 is used; the proof setup assumes eta < min(1/3, 2^-ell)",
            to_exact_string(eta)
        )
    })
}

fn check_max_form(ell: u32, eta: &Rational) -> Result<()> {
    if ell == 0 {
        return Err(Error::domain("the max-form bound needs ell >= 1"));
    }
    check_cap(ell)?;
    if !eta.is_positive() {
        return Err(Error::domain(format!(
            "eta must be > 0, got {}",
            to_exact_string(eta)
        )));
    }
    let v = max_form_validity(ell);
    if !v.contains(eta) {
        return Err(Error::domain(format!(
            "eta = {} violates the validity guard eta in {v} for ell = {ell}",
            to_exact_string(eta)
        )));
    }
    Ok(())
}

/// `max(4·u_ℓ(η), 3·v_ℓ(η))`.
pub fn max_form_bound(ell: u32, eta: &Rational, table: &MuTable) -> Result<Rational> {
    check_max_form(ell, eta)?;
    let u = u_ell(ell, eta, table)?;
    let v = v_ell(ell, eta, table)?;
    Ok(std::cmp::max(int(4) * u, int(3) * v))
}

/// The max-form bound for fixed ℓ and table as a single record.
///
/// Both terms share the denominator `2^-ℓ - η`, so the maximum is
/// `max(4μ̄(α_ℓ), 3μ̄(α_{ℓ-1})/2) / (2^-ℓ - η)`.
pub fn max_form_record(ell: u32, table: &MuTable) -> Result<BoundRecord> {
    if ell == 0 {
        return Err(Error::domain("the max-form bound needs ell >= 1"));
    }
    check_cap(ell)?;
    let mu_l = table.mu_at(&alpha_ell(ell))?;
    let mu_prev = table.mu_at(&alpha_ell(ell - 1))?;
    let c = std::cmp::max(int(4) * mu_l, int(3) * mu_prev / int(2));
    Ok(BoundRecord::new(
        format!("MaxForm[l={ell}]"),
        BoundExpr::reciprocal_linear(c, inv_pow2(ell), -Rational::one()),
        max_form_validity(ell),
        "max(4u_l, 3v_l) density bound",
    ))
}

/// Closed form `4/((ℓ+2)(1 - 2^ℓ·η))` for ℓ ≥ 2 and `0 ≤ η < 2^-ℓ`.
///
/// Equals [`max_form_bound`] on the Hardy–Littlewood table since
/// `4/(ℓ+2) ≥ 3/(ℓ+1)` for ℓ ≥ 2.
pub fn closed_form_bound(ell: u32, eta: &Rational) -> Result<Rational> {
    if ell < 2 {
        return Err(Error::domain(format!(
            "the closed form needs ell >= 2, got {ell}"
        )));
    }
    check_cap(ell)?;
    check_below_dyadic(ell, eta)?;
    Ok(int(4) / (int(ell as i64 + 2) * (Rational::one() - pow2(ell) * eta)))
}

/// Closed-form record for a given ℓ ≥ 2.
pub fn closed_form_record(ell: u32) -> Result<BoundRecord> {
    if ell < 2 {
        return Err(Error::domain(format!(
            "the closed form needs ell >= 2, got {ell}"
        )));
    }
    check_cap(ell)?;
    Ok(BoundRecord::new(
        format!("HardyLittlewood[l={ell}]"),
        BoundExpr::reciprocal_linear(
            int(4),
            int(ell as i64 + 2),
            -int(ell as i64 + 2) * pow2(ell),
        ),
        EtaInterval::open(Rational::zero(), inv_pow2(ell)),
        format!("4/((l+2)(1 - 2^l eta)) with l = {ell}"),
    ))
}

/// The ℓ = 0 variant `max(4·u_0(η), 3·u_0(2η))` computed from `table`,
/// which needs nothing but a bound at α = 0.
pub fn montgomery_bound_with(eta: &Rational, table: &MuTable) -> Result<Rational> {
    if !eta.is_positive() || *eta >= rat(1, 2) {
        return Err(Error::domain(format!(
            "eta must lie in (0, 1/2), got {}",
            to_exact_string(eta)
        )));
    }
    let a = int(4) * u_ell(0, eta, table)?;
    let b = int(3) * u_ell(0, &(int(2) * eta), table)?;
    Ok(std::cmp::max(a, b))
}

/// `max(2/(1-η), 3/(2(1-2η)))` for `0 < η < 1/2`, computed from μ(0) = 1/2
/// alone.
pub fn montgomery_bound(eta: &Rational) -> Result<Rational> {
    montgomery_bound_with(eta, &MuTable::functional_equation_only())
}

/// The ℓ = 0 bound in its piecewise form: `2/(1-η)` on `(0, 1/5]`,
/// `3/(2(1-2η))` on `(1/5, 1/2)`.
pub fn montgomery_pieces() -> [BoundRecord; 2] {
    [
        BoundRecord::new(
            "Montgomery.lo",
            BoundExpr::reciprocal_linear(int(2), int(1), int(-1)),
            EtaInterval::open_closed(Rational::zero(), rat(1, 5)),
            "2/(1 - eta), eta <= 1/5",
        ),
        BoundRecord::new(
            "Montgomery.hi",
            BoundExpr::reciprocal_linear(int(3), int(2), int(-4)),
            EtaInterval::open(rat(1, 5), rat(1, 2)),
            "3/(2(1 - 2eta)), eta >= 1/5",
        ),
    ]
}

/// The ℓ in `1..=ell_max` minimizing the max-form bound at `eta`, ties
/// going to the smaller ℓ. ℓ values whose guard fails or whose μ points are
/// missing from `table` are skipped.
pub fn best_max_form(eta: &Rational, table: &MuTable, ell_max: u32) -> Result<(u32, Rational)> {
    check_cap(ell_max)?;
    if !eta.is_positive() || *eta >= rat(1, 2) {
        return Err(Error::domain(format!(
            "eta must lie in (0, 1/2), got {}",
            to_exact_string(eta)
        )));
    }
    let mut best: Option<(u32, Rational)> = None;
    for ell in 1..=ell_max {
        let Ok(v) = max_form_bound(ell, eta, table) else {
            continue;
        };
        if best.as_ref().is_none_or(|(_, b)| v < *b) {
            best = Some((ell, v));
        }
    }
    best.ok_or_else(|| {
        Error::domain(format!(
            "no ell in [1, {ell_max}] is valid at eta = {}",
            to_exact_string(eta)
        ))
    })
}

/// Asymptotic annotation `4·log 2 / log(1/η)` for small η. Report-only:
/// it hides a `(1 + o(1))` factor and never enters exact comparisons.
pub fn asymptotic_annotation(eta: f64) -> f64 {
    4.0 * std::f64::consts::LN_2 / (1.0 / eta).ln()
}

pub const PRIME_GAP_CAVEAT: &str =
    "assumes the uniform bound also covers the immediate neighbourhood of sigma = 1";

/// Prime-gap exponent `1 - 1/A` from a uniform density bound `A(σ) ≤ A`:
/// `p_{n+1} - p_n ≪ p_n^{1 - 1/A + ε}`.
pub fn prime_gap_exponent(a: &Rational) -> Result<Rational> {
    if *a < int(2) {
        return Err(Error::domain(format!(
            "A = {} is below 2; the transfer is only stated for A >= 2",
            to_exact_string(a)
        )));
    }
    Ok(Rational::one() - a.recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::mu::HypothesisMode;

    fn hl() -> MuTable {
        MuTable::hardy_littlewood()
    }

    fn lh() -> MuTable {
        MuTable::hardy_littlewood().with_mode(HypothesisMode::Lindelof)
    }

    #[test]
    fn u_examples() {
        assert_eq!(u_ell(2, &rat(1, 8), &hl()).unwrap(), rat(1, 2));
        assert_eq!(u_ell(1, &int(0), &hl()).unwrap(), rat(1, 3));
        assert_eq!(u_ell(2, &rat(1, 8), &lh()).unwrap(), int(0));
        assert!(matches!(u_ell(2, &rat(1, 4), &hl()), Err(Error::Domain(_))));
        assert!(matches!(
            u_ell(2, &rat(-1, 8), &hl()),
            Err(Error::Domain(_))
        ));
        let e = u_ell(1, &rat(1, 8), &MuTable::functional_equation_only()).unwrap_err();
        assert_eq!(
            e,
            Error::MissingMuPoint {
                alpha: "1/2".into()
            }
        );
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_ell(1, &rat(1, 8), &hl()).unwrap(), rat(2, 3));
        assert_eq!(v_ell(2, &rat(1, 8), &hl()).unwrap(), rat(2, 3));
        for ell in 2..6 {
            assert!(v_ell(ell, &inv_pow2(ell + 1), &lh()).unwrap().is_zero());
        }
        assert!(v_ell(0, &rat(1, 8), &hl()).is_err());
    }

    #[test]
    fn max_form_examples() {
        assert_eq!(max_form_bound(2, &rat(1, 8), &hl()).unwrap(), int(2));
        assert_eq!(max_form_bound(1, &rat(1, 8), &hl()).unwrap(), int(2));
        assert_eq!(max_form_bound(2, &rat(1, 8), &lh()).unwrap(), int(0));
        assert!(max_form_bound(1, &rat(1, 2), &hl()).is_err());
        assert!(max_form_bound(2, &rat(1, 4), &hl()).is_err());
        assert!(max_form_bound(0, &rat(1, 8), &hl()).is_err());
        assert!(max_form_bound(1, &int(0), &hl()).is_err());
        assert!(matches!(
            max_form_bound(41, &rat(1, 1 << 50), &hl()),
            Err(Error::Range(_))
        ));
        assert!(max_form_validity_note(1, &rat(2, 5)).is_some());
        assert!(max_form_validity_note(1, &rat(1, 4)).is_none());
    }

    #[test]
    fn record_matches_direct_evaluation() {
        for ell in 1..8 {
            let r = max_form_record(ell, &hl()).unwrap();
            for eta in r.validity.interior_samples(7) {
                assert_eq!(
                    r.eval_exact(&eta).unwrap(),
                    max_form_bound(ell, &eta, &hl()).unwrap()
                );
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_bound(2, &rat(1, 8)).unwrap(), int(2));
        assert_eq!(closed_form_bound(3, &rat(1, 24)).unwrap(), rat(6, 5));
        assert_eq!(closed_form_bound(2, &int(0)).unwrap(), int(1));
        assert!(closed_form_bound(1, &rat(1, 8)).is_err());
        assert!(closed_form_bound(3, &rat(1, 8)).is_err());
        let r = closed_form_record(3).unwrap();
        assert_eq!(r.eval_exact(&rat(1, 24)).unwrap(), rat(6, 5));
    }

    #[test]
    fn montgomery_examples() {
        assert_eq!(montgomery_bound(&rat(1, 10)).unwrap(), rat(20, 9));
        assert_eq!(montgomery_bound(&rat(1, 4)).unwrap(), int(3));
        assert_eq!(montgomery_bound(&rat(1, 5)).unwrap(), rat(5, 2));
        assert!(montgomery_bound(&rat(1, 2)).is_err());
        assert!(montgomery_bound(&int(0)).is_err());
        let [lo, hi] = montgomery_pieces();
        assert_eq!(lo.eval_exact(&rat(1, 5)).unwrap(), rat(5, 2));
        assert_eq!(hi.expr.eval_exact(&rat(1, 5)).unwrap(), rat(5, 2));
    }

    #[test]
    fn best_ell_search() {
        assert_eq!(best_max_form(&rat(1, 8), &hl(), 40).unwrap(), (1, int(2)));
        // ℓ = 2 and ℓ = 3 tie at 6/5; the smaller ℓ wins
        assert_eq!(
            best_max_form(&rat(1, 24), &hl(), 40).unwrap(),
            (2, rat(6, 5))
        );
        assert_eq!(best_max_form(&rat(1, 100), &lh(), 40).unwrap(), (2, int(0)));
        assert!(matches!(
            best_max_form(&rat(1, 8), &hl(), 41),
            Err(Error::Range(_))
        ));
        assert!(best_max_form(&rat(1, 2), &hl(), 40).is_err());
        assert!(best_max_form(&rat(1, 8), &MuTable::functional_equation_only(), 40).is_err());
    }

    #[test]
    fn prime_gaps() {
        assert_eq!(prime_gap_exponent(&rat(5, 2)).unwrap(), rat(3, 5));
        assert_eq!(prime_gap_exponent(&int(2)).unwrap(), rat(1, 2));
        assert_eq!(prime_gap_exponent(&rat(12, 5)).unwrap(), rat(7, 12));
        assert!(prime_gap_exponent(&rat(19, 10)).is_err());
    }

    #[test]
    fn asymptotic_annotation_value() {
        let x = asymptotic_annotation(1.0 / 1024.0);
        assert!((x - 0.4).abs() < 1e-12);
    }
}
