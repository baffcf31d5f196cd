//! Named density bounds B(η) ≤ f(η), σ = 1 - η.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exponent::bound::{BoundExpr, BoundRecord, EtaInterval, Value};
use crate::exponent::calculus::montgomery_pieces;
use crate::rational::{int, rat, to_exact_string, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    /// A(σ) ≤ 4σ, i.e. 4(1 - η).
    Carlson,
    /// A(σ) ≤ 3/(2 - σ), i.e. 3/(1 + η).
    Ingham,
    /// A(σ) ≤ 12/5 for σ > 1/2.
    Huxley,
    /// B(η) ≤ 1.2·10^5·η^(1/2).
    HalaszTuran,
    /// B(η) ≤ 1/η from N(σ, T) ≤ N(T).
    Trivial,
    /// A(σ) ≤ 2; a conjecture, kept out of the default registry.
    DensityHypothesis,
    /// Max-form bound at ℓ = 1: 3/(2(1 - 2η)) for η < 1/2.
    MaxFormL1,
    /// Max-form bound at ℓ = 2: 1/(1 - 4η) for η < 1/4.
    MaxFormL2,
    /// Max-form bound at ℓ = 3: 4/(5(1 - 8η)) for η < 1/8.
    MaxFormL3,
    /// ℓ = 0 bound max(2/(1-η), 3/(2(1-2η))), split at η = 1/5.
    Montgomery,
}

impl BoundId {
    pub const ALL: [BoundId; 10] = [
        BoundId::Carlson,
        BoundId::Ingham,
        BoundId::Huxley,
        BoundId::HalaszTuran,
        BoundId::Trivial,
        BoundId::DensityHypothesis,
        BoundId::MaxFormL1,
        BoundId::MaxFormL2,
        BoundId::MaxFormL3,
        BoundId::Montgomery,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Carlson => "Carlson",
            BoundId::Ingham => "Ingham",
            BoundId::Huxley => "Huxley",
            BoundId::HalaszTuran => "HalaszTuran",
            BoundId::Trivial => "Trivial",
            BoundId::DensityHypothesis => "DensityHypothesis",
            BoundId::MaxFormL1 => "MaxForm-l1",
            BoundId::MaxFormL2 => "MaxForm-l2",
            BoundId::MaxFormL3 => "MaxForm-l3",
            BoundId::Montgomery => "Montgomery",
        }
    }

    /// The record(s) realizing this bound. Piecewise bounds give one record
    /// per piece.
    pub fn records(self) -> Vec<BoundRecord> {
        let full = EtaInterval::full;
        let zero = Rational::zero;
        let one_rec = |expr, validity, citation: &str| {
            vec![BoundRecord::new(self.as_str(), expr, validity, citation)]
        };
        match self {
            BoundId::Carlson => one_rec(
                BoundExpr::linear_fractional(int(4), int(-4), int(1), int(0)),
                full(),
                "Carlson: A(sigma) <= 4 sigma",
            ),
            BoundId::Ingham => one_rec(
                BoundExpr::reciprocal_linear(int(3), int(1), int(1)),
                full(),
                "Ingham: A(sigma) <= 3/(2 - sigma)",
            ),
            BoundId::Huxley => one_rec(
                BoundExpr::constant(rat(12, 5)),
                EtaInterval::open(zero(), rat(1, 2)),
                "Huxley: A(sigma) <= 12/5 for sigma > 1/2",
            ),
            BoundId::HalaszTuran => one_rec(
                BoundExpr::power_law(int(120_000), rat(1, 2)),
                full(),
                "Halasz-Turan: B(eta) <= 1.2e5 eta^(1/2)",
            ),
            BoundId::Trivial => one_rec(
                BoundExpr::reciprocal_linear(int(1), int(0), int(1)),
                full(),
                "trivial: N(sigma, T) <= N(T) << T^(1+o(1))",
            ),
            BoundId::DensityHypothesis => one_rec(
                BoundExpr::constant(int(2)),
                full(),
                "density hypothesis: A(sigma) <= 2 (conjectural)",
            ),
            BoundId::MaxFormL1 => one_rec(
                BoundExpr::reciprocal_linear(int(3), int(2), int(-4)),
                EtaInterval::open(zero(), rat(1, 2)),
                "max-form bound, l = 1: 3/(2(1 - 2eta))",
            ),
            BoundId::MaxFormL2 => one_rec(
                BoundExpr::reciprocal_linear(int(1), int(1), int(-4)),
                EtaInterval::open(zero(), rat(1, 4)),
                "max-form bound, l = 2: 1/(1 - 4eta)",
            ),
            BoundId::MaxFormL3 => one_rec(
                BoundExpr::reciprocal_linear(int(4), int(5), int(-40)),
                EtaInterval::open(zero(), rat(1, 8)),
                "max-form bound, l = 3: 4/(5(1 - 8eta))",
            ),
            BoundId::Montgomery => montgomery_pieces().to_vec(),
        }
    }

    /// Union of the validity intervals of the pieces.
    pub fn validity(self) -> EtaInterval {
        let recs = self.records();
        let first = &recs[0].validity;
        let last = &recs[recs.len() - 1].validity;
        EtaInterval::new(
            first.lo.clone(),
            last.hi.clone(),
            first.lo_closed,
            last.hi_closed,
        )
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        BoundId::ALL
            .into_iter()
            .find(|id| {
                id.as_str()
                    .chars()
                    .filter(|c| c.is_ascii_alphanumeric())
                    .collect::<String>()
                    .to_ascii_lowercase()
                    == key
            })
            .or(match key.as_str() {
                "dh" => Some(BoundId::DensityHypothesis),
                "halasz" | "ht" => Some(BoundId::HalaszTuran),
                "l1" => Some(BoundId::MaxFormL1),
                "l2" => Some(BoundId::MaxFormL2),
                "l3" => Some(BoundId::MaxFormL3),
                _ => None,
            })
            .ok_or_else(|| Error::Parse(format!("unknown bound id `{s}`")))
    }
}

/// All proven bounds (everything but the density hypothesis), flattened
/// into records.
pub fn default_registry() -> Vec<BoundRecord> {
    BoundId::ALL
        .into_iter()
        .filter(|id| *id != BoundId::DensityHypothesis)
        .flat_map(BoundId::records)
        .collect()
}

pub fn records_for(ids: &[BoundId]) -> Vec<BoundRecord> {
    ids.iter().flat_map(|id| id.records()).collect()
}

/// Value of a named bound at `eta`. Exact for linear-fractional records, a
/// certified enclosure for the power law. Outside the validity interval
/// this is an error, never +∞.
pub fn named_bound(id: BoundId, eta: &Rational) -> Result<Value> {
    let full = EtaInterval::full();
    if !full.contains(eta) {
        return Err(Error::domain(format!(
            "eta must lie in {full}, got {}",
            to_exact_string(eta)
        )));
    }
    id.records()
        .iter()
        .find(|r| r.is_valid_at(eta))
        .ok_or_else(|| {
            Error::domain(format!(
                "{id} is only asserted for eta in {}, got {}",
                id.validity(),
                to_exact_string(eta)
            ))
        })?
        .value(eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::calculus::{max_form_bound, montgomery_bound};
    use crate::exponent::mu::MuTable;

    fn exact(id: BoundId, eta: Rational) -> Rational {
        named_bound(id, &eta).unwrap().exact().unwrap().clone()
    }

    #[test]
    fn examples() {
        assert_eq!(exact(BoundId::MaxFormL2, rat(1, 8)), int(2));
        assert_eq!(exact(BoundId::Montgomery, rat(1, 5)), rat(5, 2));
        assert_eq!(exact(BoundId::Ingham, rat(1, 4)), rat(12, 5));
        assert_eq!(exact(BoundId::Carlson, rat(1, 4)), int(3));
        assert_eq!(exact(BoundId::Huxley, rat(1, 3)), rat(12, 5));
        assert_eq!(exact(BoundId::Trivial, rat(2, 7)), rat(7, 2));
        assert_eq!(exact(BoundId::HalaszTuran, rat(1, 4)), int(60_000));
        assert!(named_bound(BoundId::HalaszTuran, &rat(1, 3))
            .unwrap()
            .exact()
            .is_none());
    }

    #[test]
    fn both_branches_agree_at_branch_point() {
        let [lo, hi] = montgomery_pieces();
        let eta = rat(1, 5);
        assert_eq!(
            lo.expr.eval_exact(&eta).unwrap(),
            hi.expr.eval_exact(&eta).unwrap()
        );
    }

    #[test]
    fn outside_validity_is_an_error() {
        assert!(named_bound(BoundId::MaxFormL3, &rat(1, 8)).is_err());
        assert!(named_bound(BoundId::Huxley, &rat(1, 2)).is_err());
        assert!(named_bound(BoundId::Carlson, &int(0)).is_err());
        assert!(named_bound(BoundId::Carlson, &rat(3, 5)).is_err());
    }

    #[test]
    fn named_forms_match_the_calculus() {
        let hl = MuTable::hardy_littlewood();
        for k in 1..40 {
            let eta = rat(k, 80);
            assert_eq!(
                exact(BoundId::MaxFormL1, eta.clone()),
                max_form_bound(1, &eta, &hl).unwrap()
            );
            assert_eq!(
                exact(BoundId::Montgomery, eta.clone()),
                montgomery_bound(&eta).unwrap()
            );
            if eta < rat(1, 4) {
                assert_eq!(
                    exact(BoundId::MaxFormL2, eta.clone()),
                    max_form_bound(2, &eta, &hl).unwrap()
                );
            }
            if eta < rat(1, 8) {
                assert_eq!(
                    exact(BoundId::MaxFormL3, eta.clone()),
                    max_form_bound(3, &eta, &hl).unwrap()
                );
            }
        }
    }

    #[test]
    fn ids_parse() {
        for id in BoundId::ALL {
            assert_eq!(id.as_str().parse::<BoundId>().unwrap(), id);
        }
        assert_eq!("maxform-l2".parse::<BoundId>().unwrap(), BoundId::MaxFormL2);
        assert_eq!("DH".parse::<BoundId>().unwrap(), BoundId::DensityHypothesis);
        assert!("nope".parse::<BoundId>().is_err());
    }

    #[test]
    fn default_registry_excludes_conjecture() {
        let reg = default_registry();
        assert!(reg.iter().all(|r| r.name != "DensityHypothesis"));
        assert_eq!(reg.len(), 10);
    }
}
