//! Certified upper bounds for the Lindelöf function μ(α).
//!
//! A [`MuTable`] is a finite set of points `(α, μ̄)` with `μ(α) ≤ μ̄`. Two
//! classical families are built in: the Hardy–Littlewood points at
//! `α = 1 - 2^-ℓ` and the van der Corput points at `α = 1 - ℓ/(2^ℓ - 2)`.
//! Tables can also be loaded from CSV and put in a hypothesis mode
//! (Lindelöf, or explicit overrides).

use std::collections::BTreeMap;
use std::fmt;
use std::io::Read;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, inv_pow2, pow2, rat, to_exact_string, Rational};

/// Largest table index accepted by the built-in families.
pub const ELL_CAP: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MuSource {
    HardyLittlewood,
    VanDerCorput,
    FunctionalEquation,
    Hypothesis,
    Custom,
}

impl MuSource {
    pub fn tag(self) -> &'static str {
        match self {
            MuSource::HardyLittlewood => "hl",
            MuSource::VanDerCorput => "vdc",
            MuSource::FunctionalEquation => "fe",
            MuSource::Hypothesis => "hypothesis",
            MuSource::Custom => "custom",
        }
    }
}

impl FromStr for MuSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "hl" | "hardylittlewood" | "hardy-littlewood" => MuSource::HardyLittlewood,
            "vdc" | "vandercorput" | "van-der-corput" => MuSource::VanDerCorput,
            "fe" | "functionalequation" | "functional-equation" => MuSource::FunctionalEquation,
            "hypothesis" | "lh" => MuSource::Hypothesis,
            "custom" => MuSource::Custom,
            other => return Err(Error::Parse(format!("unknown mu source tag `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MuPoint {
    pub alpha: Rational,
    pub mu_bound: Rational,
    pub source: MuSource,
    pub citation: String,
}

impl MuPoint {
    /// Validates `0 ≤ α ≤ 1`, `μ̄ ≥ 0` and the ceiling `μ̄ ≤ 1 - α`.
    pub fn new(
        alpha: Rational,
        mu_bound: Rational,
        source: MuSource,
        citation: impl Into<String>,
    ) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidMuPoint {
            alpha: to_exact_string(&alpha),
            reason: reason.to_string(),
        };
        if alpha.is_negative() || alpha > Rational::one() {
            return Err(bad("alpha must lie in [0, 1]"));
        }
        if mu_bound.is_negative() {
            return Err(bad("mu bound must be nonnegative"));
        }
        if mu_bound > Rational::one() - &alpha {
            return Err(bad("mu bound exceeds the ceiling 1 - alpha"));
        }
        if source == MuSource::FunctionalEquation && alpha.is_zero() && mu_bound != rat(1, 2) {
            return Err(bad("functional-equation point at alpha = 0 must be 1/2"));
        }
        Ok(MuPoint {
            alpha,
            mu_bound,
            source,
            citation: citation.into(),
        })
    }

    /// True when μ̄ lies above the convexity line `(1 - α)/2` through
    /// μ(0) = 1/2 and μ(1) = 0; such a point is legal but carries no
    /// information beyond convexity.
    pub fn above_convexity_line(&self) -> bool {
        self.mu_bound > (Rational::one() - &self.alpha) / int(2)
    }
}

/// Abscissa `α_ℓ = 1 - 2^-ℓ`.
pub fn alpha_ell(ell: u32) -> Rational {
    Rational::one() - inv_pow2(ell)
}

/// Hardy–Littlewood point `μ(1 - 2^-ℓ) ≤ 1/((ℓ+2)·2^ℓ)`. The case ℓ = 0 is
/// μ(0) = 1/2 from the functional equation.
pub fn mu_hl(ell: u32) -> Result<MuPoint> {
    if ell > ELL_CAP {
        return Err(Error::Range(format!(
            "exponent table cap exceeded: ell = {ell} > {ELL_CAP}"
        )));
    }
    let mu = (int(ell as i64 + 2) * pow2(ell)).recip();
    let (source, citation) = if ell == 0 {
        (
            MuSource::FunctionalEquation,
            "functional equation: mu(0) = 1/2",
        )
    } else {
        (MuSource::HardyLittlewood, "Hardy-Littlewood Weyl-sum bound")
    };
    MuPoint::new(alpha_ell(ell), mu, source, citation)
}

/// van der Corput point `μ(1 - ℓ/(2^ℓ - 2)) ≤ 1/(2^ℓ - 2)`, ℓ ≥ 2.
pub fn mu_vdc(ell: u32) -> Result<MuPoint> {
    if ell < 2 {
        return Err(Error::domain(format!(
            "van der Corput family needs ell >= 2, got {ell}"
        )));
    }
    if ell > ELL_CAP {
        return Err(Error::Range(format!(
            "exponent table cap exceeded: ell = {ell} > {ELL_CAP}"
        )));
    }
    let q = pow2(ell) - int(2);
    let alpha = Rational::one() - int(ell as i64) / &q;
    MuPoint::new(
        alpha,
        q.recip(),
        MuSource::VanDerCorput,
        "van der Corput bound",
    )
}

#[derive(Debug, Clone, PartialEq, Default)]
pub enum HypothesisMode {
    #[default]
    None,
    /// μ(α) = 0 for every α ≥ 1/2.
    Lindelof,
    /// Explicit overrides that replace table points at the same α.
    Custom(Vec<MuPoint>),
}

/// A finite set of μ bounds keyed by α, plus an optional hypothesis mode.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MuTable {
    points: BTreeMap<Rational, MuPoint>,
    mode: HypothesisMode,
    warnings: Vec<String>,
}

impl MuTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Hardy–Littlewood points for ℓ = 0..=40.
    pub fn hardy_littlewood() -> Self {
        let mut t = Self::new();
        for ell in 0..=ELL_CAP {
            t.insert(mu_hl(ell).expect("within cap"));
        }
        t
    }

    /// van der Corput points for ℓ = 2..=40 (ℓ = 2 is the α = 0 point).
    pub fn van_der_corput() -> Self {
        let mut t = Self::new();
        for ell in 2..=ELL_CAP {
            t.insert(mu_vdc(ell).expect("within cap"));
        }
        t
    }

    /// Only the functional-equation point μ(0) = 1/2.
    pub fn functional_equation_only() -> Self {
        let mut t = Self::new();
        t.insert(mu_hl(0).expect("ell = 0"));
        t
    }

    /// Inserts or replaces the point at `p.alpha`.
    pub fn insert(&mut self, p: MuPoint) {
        if p.above_convexity_line() {
            self.warnings.push(format!(
                "mu({}) <= {} is above the convexity line (1 - alpha)/2",
                to_exact_string(&p.alpha),
                to_exact_string(&p.mu_bound)
            ));
        }
        self.points.insert(p.alpha.clone(), p);
    }

    pub fn with_mode(mut self, mode: HypothesisMode) -> Self {
        if let HypothesisMode::Custom(ov) = &mode {
            for p in ov {
                if p.above_convexity_line() {
                    self.warnings.push(format!(
                        "override mu({}) <= {} is above the convexity line",
                        to_exact_string(&p.alpha),
                        to_exact_string(&p.mu_bound)
                    ));
                }
            }
        }
        self.mode = mode;
        self
    }

    /// Convenience: this table with a single override at `alpha`.
    pub fn with_override(self, alpha: Rational, mu_bound: Rational) -> Result<Self> {
        let p = MuPoint::new(alpha, mu_bound, MuSource::Hypothesis, "override")?;
        let mut ov = match &self.mode {
            HypothesisMode::Custom(v) => v.clone(),
            _ => Vec::new(),
        };
        ov.retain(|q| q.alpha != p.alpha);
        ov.push(p);
        Ok(self.with_mode(HypothesisMode::Custom(ov)))
    }

    pub fn mode(&self) -> &HypothesisMode {
        &self.mode
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The effective bound at `alpha` after applying the hypothesis mode.
    pub fn get(&self, alpha: &Rational) -> Option<MuPoint> {
        match &self.mode {
            HypothesisMode::Lindelof if *alpha >= rat(1, 2) => Some(MuPoint {
                alpha: alpha.clone(),
                mu_bound: Rational::zero(),
                source: MuSource::Hypothesis,
                citation: "Lindelof hypothesis".into(),
            }),
            HypothesisMode::Custom(ov) => ov
                .iter()
                .find(|p| p.alpha == *alpha)
                .cloned()
                .or_else(|| self.points.get(alpha).cloned()),
            _ => self.points.get(alpha).cloned(),
        }
    }

    pub fn mu_at(&self, alpha: &Rational) -> Result<Rational> {
        self.get(alpha)
            .map(|p| p.mu_bound)
            .ok_or_else(|| Error::MissingMuPoint {
                alpha: to_exact_string(alpha),
            })
    }

    /// Effective points, one per α, sorted by α.
    pub fn points(&self) -> Vec<MuPoint> {
        let mut alphas: Vec<Rational> = self.points.keys().cloned().collect();
        if let HypothesisMode::Custom(ov) = &self.mode {
            alphas.extend(ov.iter().map(|p| p.alpha.clone()));
        }
        alphas.sort();
        alphas.dedup();
        alphas.iter().filter_map(|a| self.get(a)).collect()
    }

    /// Parses `alpha_num,alpha_den,mu_num,mu_den,source_tag,citation_text`
    /// rows. Lines starting with `#` are ignored. Rows that violate the
    /// ceiling μ̄ ≤ 1 - α are rejected.
    pub fn from_csv_reader<R: Read>(rdr: R) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(rdr);
        let mut t = Self::new();
        for (i, rec) in reader.records().enumerate() {
            let rec = rec?;
            if rec.len() < 5 {
                return Err(Error::Parse(format!(
                    "row {}: expected 6 fields, got {}",
                    i + 1,
                    rec.len()
                )));
            }
            let field = |k: usize| -> Result<num_bigint::BigInt> {
                rec[k].parse().map_err(|_| {
                    Error::Parse(format!("row {}: field {} is not an integer", i + 1, k + 1))
                })
            };
            let (an, ad, mn, md) = (field(0)?, field(1)?, field(2)?, field(3)?);
            if ad.is_zero() || md.is_zero() {
                return Err(Error::Parse(format!("row {}: zero denominator", i + 1)));
            }
            let source: MuSource = rec[4].parse()?;
            let citation = rec.get(5).unwrap_or("").to_string();
            t.insert(MuPoint::new(
                Rational::new(an, ad),
                Rational::new(mn, md),
                source,
                citation,
            )?);
        }
        Ok(t)
    }

    pub fn from_csv_path(path: &std::path::Path) -> Result<Self> {
        Self::from_csv_reader(std::fs::File::open(path)?)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        for p in self.points() {
            w.write_record([
                p.alpha.numer().to_string(),
                p.alpha.denom().to_string(),
                p.mu_bound.numer().to_string(),
                p.mu_bound.denom().to_string(),
                p.source.tag().to_string(),
                p.citation.clone(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory")).expect("utf8")
    }
}

impl fmt::Display for MuPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mu({}) <= {} [{}]",
            to_exact_string(&self.alpha),
            to_exact_string(&self.mu_bound),
            self.source.tag()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hardy_littlewood_points() {
        let p = mu_hl(0).unwrap();
        assert_eq!((p.alpha, p.mu_bound), (int(0), rat(1, 2)));
        assert_eq!(p.source, MuSource::FunctionalEquation);
        let p = mu_hl(1).unwrap();
        assert_eq!((p.alpha, p.mu_bound), (rat(1, 2), rat(1, 6)));
        let p = mu_hl(2).unwrap();
        assert_eq!((p.alpha, p.mu_bound), (rat(3, 4), rat(1, 16)));
        assert!(matches!(mu_hl(41), Err(Error::Range(_))));
    }

    #[test]
    fn van_der_corput_points() {
        let p = mu_vdc(2).unwrap();
        assert_eq!((p.alpha, p.mu_bound), (int(0), rat(1, 2)));
        let p = mu_vdc(3).unwrap();
        assert_eq!((p.alpha, p.mu_bound), (rat(1, 2), rat(1, 6)));
        let p = mu_vdc(4).unwrap();
        assert_eq!((p.alpha, p.mu_bound), (rat(5, 7), rat(1, 14)));
        assert!(matches!(mu_vdc(1), Err(Error::Domain(_))));
        assert!(matches!(mu_vdc(41), Err(Error::Range(_))));
    }

    #[test]
    fn ceiling_is_enforced() {
        let e = MuPoint::new(rat(3, 4), rat(1, 2), MuSource::Custom, "");
        assert!(matches!(e, Err(Error::InvalidMuPoint { .. })));
        let ok = MuPoint::new(rat(3, 4), rat(1, 5), MuSource::Custom, "").unwrap();
        assert!(ok.above_convexity_line());
        assert!(MuPoint::new(int(0), rat(1, 3), MuSource::FunctionalEquation, "").is_err());
    }

    #[test]
    fn lindelof_mode_zeroes_right_half() {
        let t = MuTable::hardy_littlewood().with_mode(HypothesisMode::Lindelof);
        assert_eq!(t.mu_at(&rat(1, 2)).unwrap(), int(0));
        assert_eq!(t.mu_at(&rat(3, 4)).unwrap(), int(0));
        assert_eq!(t.mu_at(&rat(5, 7)).unwrap(), int(0));
        assert_eq!(t.mu_at(&int(0)).unwrap(), rat(1, 2));
    }

    #[test]
    fn overrides_replace() {
        let t = MuTable::hardy_littlewood()
            .with_override(rat(1, 2), rat(3, 16))
            .unwrap()
            .with_override(rat(1, 2), rat(1, 5))
            .unwrap();
        assert_eq!(t.mu_at(&rat(1, 2)).unwrap(), rat(1, 5));
        let n = t.points().iter().filter(|p| p.alpha == rat(1, 2)).count();
        assert_eq!(n, 1);
        assert_eq!(t.points().len(), 41);
    }

    #[test]
    fn missing_point_names_alpha() {
        let t = MuTable::functional_equation_only();
        let e = t.mu_at(&rat(1, 2)).unwrap_err();
        assert_eq!(
            e,
            Error::MissingMuPoint {
                alpha: "1/2".into()
            }
        );
    }

    #[test]
    fn csv_ingestion() {
        let src = "# alpha_num,alpha_den,mu_num,mu_den,source,citation\n\
                   0,1,1,2,fe,functional equation\n\
                   1,2,3,16,custom,\"hypothetical, for testing\"\n";
        let t = MuTable::from_csv_reader(src.as_bytes()).unwrap();
        assert_eq!(t.mu_at(&rat(1, 2)).unwrap(), rat(3, 16));
        assert_eq!(
            t.get(&rat(1, 2)).unwrap().citation,
            "hypothetical, for testing"
        );
        let back = MuTable::from_csv_reader(t.to_csv().as_bytes()).unwrap();
        assert_eq!(back.points(), t.points());

        let bad = "3,4,1,2,custom,too big\n";
        assert!(matches!(
            MuTable::from_csv_reader(bad.as_bytes()),
            Err(Error::InvalidMuPoint { .. })
        ));
        assert!(MuTable::from_csv_reader("1,2,x,6,hl,\n".as_bytes()).is_err());
        assert!(MuTable::from_csv_reader("1,2,1,6,zz,\n".as_bytes()).is_err());
    }
}
