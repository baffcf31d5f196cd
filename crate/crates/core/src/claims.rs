//! Re-derivation of the checkable statements about the density bounds.
//!
//! Each claim is recomputed from scratch in exact arithmetic and reported
//! with the exact values it used. Claims about named bounds read their
//! records from the registry passed to [`run_all`]; claims about the
//! exponent calculus read the μ table.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::exponent::bound::{BoundRecord, EtaInterval};
use crate::exponent::calculus::{
    closed_form_bound, max_form_bound, max_form_record, montgomery_bound, montgomery_pieces,
    prime_gap_exponent,
};
use crate::exponent::crossover::{crossover, crossover_exprs, default_width, Crossover};
use crate::exponent::envelope::{dh_break_range, envelope, sup_a, trivial_from};
use crate::exponent::mu::{HypothesisMode, MuTable};
use crate::rational::{int, rat, to_exact_string, Rational};

pub const CLAIM_COUNT: usize = 15;

/// `(id, statement, anchor)` for every claim. The anchor is the formula or
/// range the claim is about.
pub const CLAIMS: [(&str, &str, &str); CLAIM_COUNT] = [
    (
        "C1",
        "max-form bound on the Hardy-Littlewood table equals the closed form for l in [2, 20]",
        "B(eta) <= 4/((l+2)(1 - 2^l eta))",
    ),
    (
        "C2",
        "the l = 2 bound implies the density hypothesis exactly on (0, 1/8]",
        "1/(1 - 4eta) <= 2 iff eta <= 1/8",
    ),
    (
        "C3",
        "the l = 3 bound implies the density hypothesis exactly on (0, 3/40]",
        "4/(5(1 - 8eta)) <= 2 iff eta <= 3/40",
    ),
    (
        "C4",
        "the l = 3 bound is sharper than the l = 2 bound exactly below 1/24",
        "4/(5(1 - 8eta)) < 1/(1 - 4eta) iff eta < 1/24",
    ),
    (
        "C5",
        "the l = 1 bound implies the density hypothesis exactly on (0, 1/8]",
        "3/(2(1 - 2eta)) <= 2 iff eta <= 1/8",
    ),
    (
        "C6",
        "the l = 1 bound is weaker than the l = 2 bound below 1/8 and stronger above",
        "3/(2(1 - 2eta)) = 1/(1 - 4eta) at eta = 1/8",
    ),
    (
        "C7",
        "the l = 1 bound is trivial from 2/7 on and non-trivial on (1/4, 2/7)",
        "3/(2(1 - 2eta)) >= 1/eta iff eta >= 2/7",
    ),
    (
        "C8",
        "the two branches of the l = 0 bound meet at 1/5",
        "2/(1 - eta) = 3/(2(1 - 2eta)) at eta = 1/5",
    ),
    (
        "C9",
        "the l = 0 max-form equals its piecewise form on 100 sample rationals",
        "max(4u_0(eta), 3u_0(2eta))",
    ),
    (
        "C10",
        "2/(1 - eta) exceeds 2 + 2eta by 2eta^2/(1 - eta)",
        "2/(1 - eta) = 2 + 2eta + O(eta^2)",
    ),
    (
        "C11",
        "the envelope of Ingham and the l = 0 bound has supremum 5/2",
        "A(sigma) <= 5/2",
    ),
    (
        "C12",
        "a uniform bound 5/2 gives prime-gap exponent 3/5",
        "p_{n+1} - p_n << p_n^{1 - 1/A + eps}",
    ),
    (
        "C13",
        "under the Lindelof hypothesis the l = 2 bound vanishes for eta < 1/4",
        "u_l(eta) = v_l(eta) = 0 for eta < 1/4",
    ),
    (
        "C14",
        "mu(1/2) <= 3/16 already gives the l = 1 bound",
        "mu(1/2) <= 3/16 => B(eta) <= 3/(2(1 - 2eta))",
    ),
    (
        "C15",
        "mu(1/2) <= 1/4 - c2 with c2 > 0 gives a nonempty density-hypothesis range at l = 1",
        "mu(1/2) <= 1/4 - c2 => B(eta) <= 2 for small eta",
    ),
];

const _: () = {
    let mut i = 0;
    while i < CLAIM_COUNT {
        assert!(!CLAIMS[i].0.is_empty());
        assert!(!CLAIMS[i].1.is_empty());
        assert!(!CLAIMS[i].2.is_empty());
        i += 1;
    }
};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    ExactPass,
    NumericPass { tolerance: f64 },
    Fail { witness: String },
    Skipped { note: String },
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::ExactPass => "ExactPass",
            Verdict::NumericPass { .. } => "NumericPass",
            Verdict::Fail { .. } => "Fail",
            Verdict::Skipped { .. } => "Skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim_id: &'static str,
    pub statement: &'static str,
    pub anchor: &'static str,
    pub verdict: Verdict,
    /// Exact values used, as `num/den` strings.
    pub witness: BTreeMap<String, String>,
}

impl ClaimResult {
    pub fn summary_line(&self) -> String {
        let extra = match &self.verdict {
            Verdict::Fail { witness } => format!(" ({witness})"),
            Verdict::Skipped { note } => format!(" ({note})"),
            Verdict::NumericPass { tolerance } => format!(" (tol {tolerance:e})"),
            Verdict::ExactPass => String::new(),
        };
        format!(
            "{:<4} {:<11} {}{extra}",
            self.claim_id,
            self.verdict.label(),
            self.statement
        )
    }
}

/// Outcome of one claim body before it is wrapped with its metadata.
struct Check {
    witness: BTreeMap<String, String>,
    failure: Option<String>,
    skipped: Option<String>,
}

impl Check {
    fn new() -> Self {
        Check {
            witness: BTreeMap::new(),
            failure: None,
            skipped: None,
        }
    }

    fn note(&mut self, key: &str, value: impl ToString) {
        self.witness.insert(key.to_string(), value.to_string());
    }

    fn exact(&mut self, key: &str, value: &Rational) {
        self.note(key, to_exact_string(value));
    }

    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    fn expect_eq(&mut self, what: &str, got: &Rational, want: &Rational) {
        self.require(got == want, || {
            format!(
                "{what}: got {}, expected {}",
                to_exact_string(got),
                to_exact_string(want)
            )
        });
    }
}

fn find<'a>(registry: &'a [BoundRecord], name: &str) -> Result<&'a BoundRecord> {
    registry
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| crate::Error::domain(format!("record {name} missing from registry")))
}

fn exact_single_root(c: &Crossover) -> Option<Rational> {
    match c.exact_roots() {
        Some(v) if v.len() == 1 => Some(v[0].clone()),
        _ => None,
    }
}

fn dh_claim(c: &mut Check, registry: &[BoundRecord], name: &str, hi: Rational) -> Result<()> {
    let rec = find(registry, name)?;
    let dh = dh_break_range(rec)?;
    let want = EtaInterval::open_closed(Rational::zero(), hi);
    let got = dh.range.clone();
    c.note("record", name);
    c.note(
        "dh_range",
        got.as_ref().map_or("empty".into(), |r| r.to_string()),
    );
    c.require(dh.exact && got.as_ref() == Some(&want), || {
        format!("dh range of {name} is not {want}")
    });
    Ok(())
}

fn samples(lo: &Rational, hi: &Rational, n: i64) -> Vec<Rational> {
    (1..=n).map(|k| lo + (hi - lo) * rat(k, n + 1)).collect()
}

fn c1(table: &MuTable) -> Result<Check> {
    let mut c = Check::new();
    if *table.mode() == HypothesisMode::Lindelof {
        c.skipped = Some("Hardy-Littlewood table replaced by the Lindelof mode".into());
        return Ok(c);
    }
    let mut checked = 0;
    'outer: for ell in 2..=20u32 {
        let cap = crate::rational::inv_pow2(ell);
        for eta in samples(&Rational::zero(), &cap, 10) {
            let got = match max_form_bound(ell, &eta, table) {
                Ok(v) => v,
                Err(e) => {
                    c.require(false, || {
                        format!("l = {ell}, eta = {}: {e}", to_exact_string(&eta))
                    });
                    break 'outer;
                }
            };
            let want = closed_form_bound(ell, &eta)?;
            if got != want {
                c.note("l", ell);
                c.exact("eta", &eta);
                c.exact("max_form", &got);
                c.exact("closed_form", &want);
                c.require(false, || {
                    format!(
                        "l = {ell}, eta = {}: max form {} != closed form {}",
                        to_exact_string(&eta),
                        to_exact_string(&got),
                        to_exact_string(&want)
                    )
                });
                break 'outer;
            }
            checked += 1;
        }
    }
    if c.failure.is_none() {
        c.note("points_checked", checked);
    }
    Ok(c)
}

fn crossing_claim(
    c: &mut Check,
    registry: &[BoundRecord],
    a: &str,
    b: &str,
    root: Rational,
) -> Result<(BoundRecord, BoundRecord)> {
    let ra = find(registry, a)?.clone();
    let rb = find(registry, b)?.clone();
    let cross = crossover(&ra, &rb, &EtaInterval::full(), &default_width())?;
    let got = exact_single_root(&cross);
    c.note(
        "crossing",
        got.as_ref().map_or("none".into(), to_exact_string),
    );
    c.require(got.as_ref() == Some(&root), || {
        format!(
            "{a} and {b} do not cross exactly once at {}",
            to_exact_string(&root)
        )
    });
    Ok((ra, rb))
}

fn strictly_less(c: &mut Check, a: &BoundRecord, b: &BoundRecord, eta: &Rational) -> Result<()> {
    let va = a.eval_exact(eta)?;
    let vb = b.eval_exact(eta)?;
    c.exact(&format!("{}({})", a.name, to_exact_string(eta)), &va);
    c.exact(&format!("{}({})", b.name, to_exact_string(eta)), &vb);
    c.require(va < vb, || {
        format!(
            "{} is not below {} at {}",
            a.name,
            b.name,
            to_exact_string(eta)
        )
    });
    Ok(())
}

fn c4(registry: &[BoundRecord]) -> Result<Check> {
    let mut c = Check::new();
    let (l2, l3) = crossing_claim(&mut c, registry, "MaxForm-l2", "MaxForm-l3", rat(1, 24))?;
    strictly_less(&mut c, &l3, &l2, &rat(1, 48))?;
    strictly_less(&mut c, &l2, &l3, &rat(1, 12))?;
    let env = envelope(&[l2, l3], &EtaInterval::open(Rational::zero(), rat(1, 8)))?;
    let names: Vec<&str> = env.segments.iter().map(|s| s.winner.as_str()).collect();
    c.note("envelope", names.join(","));
    c.require(
        names == ["MaxForm-l3", "MaxForm-l2"] && env.segments[0].hi == rat(1, 24),
        || "envelope on (0, 1/8) is not l3 then l2 split at 1/24".into(),
    );
    Ok(c)
}

fn c6(registry: &[BoundRecord]) -> Result<Check> {
    let mut c = Check::new();
    let (l1, l2) = crossing_claim(&mut c, registry, "MaxForm-l1", "MaxForm-l2", rat(1, 8))?;
    strictly_less(&mut c, &l2, &l1, &rat(1, 16))?;
    strictly_less(&mut c, &l1, &l2, &rat(3, 16))?;
    Ok(c)
}

fn c7(registry: &[BoundRecord]) -> Result<Check> {
    let mut c = Check::new();
    let l1 = find(registry, "MaxForm-l1")?;
    let from = trivial_from(l1)?;
    c.note(
        "trivial_from",
        from.as_ref().map_or("none".into(), to_exact_string),
    );
    c.require(from == Some(rat(2, 7)), || {
        "l = 1 bound does not meet 1/eta at 2/7".into()
    });
    for eta in samples(&rat(1, 4), &rat(2, 7), 10) {
        let v = l1.eval_exact(&eta)?;
        c.require(v < eta.recip(), || {
            format!("trivial already at {}", to_exact_string(&eta))
        });
    }
    for eta in samples(&rat(2, 7), &rat(1, 2), 10) {
        let v = l1.eval_exact(&eta)?;
        c.require(v >= eta.recip(), || {
            format!("non-trivial at {}", to_exact_string(&eta))
        });
    }
    c.note("nontrivial_samples", "10 in (1/4, 2/7)");
    Ok(c)
}

fn c8() -> Result<Check> {
    let mut c = Check::new();
    let [lo, hi] = montgomery_pieces();
    let cross = crossover_exprs(
        &lo.expr,
        &hi.expr,
        &EtaInterval::open(Rational::zero(), rat(1, 2)),
        &default_width(),
    )?;
    let got = exact_single_root(&cross);
    c.note(
        "crossing",
        got.as_ref().map_or("none".into(), to_exact_string),
    );
    c.require(got == Some(rat(1, 5)), || {
        "branches do not meet at 1/5".into()
    });
    c.require(
        lo.validity.hi == rat(1, 5) && hi.validity.lo == rat(1, 5),
        || "piece boundaries are not at 1/5".into(),
    );
    let both = lo.eval_exact(&rat(1, 5))?;
    c.exact("value_at_1/5", &both);
    Ok(c)
}

fn c9() -> Result<Check> {
    let mut c = Check::new();
    let pieces = montgomery_pieces();
    for k in 1..=100 {
        let eta = rat(k, 201);
        let max_form = montgomery_bound(&eta)?;
        let piece = pieces
            .iter()
            .find(|p| p.is_valid_at(&eta))
            .expect("pieces cover (0, 1/2)");
        let piecewise = piece.eval_exact(&eta)?;
        if max_form != piecewise {
            c.exact("eta", &eta);
            c.expect_eq("max form vs piecewise", &max_form, &piecewise);
            return Ok(c);
        }
    }
    c.note("samples", "k/201, k = 1..100");
    c.note("table", "alpha = 0 point only");
    Ok(c)
}

fn c10() -> Result<Check> {
    let mut c = Check::new();
    let one = Rational::one();
    for k in 1..=50 {
        let eta = rat(k, 101);
        let lhs = int(2) / (&one - &eta) - (int(2) + int(2) * &eta);
        let rhs = int(2) * &eta * &eta / (&one - &eta);
        c.require(lhs == rhs && lhs > Rational::zero(), || {
            format!("identity fails at {}", to_exact_string(&eta))
        });
        // (2/(1-η) - 2 - 2η)/η² = 2/(1-η) → 2 as η → 0
        let coeff = &lhs / (&eta * &eta);
        c.require(coeff == int(2) / (&one - &eta), || {
            format!("quadratic coefficient fails at {}", to_exact_string(&eta))
        });
    }
    c.exact("eta^2_coefficient_at_0", &int(2));
    Ok(c)
}

fn ingham_montgomery_sup(registry: &[BoundRecord]) -> Result<(Option<Rational>, Option<Rational>)> {
    let recs = vec![
        find(registry, "Ingham")?.clone(),
        find(registry, "Montgomery.lo")?.clone(),
        find(registry, "Montgomery.hi")?.clone(),
    ];
    let env = envelope(&recs, &EtaInterval::full())?;
    let s = sup_a(&env)?;
    Ok((s.exact().cloned(), s.at))
}

fn c11(registry: &[BoundRecord]) -> Result<Check> {
    let mut c = Check::new();
    let (sup, at) = ingham_montgomery_sup(registry)?;
    c.note(
        "sup",
        sup.as_ref().map_or("inexact".into(), to_exact_string),
    );
    c.note("at", at.as_ref().map_or("none".into(), to_exact_string));
    c.require(sup == Some(rat(5, 2)), || "supremum is not 5/2".into());
    Ok(c)
}

fn c12(registry: &[BoundRecord]) -> Result<Check> {
    let mut c = Check::new();
    let (sup, _) = ingham_montgomery_sup(registry)?;
    let a = sup.unwrap_or_else(|| rat(5, 2));
    let e = prime_gap_exponent(&a)?;
    c.exact("A", &a);
    c.exact("exponent", &e);
    c.expect_eq("prime-gap exponent", &e, &rat(3, 5));
    Ok(c)
}

fn c13(table: &MuTable) -> Result<Check> {
    let mut c = Check::new();
    let lh = table.clone().with_mode(HypothesisMode::Lindelof);
    for k in 1..=24 {
        let eta = rat(k, 100);
        let v = max_form_bound(2, &eta, &lh)?;
        if !v.is_zero() {
            c.exact("eta", &eta);
            c.expect_eq("l = 2 bound under Lindelof", &v, &Rational::zero());
            return Ok(c);
        }
    }
    c.note("samples", "k/100, k = 1..24");
    c.exact("value", &Rational::zero());
    Ok(c)
}

fn c14() -> Result<Check> {
    let mut c = Check::new();
    let t = MuTable::hardy_littlewood().with_override(rat(1, 2), rat(3, 16))?;
    for k in 1..=49 {
        let eta = rat(k, 100);
        let got = max_form_bound(1, &eta, &t)?;
        let want = int(3) / (int(2) * (Rational::one() - int(2) * &eta));
        if got != want {
            c.exact("eta", &eta);
            c.expect_eq("l = 1 bound with mu(1/2) = 3/16", &got, &want);
            return Ok(c);
        }
    }
    c.exact("mu(1/2)", &rat(3, 16));
    c.note("samples", "k/100, k = 1..49");
    Ok(c)
}

fn c15() -> Result<Check> {
    let mut c = Check::new();
    for c2 in [rat(1, 100), rat(1, 20)] {
        let t = MuTable::hardy_littlewood().with_override(rat(1, 2), rat(1, 4) - &c2)?;
        let rec = max_form_record(1, &t)?;
        let dh = dh_break_range(&rec)?;
        let key = format!("dh_range(c2={})", to_exact_string(&c2));
        c.note(
            &key,
            dh.range.as_ref().map_or("empty".into(), |r| r.to_string()),
        );
        c.require(dh.range.is_some(), || {
            format!("empty range for c2 = {}", to_exact_string(&c2))
        });
    }
    Ok(c)
}

fn run_one(i: usize, registry: &[BoundRecord], table: &MuTable) -> ClaimResult {
    let body = match i {
        0 => c1(table),
        1 => {
            let mut c = Check::new();
            dh_claim(&mut c, registry, "MaxForm-l2", rat(1, 8)).map(|_| c)
        }
        2 => {
            let mut c = Check::new();
            dh_claim(&mut c, registry, "MaxForm-l3", rat(3, 40)).map(|_| c)
        }
        3 => c4(registry),
        4 => {
            let mut c = Check::new();
            dh_claim(&mut c, registry, "MaxForm-l1", rat(1, 8)).map(|_| c)
        }
        5 => c6(registry),
        6 => c7(registry),
        7 => c8(),
        8 => c9(),
        9 => c10(),
        10 => c11(registry),
        11 => c12(registry),
        12 => c13(table),
        13 => c14(),
        _ => c15(),
    };
    let (claim_id, statement, anchor) = CLAIMS[i];
    let (verdict, witness) = match body {
        Ok(c) => {
            let v = if let Some(note) = c.skipped {
                Verdict::Skipped { note }
            } else if let Some(witness) = c.failure {
                Verdict::Fail { witness }
            } else {
                Verdict::ExactPass
            };
            (v, c.witness)
        }
        Err(e) => (
            Verdict::Fail {
                witness: e.to_string(),
            },
            BTreeMap::new(),
        ),
    };
    ClaimResult {
        claim_id,
        statement,
        anchor,
        verdict,
        witness,
    }
}

/// Runs every claim against `registry` and `table`. Results come back in
/// claim order regardless of how the work was scheduled.
pub fn run_all(registry: &[BoundRecord], table: &MuTable) -> Vec<ClaimResult> {
    (0..CLAIM_COUNT)
        .into_par_iter()
        .map(|i| run_one(i, registry, table))
        .collect()
}

/// `[{claim_id, anchor, verdict, witness}, ...]`
pub fn report_json(results: &[ClaimResult]) -> serde_json::Value {
    serde_json::Value::Array(
        results
            .iter()
            .map(|r| {
                serde_json::json!({
                    "claim_id": r.claim_id,
                    "anchor": r.anchor,
                    "verdict": r.verdict,
                    "witness": r.witness,
                })
            })
            .collect(),
    )
}

pub fn any_failed(results: &[ClaimResult]) -> bool {
    results.iter().any(|r| r.verdict.is_fail())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::registry::default_registry;

    #[test]
    fn defaults_all_pass() {
        let res = run_all(&default_registry(), &MuTable::hardy_littlewood());
        assert_eq!(res.len(), CLAIM_COUNT);
        for r in &res {
            assert_eq!(r.verdict, Verdict::ExactPass, "{}", r.summary_line());
        }
    }

    #[test]
    fn deterministic() {
        let a = run_all(&default_registry(), &MuTable::hardy_littlewood());
        let b = run_all(&default_registry(), &MuTable::hardy_littlewood());
        assert_eq!(a, b);
        assert_eq!(report_json(&a), report_json(&b));
    }

    #[test]
    fn corrupted_table_fails_c1() {
        let bad = MuTable::hardy_littlewood()
            .with_override(rat(3, 4), rat(1, 5))
            .unwrap();
        let res = run_all(&default_registry(), &bad);
        assert!(res[0].verdict.is_fail());
        assert!(res[0].witness.contains_key("eta"));
        assert!(any_failed(&res));
        assert!(MuTable::hardy_littlewood()
            .with_override(rat(3, 4), rat(1, 2))
            .is_err());
    }

    #[test]
    fn lindelof_mode() {
        let lh = MuTable::hardy_littlewood().with_mode(HypothesisMode::Lindelof);
        let res = run_all(&default_registry(), &lh);
        assert!(matches!(res[0].verdict, Verdict::Skipped { .. }));
        assert_eq!(res[12].verdict, Verdict::ExactPass);
        assert!(!any_failed(&res));
    }

    #[test]
    fn missing_record_is_a_failure() {
        let res = run_all(&[], &MuTable::hardy_littlewood());
        assert!(res[1].verdict.is_fail());
    }
}
