//! Pointwise minimum of a family of bound records, and the quantities read
//! off it: the range where a bound beats the density hypothesis, and the
//! supremum of the best bound.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::bound::{BoundExpr, BoundRecord, EtaInterval, Value, DEFAULT_BITS};
use crate::exponent::crossover::{crossover, default_width, Crossover, Root};
use crate::exponent::registry::BoundId;
use crate::rational::{
    exact_root, int, midpoint, root_enclosure, sig15, to_exact_string, Rational,
};

pub const TRIVIAL: &str = "Trivial";

/// One piece of an envelope.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub lo: Rational,
    pub hi: Rational,
    /// False when the endpoint is a rational stand-in for an irrational
    /// crossing (within the isolation width of the true breakpoint).
    pub lo_exact: bool,
    pub hi_exact: bool,
    pub winner: String,
    pub expr: BoundExpr,
    /// Records that coincide with the winner on the whole segment.
    pub ties: Vec<String>,
}

impl Segment {
    pub fn midpoint(&self) -> Rational {
        midpoint(&self.lo, &self.hi)
    }

    pub fn is_trivial(&self) -> bool {
        self.winner == TRIVIAL
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Envelope {
    pub interval: EtaInterval,
    pub segments: Vec<Segment>,
}

fn cmp_values(a: &BoundExpr, b: &BoundExpr, x: &Rational) -> Option<Ordering> {
    let mut bits = DEFAULT_BITS;
    while bits <= 1024 {
        let va = a.value(x, bits).ok()?;
        let vb = b.value(x, bits).ok()?;
        if let Some(o) = va.certain_cmp(&vb) {
            return Some(o);
        }
        bits *= 2;
    }
    None
}

/// Exact piecewise minimum of `records` over `interval ⊆ (0, 1/2]`.
///
/// The trivial ceiling 1/η is always added, so every point is covered.
/// Breakpoints are validity endpoints and pairwise crossings; irrational
/// crossings are represented by the midpoint of an isolating interval of
/// width 10^-12 and flagged inexact.
pub fn envelope(records: &[BoundRecord], interval: &EtaInterval) -> Result<Envelope> {
    if interval.is_empty() || !interval.is_subset_of(&EtaInterval::full()) {
        return Err(Error::domain(format!(
            "envelope interval {interval} must be a nonempty subset of (0, 1/2]"
        )));
    }
    let mut recs: Vec<BoundRecord> = records.to_vec();
    if !recs.iter().any(|r| r.name == TRIVIAL) {
        recs.extend(BoundId::Trivial.records());
    }
    recs.sort_by(|a, b| a.name.cmp(&b.name));
    recs.dedup_by(|a, b| a == b);

    let mut breaks: BTreeMap<Rational, bool> = BTreeMap::new();
    breaks.insert(interval.lo.clone(), true);
    breaks.insert(interval.hi.clone(), true);
    for r in &recs {
        for x in [&r.validity.lo, &r.validity.hi] {
            if interval.interior_contains(x) {
                breaks.insert(x.clone(), true);
            }
        }
    }

    let pairs: Vec<(usize, usize)> = (0..recs.len())
        .flat_map(|i| (i + 1..recs.len()).map(move |j| (i, j)))
        .collect();
    let width = default_width();
    let crossings: Vec<Vec<Root>> = pairs
        .par_iter()
        .map(
            |&(i, j)| match crossover(&recs[i], &recs[j], interval, &width) {
                Ok(Crossover::Roots(r)) => r,
                _ => Vec::new(),
            },
        )
        .collect();
    for root in crossings.into_iter().flatten() {
        let x = root.representative();
        if interval.interior_contains(&x) {
            let e = breaks.entry(x).or_insert(false);
            *e |= root.is_exact();
        }
    }

    let pts: Vec<(Rational, bool)> = breaks.into_iter().collect();
    let mut segments: Vec<Segment> = Vec::new();
    for w in pts.windows(2) {
        let ((lo, lo_exact), (hi, hi_exact)) = (&w[0], &w[1]);
        let m = midpoint(lo, hi);
        let mut best: Option<(&BoundRecord, Vec<String>)> = None;
        for r in recs.iter().filter(|r| r.is_valid_at(&m)) {
            best = match best {
                None => Some((r, Vec::new())),
                Some((b, mut ties)) => match cmp_values(&r.expr, &b.expr, &m) {
                    Some(Ordering::Less) => Some((r, Vec::new())),
                    Some(Ordering::Greater) => Some((b, ties)),
                    // equal at an interior point with no crossing in
                    // between: the two agree on the whole piece
                    _ => {
                        ties.push(r.name.clone());
                        Some((b, ties))
                    }
                },
            };
        }
        let (win, ties) = best.expect("the trivial ceiling is valid on (0, 1/2]");
        match segments.last_mut() {
            Some(s) if s.winner == win.name && s.expr == win.expr => {
                s.hi = hi.clone();
                s.hi_exact = *hi_exact;
                for t in ties {
                    if !s.ties.contains(&t) {
                        s.ties.push(t);
                    }
                }
            }
            _ => segments.push(Segment {
                lo: lo.clone(),
                hi: hi.clone(),
                lo_exact: *lo_exact,
                hi_exact: *hi_exact,
                winner: win.name.clone(),
                expr: win.expr.clone(),
                ties,
            }),
        }
    }
    Ok(Envelope {
        interval: interval.clone(),
        segments,
    })
}

impl Envelope {
    /// The segment covering `eta` (the left one at a breakpoint).
    pub fn segment_at(&self, eta: &Rational) -> Option<&Segment> {
        if !self.interval.contains(eta) {
            return None;
        }
        self.segments.iter().find(|s| *eta >= s.lo && *eta <= s.hi)
    }

    pub fn value_at(&self, eta: &Rational) -> Result<Value> {
        let s = self.segment_at(eta).ok_or_else(|| {
            Error::domain(format!(
                "eta = {} is outside the envelope interval {}",
                to_exact_string(eta),
                self.interval
            ))
        })?;
        s.expr.value(eta, DEFAULT_BITS)
    }

    /// Breakpoints between segments.
    pub fn breakpoints(&self) -> Vec<Rational> {
        self.segments.iter().skip(1).map(|s| s.lo.clone()).collect()
    }

    /// The part of the envelope inside `range` (e.g. a σ-range mapped to η).
    pub fn restrict(&self, range: &EtaInterval) -> Result<Envelope> {
        let interval = self.interval.intersect(range);
        if interval.is_empty() {
            return Err(Error::domain(format!(
                "{range} does not meet the envelope interval {}",
                self.interval
            )));
        }
        let segments = self
            .segments
            .iter()
            .filter(|s| s.hi > interval.lo && s.lo < interval.hi)
            .map(|s| {
                let mut s = s.clone();
                if s.lo < interval.lo {
                    s.lo = interval.lo.clone();
                    s.lo_exact = true;
                }
                if s.hi > interval.hi {
                    s.hi = interval.hi.clone();
                    s.hi_exact = true;
                }
                s
            })
            .collect();
        Ok(Envelope { interval, segments })
    }

    /// `eta_lo_num,eta_lo_den,eta_hi_num,eta_hi_den,winner_name,expr_repr,value_at_midpoint_decimal`
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "eta_lo_num",
            "eta_lo_den",
            "eta_hi_num",
            "eta_hi_den",
            "winner_name",
            "expr_repr",
            "value_at_midpoint_decimal",
        ])
        .expect("in-memory write");
        for s in &self.segments {
            let v = s
                .expr
                .value(&s.midpoint(), DEFAULT_BITS)
                .map(|v| sig15(v.approx()))
                .unwrap_or_default();
            w.write_record([
                s.lo.numer().to_string(),
                s.lo.denom().to_string(),
                s.hi.numer().to_string(),
                s.hi.denom().to_string(),
                s.winner.clone(),
                s.expr.to_string(),
                v,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory")).expect("utf8")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SegmentJson {
    pub eta_lo: String,
    pub eta_hi: String,
    pub exact_endpoints: bool,
    pub winner: String,
    pub expr: String,
    pub value_at_midpoint: String,
    pub ties: Vec<String>,
}

impl Envelope {
    pub fn to_json(&self) -> serde_json::Value {
        let segs: Vec<SegmentJson> = self
            .segments
            .iter()
            .map(|s| SegmentJson {
                eta_lo: to_exact_string(&s.lo),
                eta_hi: to_exact_string(&s.hi),
                exact_endpoints: s.lo_exact && s.hi_exact,
                winner: s.winner.clone(),
                expr: s.expr.to_string(),
                value_at_midpoint: s
                    .expr
                    .value(&s.midpoint(), DEFAULT_BITS)
                    .map(|v| v.to_string())
                    .unwrap_or_default(),
                ties: s.ties.clone(),
            })
            .collect();
        serde_json::json!({ "interval": self.interval.to_string(), "segments": segs })
    }
}

/// The maximal sub-interval of a record's validity where its bound is at
/// most 2, i.e. where it implies the density hypothesis.
#[derive(Debug, Clone, PartialEq)]
pub struct DhRange {
    pub range: Option<EtaInterval>,
    /// False when an endpoint is a rational inner approximation of an
    /// irrational threshold.
    pub exact: bool,
}

pub fn dh_break_range(record: &BoundRecord) -> Result<DhRange> {
    let dom = record.validity.intersect(&EtaInterval::full());
    if dom.is_empty() {
        return Err(Error::domain(format!(
            "{} has no validity inside (0, 1/2]",
            record.name
        )));
    }
    let two = int(2);
    let threshold: Option<(Rational, bool)> = match &record.expr {
        BoundExpr::LinearFractional { a0, a1, b0, b1 } => {
            let lead = a1 - &two * b1;
            if lead.is_zero() {
                None
            } else {
                Some(((&two * b0 - a0) / lead, true))
            }
        }
        BoundExpr::PowerLaw { c, p } => {
            // c·η^p = 2  ⇔  η = (2/c)^(1/p)
            let base = &two / c;
            let (m, n) = (p.numer().clone(), p.denom().clone());
            let m: u32 = m
                .try_into()
                .map_err(|_| Error::domain("dh range needs a positive power-law exponent"))?;
            let raised = num_traits::pow(base, n.try_into().unwrap_or(1usize));
            match exact_root(&raised, m) {
                Some(r) => Some((r, true)),
                None => {
                    let (lo, _) = root_enclosure(&raised, m, 128);
                    Some((lo, false))
                }
            }
        }
    };
    let mono = record.expr.monotonicity();
    let (range, exact) = match (threshold, mono) {
        // no crossing of the level 2 (or constant): all or nothing
        (None, _) | (Some(_), 0) => {
            let m = dom.midpoint();
            let v = record.expr.value(&m, DEFAULT_BITS)?;
            let ok = v.hi() <= &two;
            (ok.then_some(dom.clone()), true)
        }
        (Some((r, exact)), 1) => {
            let cut = EtaInterval::new(dom.lo.clone(), r, dom.lo_closed, true);
            (Some(dom.intersect(&cut)), exact)
        }
        (Some((r, exact)), _) => {
            let cut = EtaInterval::new(r, dom.hi.clone(), true, dom.hi_closed);
            (Some(dom.intersect(&cut)), exact)
        }
    };
    Ok(DhRange {
        range: range.filter(|r| !r.is_empty()),
        exact,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum SupValue {
    Finite(Value),
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SupA {
    pub value: SupValue,
    /// η at which the supremum is attained or approached.
    pub at: Option<Rational>,
    /// True when some segment is won by the trivial ceiling.
    pub trivial: bool,
}

/// Supremum of the envelope over its interval. Each segment's form is
/// monotone there, so the supremum is read off the segment endpoints.
pub fn sup_a(env: &Envelope) -> Result<SupA> {
    let mut best: Option<(Value, Rational)> = None;
    let trivial = env.segments.iter().any(Segment::is_trivial);
    for s in &env.segments {
        if let Some(p) = s.expr.pole() {
            if p > s.lo && p < s.hi {
                return Err(Error::domain(format!(
                    "{} has a pole inside its envelope segment",
                    s.winner
                )));
            }
        }
        for x in [&s.lo, &s.hi] {
            let Some(v) = s.expr.limit(x, DEFAULT_BITS) else {
                return Ok(SupA {
                    value: SupValue::Unbounded,
                    at: Some(x.clone()),
                    trivial,
                });
            };
            let replace = match &best {
                None => true,
                Some((b, _)) => match v.certain_cmp(b) {
                    Some(Ordering::Greater) => true,
                    Some(_) => false,
                    None => v.hi() > b.hi(),
                },
            };
            if replace {
                best = Some((v, x.clone()));
            }
        }
    }
    let (v, at) = best.ok_or_else(|| Error::domain("empty envelope"))?;
    Ok(SupA {
        value: SupValue::Finite(v),
        at: Some(at),
        trivial,
    })
}

impl SupA {
    pub fn exact(&self) -> Option<&Rational> {
        match &self.value {
            SupValue::Finite(v) => v.exact(),
            SupValue::Unbounded => None,
        }
    }
}

/// The smallest η from which `record` is no better than the trivial bound,
/// i.e. where it meets 1/η. None if it stays below 1/η on its validity.
pub fn trivial_from(record: &BoundRecord) -> Result<Option<Rational>> {
    let trivial = BoundId::Trivial.records().remove(0);
    let c = crossover(record, &trivial, &EtaInterval::full(), &default_width())?;
    Ok(c.roots().first().map(Root::representative))
}

/// σ = 1 - η.
pub fn sigma_of(eta: &Rational) -> Rational {
    Rational::one() - eta
}
