//! Bound expressions in η = 1 - σ, validity intervals, and named records.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{
    int, midpoint, powi, rat, root_enclosure, to_exact_string, to_f64, Rational,
};

/// An interval of η values with exact endpoints and open/closed ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl EtaInterval {
    pub fn new(lo: Rational, hi: Rational, lo_closed: bool, hi_closed: bool) -> Self {
        EtaInterval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }

    /// `(lo, hi)`
    pub fn open(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, hi, false, false)
    }

    /// `(lo, hi]`
    pub fn open_closed(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, hi, false, true)
    }

    /// `[lo, hi]`
    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, hi, true, true)
    }

    /// The full parameter range `(0, 1/2]`, i.e. `σ ∈ [1/2, 1)`.
    pub fn full() -> Self {
        Self::open_closed(Rational::zero(), rat(1, 2))
    }

    pub fn is_empty(&self) -> bool {
        match self.lo.cmp(&self.hi) {
            Ordering::Greater => true,
            Ordering::Equal => !(self.lo_closed && self.hi_closed),
            Ordering::Less => false,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed {
            *x >= self.lo
        } else {
            *x > self.lo
        };
        let below = if self.hi_closed {
            *x <= self.hi
        } else {
            *x < self.hi
        };
        above && below
    }

    /// True when `x` lies in the open interior `(lo, hi)`.
    pub fn interior_contains(&self, x: &Rational) -> bool {
        *x > self.lo && *x < self.hi
    }

    pub fn intersect(&self, other: &EtaInterval) -> EtaInterval {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Greater => (self.lo.clone(), self.lo_closed),
            Ordering::Less => (other.lo.clone(), other.lo_closed),
            Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            Ordering::Less => (self.hi.clone(), self.hi_closed),
            Ordering::Greater => (other.hi.clone(), other.hi_closed),
            Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        EtaInterval::new(lo, hi, lo_closed, hi_closed)
    }

    pub fn is_subset_of(&self, other: &EtaInterval) -> bool {
        self.is_empty() || self.intersect(other) == *self
    }

    pub fn midpoint(&self) -> Rational {
        midpoint(&self.lo, &self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// `k` evenly spaced interior points.
    pub fn interior_samples(&self, k: usize) -> Vec<Rational> {
        let step = self.width() / int(k as i64 + 1);
        (1..=k).map(|i| &self.lo + &step * int(i as i64)).collect()
    }

    /// Maps the σ-range `[s_lo, s_hi]` to η = 1 - σ.
    pub fn from_sigma(s_lo: &Rational, s_hi: &Rational, lo_closed: bool, hi_closed: bool) -> Self {
        let one = Rational::one();
        EtaInterval::new(&one - s_hi, &one - s_lo, hi_closed, lo_closed)
    }
}

impl fmt::Display for EtaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            to_exact_string(&self.lo),
            to_exact_string(&self.hi),
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

impl Serialize for EtaInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An exact value or a certified enclosure `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Exact(Rational),
    Enclosure { lo: Rational, hi: Rational },
}

impl Value {
    pub fn lo(&self) -> &Rational {
        match self {
            Value::Exact(v) => v,
            Value::Enclosure { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            Value::Exact(v) => v,
            Value::Enclosure { hi, .. } => hi,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(v) => Some(v),
            Value::Enclosure { .. } => None,
        }
    }

    pub fn approx(&self) -> f64 {
        to_f64(&midpoint(self.lo(), self.hi()))
    }

    /// Ordering when the two values are certainly separated (or both exact).
    pub fn certain_cmp(&self, other: &Value) -> Option<Ordering> {
        if let (Value::Exact(a), Value::Exact(b)) = (self, other) {
            return Some(a.cmp(b));
        }
        if self.hi() < other.lo() {
            Some(Ordering::Less)
        } else if self.lo() > other.hi() {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(v) => write!(f, "{}", to_exact_string(v)),
            Value::Enclosure { lo, hi } => write!(
                f,
                "[{}, {}] (~{:.12e})",
                to_exact_string(lo),
                to_exact_string(hi),
                self.approx()
            ),
        }
    }
}

/// Symbolic bound on B(η).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundExpr {
    /// `(a0 + a1·η) / (b0 + b1·η)`
    LinearFractional {
        a0: Rational,
        a1: Rational,
        b0: Rational,
        b1: Rational,
    },
    /// `c · η^p`
    PowerLaw { c: Rational, p: Rational },
}

/// Default bit precision for power-law enclosures.
pub const DEFAULT_BITS: u32 = 64;

impl BoundExpr {
    pub fn linear_fractional(a0: Rational, a1: Rational, b0: Rational, b1: Rational) -> Self {
        assert!(
            !(b0.is_zero() && b1.is_zero()),
            "linear-fractional denominator is identically zero"
        );
        BoundExpr::LinearFractional { a0, a1, b0, b1 }
    }

    pub fn constant(c: Rational) -> Self {
        Self::linear_fractional(c, Rational::zero(), Rational::one(), Rational::zero())
    }

    /// `c / (b0 + b1·η)`
    pub fn reciprocal_linear(c: Rational, b0: Rational, b1: Rational) -> Self {
        Self::linear_fractional(c, Rational::zero(), b0, b1)
    }

    pub fn power_law(c: Rational, p: Rational) -> Self {
        BoundExpr::PowerLaw { c, p }
    }

    pub fn is_linear_fractional(&self) -> bool {
        matches!(self, BoundExpr::LinearFractional { .. })
    }

    /// Exact value. Fails for a zero denominator, and for power laws whose
    /// value at `eta` is irrational.
    pub fn eval_exact(&self, eta: &Rational) -> Result<Rational> {
        match self {
            BoundExpr::LinearFractional { a0, a1, b0, b1 } => {
                let den = b0 + b1 * eta;
                if den.is_zero() {
                    return Err(Error::domain(format!(
                        "denominator of {self} vanishes at eta = {}",
                        to_exact_string(eta)
                    )));
                }
                Ok((a0 + a1 * eta) / den)
            }
            BoundExpr::PowerLaw { c, p } => {
                let (base, k) = power_base(eta, p)?;
                crate::rational::exact_root(&base, k)
                    .map(|r| c * r)
                    .ok_or_else(|| {
                        Error::domain(format!(
                            "{self} is irrational at eta = {}; use an enclosure",
                            to_exact_string(eta)
                        ))
                    })
            }
        }
    }

    /// Exact value when available, otherwise an enclosure of width about
    /// `|c|·2^-bits`.
    pub fn value(&self, eta: &Rational, bits: u32) -> Result<Value> {
        match self {
            BoundExpr::LinearFractional { .. } => self.eval_exact(eta).map(Value::Exact),
            BoundExpr::PowerLaw { c, p } => {
                let (base, k) = power_base(eta, p)?;
                if let Some(r) = crate::rational::exact_root(&base, k) {
                    return Ok(Value::Exact(c * r));
                }
                let (lo, hi) = root_enclosure(&base, k, bits);
                let (lo, hi) = (c * lo, c * hi);
                Ok(if lo <= hi {
                    Value::Enclosure { lo, hi }
                } else {
                    Value::Enclosure { lo: hi, hi: lo }
                })
            }
        }
    }

    /// Sign of dB/dη, constant wherever the expression is defined on an
    /// interval avoiding its pole: +1 nondecreasing, -1 nonincreasing,
    /// 0 constant.
    pub fn monotonicity(&self) -> i8 {
        let s = match self {
            BoundExpr::LinearFractional { a0, a1, b0, b1 } => a1 * b0 - a0 * b1,
            BoundExpr::PowerLaw { c, p } => c * p,
        };
        if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            0
        }
    }

    /// The η where the denominator vanishes, if any.
    pub fn pole(&self) -> Option<Rational> {
        match self {
            BoundExpr::LinearFractional { b0, b1, .. } if !b1.is_zero() => Some(-(b0 / b1)),
            BoundExpr::PowerLaw { p, .. } if p.is_negative() => Some(Rational::zero()),
            _ => None,
        }
    }

    /// Limit of the expression as η → `at` from inside `(lo, hi)`, or None
    /// if it diverges there.
    pub fn limit(&self, at: &Rational, bits: u32) -> Option<Value> {
        if self.pole().as_ref() == Some(at) {
            // 0/0 is impossible for a non-degenerate LF at a pole unless the
            // numerator also vanishes there, in which case it's the constant a1/b1
            if let BoundExpr::LinearFractional { a0, a1, b1, .. } = self {
                if (a0 + a1 * at).is_zero() {
                    return Some(Value::Exact(a1 / b1));
                }
            }
            return None;
        }
        if let BoundExpr::PowerLaw { p, .. } = self {
            if at.is_zero() && p.is_positive() {
                return Some(Value::Exact(Rational::zero()));
            }
        }
        self.value(at, bits).ok()
    }

    pub fn approx(&self, eta: f64) -> f64 {
        match self {
            BoundExpr::LinearFractional { a0, a1, b0, b1 } => {
                (to_f64(a0) + to_f64(a1) * eta) / (to_f64(b0) + to_f64(b1) * eta)
            }
            BoundExpr::PowerLaw { c, p } => to_f64(c) * eta.powf(to_f64(p)),
        }
    }
}

/// Splits `eta^p` (p = m/n) into `(eta^m, n)`.
fn power_base(eta: &Rational, p: &Rational) -> Result<(Rational, u32)> {
    if eta.is_negative() || (eta.is_zero() && !p.is_positive()) {
        return Err(Error::domain(format!(
            "power law undefined at eta = {}",
            to_exact_string(eta)
        )));
    }
    let m = p
        .numer()
        .to_i64()
        .ok_or_else(|| Error::domain("power-law exponent numerator too large"))?;
    let n = p
        .denom()
        .to_u32()
        .ok_or_else(|| Error::domain("power-law exponent denominator too large"))?;
    if eta.is_zero() {
        return Ok((Rational::zero(), n));
    }
    Ok((powi(eta, m), n))
}

fn term(coef: &Rational, with_eta: bool) -> String {
    let c = to_exact_string(coef);
    if with_eta {
        format!("{c}*eta")
    } else {
        c
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundExpr::LinearFractional { a0, a1, b0, b1 } => {
                let side = |x0: &Rational, x1: &Rational| match (x0.is_zero(), x1.is_zero()) {
                    (_, true) => term(x0, false),
                    (true, false) => term(x1, true),
                    (false, false) => format!("{} + {}", term(x0, false), term(x1, true)),
                };
                write!(f, "({})/({})", side(a0, a1), side(b0, b1))
            }
            BoundExpr::PowerLaw { c, p } => {
                write!(f, "{}*eta^({})", to_exact_string(c), to_exact_string(p))
            }
        }
    }
}

/// A named bound `B(η) ≤ expr(η)` valid for η in `validity`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundRecord {
    pub name: String,
    pub expr: BoundExpr,
    pub validity: EtaInterval,
    pub citation: String,
}

impl BoundRecord {
    pub fn new(
        name: impl Into<String>,
        expr: BoundExpr,
        validity: EtaInterval,
        citation: impl Into<String>,
    ) -> Self {
        BoundRecord {
            name: name.into(),
            expr,
            validity,
            citation: citation.into(),
        }
    }

    pub fn is_valid_at(&self, eta: &Rational) -> bool {
        self.validity.contains(eta)
    }

    fn check(&self, eta: &Rational) -> Result<()> {
        if !self.is_valid_at(eta) {
            return Err(Error::domain(format!(
                "{} is only asserted for eta in {}, got {}",
                self.name,
                self.validity,
                to_exact_string(eta)
            )));
        }
        Ok(())
    }

    pub fn eval_exact(&self, eta: &Rational) -> Result<Rational> {
        self.check(eta)?;
        self.expr.eval_exact(eta)
    }

    /// Value at `eta`; an error (never +∞) outside the validity interval.
    pub fn value(&self, eta: &Rational) -> Result<Value> {
        self.value_bits(eta, DEFAULT_BITS)
    }

    pub fn value_bits(&self, eta: &Rational, bits: u32) -> Result<Value> {
        self.check(eta)?;
        self.expr.value(eta, bits)
    }
}
